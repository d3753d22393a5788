// SPDX-License-Identifier: Apache-2.0

/*!
  \file boolean_function.hpp
  \brief Bit-packed truth tables and the elementary function algebra

  A function f : F_2^n -> F_2 is stored as its 2^n output bits. The input
  x = (x_1, ..., x_n) is encoded as the table index

      i = sum_j x_j * 2^(n-j)

  so x_1 is the most significant index bit and x_n varies fastest. Bit i of
  the table lives in word i / 64 at position i % 64.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace bentkit
{

/// Largest supported number of variables (2^26 bits = 8 MiB per table).
inline constexpr unsigned max_vars = 26;

/// A vector of F_2^n in index encoding.
using point_t = std::uint64_t;

/// Inner product a.b over F_2.
inline bool dot( point_t a, point_t b ) noexcept
{
  return std::popcount( a & b ) & 1;
}

/// Hamming weight of a vector.
inline unsigned weight_of( point_t a ) noexcept
{
  return static_cast<unsigned>( std::popcount( a ) );
}

/// Index-bit mask of variable x_j (1-based) in an n-variable encoding.
inline point_t variable_mask( unsigned n, unsigned j ) noexcept
{
  return point_t{ 1 } << ( n - j );
}

/// Encodes a 0/1 vector (x_1, ..., x_n) as a table index.
inline point_t encode( std::span<const std::uint8_t> x )
{
  point_t i = 0;
  for ( auto b : x )
  {
    if ( b > 1 )
    {
      throw dimension_error( "vector entries must be 0 or 1" );
    }
    i = ( i << 1 ) | b;
  }
  return i;
}

/// Decodes a table index into the vector (x_1, ..., x_n).
inline std::vector<std::uint8_t> decode( point_t i, unsigned n )
{
  std::vector<std::uint8_t> x( n );
  for ( auto j = 0u; j < n; ++j )
  {
    x[j] = ( i >> ( n - 1 - j ) ) & 1;
  }
  return x;
}

class BooleanFunction
{
public:
  /// The constant zero function in n variables.
  explicit BooleanFunction( unsigned n ) : n_( n )
  {
    if ( n < 1 || n > max_vars )
    {
      throw dimension_error( "number of variables must be in [1, 26], got " + std::to_string( n ) );
    }
    words_.assign( word_count( n ), 0u );
  }

  /// Builds f from a predicate over table indices.
  template<typename Fn>
  static BooleanFunction from_predicate( unsigned n, Fn&& fn )
  {
    BooleanFunction f( n );
    const auto size = f.size();
    for ( point_t i = 0; i < size; ++i )
    {
      if ( fn( i ) )
      {
        f.words_[i >> 6] |= std::uint64_t{ 1 } << ( i & 63 );
      }
    }
    return f;
  }

  /// Adopts packed words (bit i at word i / 64, position i % 64).
  static BooleanFunction from_words( unsigned n, std::vector<std::uint64_t> words )
  {
    BooleanFunction f( n );
    if ( words.size() != f.words_.size() )
    {
      throw dimension_error( "packed word count does not match 2^n" );
    }
    f.words_ = std::move( words );
    f.mask_tail();
    return f;
  }

  static BooleanFunction constant( unsigned n, bool value )
  {
    BooleanFunction f( n );
    if ( value )
    {
      std::fill( f.words_.begin(), f.words_.end(), ~std::uint64_t{ 0 } );
      f.mask_tail();
    }
    return f;
  }

  /// The coordinate function x_j (1-based).
  static BooleanFunction variable( unsigned n, unsigned j )
  {
    if ( j < 1 || j > n )
    {
      throw dimension_error( "variable index out of range" );
    }
    const auto m = variable_mask( n, j );
    return from_predicate( n, [m]( point_t i ) { return ( i & m ) != 0; } );
  }

  /// The linear function x -> omega.x.
  static BooleanFunction linear( unsigned n, point_t omega )
  {
    return from_predicate( n, [omega]( point_t i ) { return dot( i, omega ); } );
  }

  unsigned num_vars() const noexcept { return n_; }
  point_t size() const noexcept { return point_t{ 1 } << n_; }

  bool operator[]( point_t i ) const noexcept
  {
    return ( words_[i >> 6] >> ( i & 63 ) ) & 1;
  }

  bool at( point_t i ) const
  {
    if ( i >= size() )
    {
      throw dimension_error( "table index out of range" );
    }
    return ( *this )[i];
  }

  void set( point_t i, bool value )
  {
    auto& w = words_.at( i >> 6 );
    const auto bit = std::uint64_t{ 1 } << ( i & 63 );
    w = value ? ( w | bit ) : ( w & ~bit );
  }

  void flip( point_t i ) { words_.at( i >> 6 ) ^= std::uint64_t{ 1 } << ( i & 63 ); }

  std::uint64_t weight() const noexcept
  {
    std::uint64_t w = 0;
    for ( auto word : words_ )
    {
      w += std::popcount( word );
    }
    return w;
  }

  bool is_balanced() const noexcept { return 2 * weight() == size(); }
  bool is_constant() const noexcept
  {
    const auto w = weight();
    return w == 0 || w == size();
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  BooleanFunction operator~() const
  {
    BooleanFunction r( *this );
    for ( auto& w : r.words_ )
    {
      w = ~w;
    }
    r.mask_tail();
    return r;
  }

  BooleanFunction& operator^=( const BooleanFunction& o )
  {
    require_same_arity( o );
    for ( auto k = 0u; k < words_.size(); ++k )
    {
      words_[k] ^= o.words_[k];
    }
    return *this;
  }

  BooleanFunction& operator&=( const BooleanFunction& o )
  {
    require_same_arity( o );
    for ( auto k = 0u; k < words_.size(); ++k )
    {
      words_[k] &= o.words_[k];
    }
    return *this;
  }

  friend BooleanFunction operator^( BooleanFunction a, const BooleanFunction& b ) { return a ^= b; }
  friend BooleanFunction operator&( BooleanFunction a, const BooleanFunction& b ) { return a &= b; }

  friend bool operator==( const BooleanFunction&, const BooleanFunction& ) = default;

private:
  static std::size_t word_count( unsigned n ) { return n >= 6 ? std::size_t{ 1 } << ( n - 6 ) : 1u; }

  void mask_tail()
  {
    if ( n_ < 6 )
    {
      words_[0] &= ( std::uint64_t{ 1 } << ( std::uint64_t{ 1 } << n_ ) ) - 1;
    }
  }

  void require_same_arity( const BooleanFunction& o ) const
  {
    if ( o.n_ != n_ )
    {
      throw dimension_error( "operands have " + std::to_string( n_ ) + " and " + std::to_string( o.n_ ) + " variables" );
    }
  }

  unsigned n_;
  std::vector<std::uint64_t> words_;
};

enum class combine_kind
{
  xor_op,
  and_op
};

inline bool evaluate( const BooleanFunction& f, std::span<const std::uint8_t> x )
{
  if ( x.size() != f.num_vars() )
  {
    throw dimension_error( "point has " + std::to_string( x.size() ) + " coordinates, function has " +
                           std::to_string( f.num_vars() ) + " variables" );
  }
  return f[encode( x )];
}

inline BooleanFunction combine( const BooleanFunction& f, const BooleanFunction& g, combine_kind kind )
{
  return kind == combine_kind::xor_op ? f ^ g : f & g;
}

/// x -> f(x + a).
inline BooleanFunction translate( const BooleanFunction& f, point_t a )
{
  if ( a >= f.size() )
  {
    throw dimension_error( "translation vector out of range" );
  }
  return BooleanFunction::from_predicate( f.num_vars(), [&]( point_t i ) { return f[i ^ a]; } );
}

/// Derivative D_a f(x) = f(x) + f(x + a).
inline BooleanFunction derivative( const BooleanFunction& f, point_t a )
{
  if ( a >= f.size() )
  {
    throw dimension_error( "derivative direction out of range" );
  }
  return BooleanFunction::from_predicate( f.num_vars(), [&]( point_t i ) { return f[i] != f[i ^ a]; } );
}

inline BooleanFunction derivative( const BooleanFunction& f, std::span<const std::uint8_t> a )
{
  if ( a.size() != f.num_vars() )
  {
    throw dimension_error( "derivative direction has wrong length" );
  }
  return derivative( f, encode( a ) );
}

/*! \brief Inserts bit b at variable position j of an (n-1)-variable index

  Maps the reduced index of (x_1..x_{j-1}, x_{j+1}..x_n) back to the full
  n-variable index with x_j = b.
*/
inline point_t insert_bit( point_t reduced, unsigned n, unsigned j, bool b ) noexcept
{
  const unsigned low = n - j; // number of variables after x_j
  const point_t low_mask = ( point_t{ 1 } << low ) - 1;
  return ( ( reduced & ~low_mask ) << 1 ) | ( point_t{ b } << low ) | ( reduced & low_mask );
}

/// Drops variable position j from an n-variable index.
inline point_t remove_bit( point_t full, unsigned n, unsigned j ) noexcept
{
  const unsigned low = n - j;
  const point_t low_mask = ( point_t{ 1 } << low ) - 1;
  return ( ( full >> ( low + 1 ) ) << low ) | ( full & low_mask );
}

/// f with x_j fixed to b, as a function of the remaining n-1 variables in order.
inline BooleanFunction restrict( const BooleanFunction& f, unsigned j, bool b )
{
  const auto n = f.num_vars();
  if ( n < 2 )
  {
    throw dimension_error( "cannot restrict a 1-variable function" );
  }
  if ( j < 1 || j > n )
  {
    throw dimension_error( "restriction index " + std::to_string( j ) + " out of range [1, " + std::to_string( n ) + "]" );
  }
  return BooleanFunction::from_predicate( n - 1, [&]( point_t i ) { return f[insert_bit( i, n, j, b )]; } );
}

/// Juxtaposes two functions on disjoint variable blocks: (x, y) -> op(f(x), g(y)).
template<typename Op>
BooleanFunction block_function( unsigned nx, unsigned ny, Op&& op )
{
  const point_t ymask = ( point_t{ 1 } << ny ) - 1;
  return BooleanFunction::from_predicate( nx + ny, [&]( point_t i ) { return op( i >> ny, i & ymask ); } );
}

} // namespace bentkit
