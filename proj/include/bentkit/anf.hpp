// SPDX-License-Identifier: Apache-2.0

/*!
  \file anf.hpp
  \brief Algebraic normal form via the binary Moebius transform

  Coefficient a_I sits at the table index whose set bits are the variables of
  I, so the monomial x_1 x_2 of a 3-variable function is index 0b110.
*/

#pragma once

#include <algorithm>
#include <array>

#include "boolean_function.hpp"

namespace bentkit
{

class AnfPolynomial
{
public:
  explicit AnfPolynomial( BooleanFunction coefficients ) : coeffs_( std::move( coefficients ) ) {}

  unsigned num_vars() const noexcept { return coeffs_.num_vars(); }

  /// a_I for the monomial whose variable set is encoded by I.
  bool coefficient( point_t monomial ) const { return coeffs_.at( monomial ); }

  const BooleanFunction& coefficients() const noexcept { return coeffs_; }

  /// Algebraic degree; the zero polynomial has degree 0.
  unsigned degree() const noexcept
  {
    unsigned d = 0;
    for ( point_t I = 0; I < coeffs_.size(); ++I )
    {
      if ( coeffs_[I] )
      {
        d = std::max( d, weight_of( I ) );
      }
    }
    return d;
  }

  /// Size of the longest monomial containing x_j; 0 when x_j does not occur.
  unsigned degree_of_variable( unsigned j ) const
  {
    const auto n = num_vars();
    if ( j < 1 || j > n )
    {
      throw dimension_error( "variable index out of range" );
    }
    const auto m = variable_mask( n, j );
    unsigned d = 0;
    for ( point_t I = 0; I < coeffs_.size(); ++I )
    {
      if ( ( I & m ) && coeffs_[I] )
      {
        d = std::max( d, weight_of( I ) );
      }
    }
    return d;
  }

  friend bool operator==( const AnfPolynomial&, const AnfPolynomial& ) = default;

private:
  BooleanFunction coeffs_;
};

namespace detail
{

/// In-place binary Moebius transform on a packed table; it is an involution.
inline BooleanFunction moebius_packed( BooleanFunction f )
{
  static constexpr std::array<std::uint64_t, 6> low_half = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
      0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull };

  const auto n = f.num_vars();
  auto words = f.words();
  const unsigned in_word = std::min( n, 6u );
  for ( auto& w : words )
  {
    for ( auto s = 0u; s < in_word; ++s )
    {
      w ^= ( w & low_half[s] ) << ( 1u << s );
    }
  }
  for ( std::size_t stride = 1; stride < words.size(); stride <<= 1 )
  {
    for ( std::size_t i = 0; i < words.size(); i += stride << 1 )
    {
      for ( std::size_t k = i; k < i + stride; ++k )
      {
        words[k + stride] ^= words[k];
      }
    }
  }
  return BooleanFunction::from_words( n, std::move( words ) );
}

} // namespace detail

inline AnfPolynomial mobius( const BooleanFunction& f )
{
  return AnfPolynomial( detail::moebius_packed( f ) );
}

inline BooleanFunction mobius_inv( const AnfPolynomial& a )
{
  return detail::moebius_packed( a.coefficients() );
}

inline unsigned degree( const BooleanFunction& f )
{
  return mobius( f ).degree();
}

inline unsigned degree_of_variable( const BooleanFunction& f, unsigned j )
{
  return mobius( f ).degree_of_variable( j );
}

} // namespace bentkit
