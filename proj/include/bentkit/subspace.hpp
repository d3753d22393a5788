// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "boolean_function.hpp"

namespace bentkit
{

/*! \brief A linear subspace of F_2^k held as a reduced row echelon basis

  Vectors use the core index encoding, so the pivot of a row is its most
  significant set bit (the lowest-numbered coordinate). The basis is sorted
  by decreasing pivot and every pivot column is zero in all other rows,
  which makes it unique for a given subspace.
*/
class LinearSubspace
{
public:
  /// The zero subspace of F_2^k.
  explicit LinearSubspace( unsigned k ) : k_( k )
  {
    if ( k < 1 || k > max_vars )
    {
      throw dimension_error( "ambient dimension out of range" );
    }
  }

  static LinearSubspace span( unsigned k, const std::vector<point_t>& generators )
  {
    LinearSubspace s( k );
    for ( auto v : generators )
    {
      s.insert( v );
    }
    return s;
  }

  static LinearSubspace full( unsigned k )
  {
    std::vector<point_t> gens;
    for ( auto j = 1u; j <= k; ++j )
    {
      gens.push_back( variable_mask( k, j ) );
    }
    return span( k, gens );
  }

  unsigned ambient_dimension() const noexcept { return k_; }
  unsigned dimension() const noexcept { return static_cast<unsigned>( basis_.size() ); }
  const std::vector<point_t>& basis() const noexcept { return basis_; }

  bool contains( point_t v ) const
  {
    check( v );
    return reduce( v ) == 0;
  }

  /// All 2^dim elements; element c is the combination selected by the bits of c.
  std::vector<point_t> elements() const
  {
    std::vector<point_t> out;
    out.reserve( std::size_t{ 1 } << dimension() );
    for ( point_t c = 0; c < ( point_t{ 1 } << dimension() ); ++c )
    {
      out.push_back( combination( c ) );
    }
    return out;
  }

  /// Sum of basis rows selected by c (bit t picks row t).
  point_t combination( point_t c ) const noexcept
  {
    point_t v = 0;
    for ( std::size_t t = 0; t < basis_.size(); ++t )
    {
      if ( ( c >> t ) & 1 )
      {
        v ^= basis_[t];
      }
    }
    return v;
  }

  /// E^perp = { u : u.v = 0 for all v in E }.
  LinearSubspace orthogonal_complement() const
  {
    // Free columns of the echelon basis give the kernel basis directly.
    point_t pivots = 0;
    for ( auto r : basis_ )
    {
      pivots |= pivot_of( r );
    }
    std::vector<point_t> gens;
    for ( auto j = 1u; j <= k_; ++j )
    {
      const auto col = variable_mask( k_, j );
      if ( pivots & col )
      {
        continue;
      }
      point_t u = col;
      for ( auto r : basis_ )
      {
        if ( r & col )
        {
          u |= pivot_of( r );
        }
      }
      gens.push_back( u );
    }
    return span( k_, gens );
  }

  /// Indicator 1_E as a k-variable Boolean function.
  BooleanFunction indicator() const
  {
    BooleanFunction f( k_ );
    for ( auto v : elements() )
    {
      f.set( v, true );
    }
    return f;
  }

  friend bool operator==( const LinearSubspace&, const LinearSubspace& ) = default;

private:
  static point_t pivot_of( point_t v ) noexcept { return std::bit_floor( v ); }

  void check( point_t v ) const
  {
    if ( v >> k_ )
    {
      throw dimension_error( "vector does not lie in F_2^" + std::to_string( k_ ) );
    }
  }

  point_t reduce( point_t v ) const noexcept
  {
    for ( auto r : basis_ )
    {
      if ( v & pivot_of( r ) )
      {
        v ^= r;
      }
    }
    return v;
  }

  void insert( point_t v )
  {
    check( v );
    v = reduce( v );
    if ( v == 0 )
    {
      return;
    }
    const auto p = pivot_of( v );
    for ( auto& r : basis_ )
    {
      if ( r & p )
      {
        r ^= v;
      }
    }
    basis_.push_back( v );
    std::sort( basis_.begin(), basis_.end(), std::greater<>() );
  }

  unsigned k_;
  std::vector<point_t> basis_;
};

} // namespace bentkit
