// SPDX-License-Identifier: Apache-2.0

/*!
  \file primary.hpp
  \brief Primary bent builders: Maiorana-McFarland, PS_ap and class D

  All builders place the "affine" block x first (most significant index
  bits) and the block y that feeds the map second.
*/

#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "../analysis.hpp"
#include "../galois.hpp"
#include "../subspace.hpp"

namespace bentkit
{

/*! \brief A map F_2^s -> F_2^r given by its table of images

  images[y] is the image of y, both in core index encoding. Bijective maps
  (r = s) are what the bent builders call a Boolean permutation; general maps
  are accepted by the plain Maiorana-McFarland builder.
*/
class PermutationMap
{
public:
  PermutationMap( unsigned domain_dim, unsigned image_dim, std::vector<point_t> images )
      : domain_dim_( domain_dim ), image_dim_( image_dim ), images_( std::move( images ) )
  {
    if ( domain_dim < 1 || image_dim < 1 || domain_dim > max_vars || image_dim > max_vars )
    {
      throw dimension_error( "map dimensions out of range" );
    }
    if ( images_.size() != ( std::size_t{ 1 } << domain_dim ) )
    {
      throw dimension_error( "map needs 2^" + std::to_string( domain_dim ) + " images, got " + std::to_string( images_.size() ) );
    }
    for ( auto v : images_ )
    {
      if ( v >> image_dim )
      {
        throw dimension_error( "map image " + std::to_string( v ) + " outside F_2^" + std::to_string( image_dim ) );
      }
    }
  }

  /// A square map on F_2^k.
  explicit PermutationMap( std::vector<point_t> images )
      : PermutationMap( static_cast<unsigned>( std::countr_zero( images.size() ) ), static_cast<unsigned>( std::countr_zero( images.size() ) ), images )
  {
  }

  static PermutationMap identity( unsigned k )
  {
    std::vector<point_t> im( std::size_t{ 1 } << k );
    for ( point_t y = 0; y < im.size(); ++y )
    {
      im[y] = y;
    }
    return PermutationMap( k, k, std::move( im ) );
  }

  unsigned domain_dim() const noexcept { return domain_dim_; }
  unsigned image_dim() const noexcept { return image_dim_; }
  const std::vector<point_t>& images() const noexcept { return images_; }
  point_t operator()( point_t y ) const { return images_.at( y ); }

  /// Coordinate function phi_i (1-based) of the map.
  bool coordinate( point_t y, unsigned i ) const { return ( images_.at( y ) & variable_mask( image_dim_, i ) ) != 0; }

  bool is_injective() const
  {
    std::unordered_set<point_t> seen( images_.begin(), images_.end() );
    return seen.size() == images_.size();
  }

  bool is_permutation() const { return domain_dim_ == image_dim_ && is_injective(); }

private:
  unsigned domain_dim_;
  unsigned image_dim_;
  std::vector<point_t> images_;
};

/*! \brief Maiorana-McFarland function x.phi(y) + u(y)

  phi maps F_2^s to F_2^r; the result has r + s variables with x the first r
  and y the last s. With `require_bent` the map must be a permutation, which
  is exactly the condition for bentness.
*/
inline BooleanFunction mm_function( const PermutationMap& phi, const BooleanFunction& u, bool require_bent = false )
{
  const auto r = phi.image_dim();
  const auto s = phi.domain_dim();
  if ( u.num_vars() != s )
  {
    throw dimension_error( "mm_function: u has " + std::to_string( u.num_vars() ) + " variables, map domain has " + std::to_string( s ) );
  }
  if ( require_bent && !phi.is_permutation() )
  {
    throw premise_error( "mm_function: map is not a permutation, result would not be bent" );
  }
  return block_function( r, s, [&]( point_t x, point_t y ) { return dot( x, phi( y ) ) != u[y]; } );
}

inline BooleanFunction mm_function( const PermutationMap& phi, bool require_bent = false )
{
  return mm_function( phi, BooleanFunction( phi.domain_dim() ), require_bent );
}

/// A function on GF(2^m) given by its values at each element (indexed by element bits).
using FieldFunction = std::vector<std::uint8_t>;

inline void check_psap_theta( const GaloisField& field, const FieldFunction& theta )
{
  if ( theta.size() != field.order() )
  {
    throw dimension_error( "PS_ap: theta needs " + std::to_string( field.order() ) + " values" );
  }
  std::size_t w = 0;
  for ( auto v : theta )
  {
    if ( v > 1 )
    {
      throw parse_error( "PS_ap: theta values must be 0 or 1" );
    }
    w += v;
  }
  if ( 2 * w != theta.size() )
  {
    throw premise_error( "PS_ap: theta is not balanced" );
  }
  if ( theta[0] != 0 )
  {
    throw premise_error( "PS_ap: theta(0) must be 0" );
  }
}

/*! \brief PS_ap function f(x, y) = theta(x / y) with x / 0 = 0

  x and y are the first and last m variables, each identified with GF(2^m)
  through the field's vector bijection.
*/
inline BooleanFunction psap_bent( const GaloisField& field, const FieldFunction& theta )
{
  check_psap_theta( field, theta );
  const auto m = field.degree();
  return block_function( m, m, [&]( point_t xi, point_t yi ) {
    const auto x = field.element_from_index( xi );
    const auto y = field.element_from_index( yi );
    return theta[field.div( x, y )] != 0;
  } );
}

/// theta(p) = Tr(c p), balanced with theta(0) = 0 whenever c != 0.
inline FieldFunction trace_form( const GaloisField& field, std::uint32_t c )
{
  FieldFunction t( field.order() );
  for ( std::uint32_t p = 0; p < field.order(); ++p )
  {
    t[p] = field.trace( field.mul( c, p ) );
  }
  return t;
}

/// Checks phi(E2) = E1^perp for a permutation phi.
inline bool class_d_condition( const PermutationMap& phi, const LinearSubspace& e1, const LinearSubspace& e2 )
{
  const auto perp = e1.orthogonal_complement();
  if ( perp.dimension() != e2.dimension() )
  {
    return false;
  }
  for ( auto v : e2.elements() )
  {
    if ( !perp.contains( phi( v ) ) )
    {
      return false;
    }
  }
  return true;
}

/// Class D function x.phi(y) + 1_E1(x) 1_E2(y), bent when phi(E2) = E1^perp.
inline BooleanFunction class_d_bent( const PermutationMap& phi, const LinearSubspace& e1, const LinearSubspace& e2 )
{
  if ( !phi.is_permutation() )
  {
    throw premise_error( "class D: map is not a permutation" );
  }
  const auto k = phi.domain_dim();
  if ( e1.ambient_dimension() != k || e2.ambient_dimension() != k )
  {
    throw dimension_error( "class D: subspaces must live in F_2^" + std::to_string( k ) );
  }
  if ( !class_d_condition( phi, e1, e2 ) )
  {
    throw premise_error( "class D: phi(E2) != E1^perp" );
  }
  const auto ind1 = e1.indicator();
  const auto ind2 = e2.indicator();
  return block_function( k, k, [&]( point_t x, point_t y ) { return dot( x, phi( y ) ) != ( ind1[x] && ind2[y] ); } );
}

} // namespace bentkit
