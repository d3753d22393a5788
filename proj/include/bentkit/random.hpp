// SPDX-License-Identifier: Apache-2.0

/*!
  \file random.hpp
  \brief Seeded generators for test and demonstration corpora

  Draws come straight from the raw 64-bit output of std::mt19937_64 (no
  standard distributions), so a seed gives the same corpus on every platform.
*/

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "constructions/primary.hpp"
#include "constructions/resilient.hpp"

namespace bentkit
{

class Rng
{
public:
  explicit Rng( std::uint64_t seed ) : engine_( seed ) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound) by rejection.
  std::uint64_t below( std::uint64_t bound )
  {
    if ( bound <= 1 )
    {
      return 0;
    }
    const auto limit = ~std::uint64_t{ 0 } - ( ~std::uint64_t{ 0 } % bound );
    std::uint64_t v;
    do
    {
      v = next();
    } while ( v >= limit );
    return v % bound;
  }

  bool coin() { return next() >> 63; }

  template<typename T>
  void shuffle( std::vector<T>& v )
  {
    for ( auto i = v.size(); i > 1; --i )
    {
      std::swap( v[i - 1], v[below( i )] );
    }
  }

private:
  std::mt19937_64 engine_;
};

inline BooleanFunction random_function( unsigned n, Rng& rng )
{
  std::vector<std::uint64_t> words( n >= 6 ? std::size_t{ 1 } << ( n - 6 ) : 1u );
  for ( auto& w : words )
  {
    w = rng.next();
  }
  return BooleanFunction::from_words( n, std::move( words ) );
}

inline BooleanFunction random_balanced( unsigned n, Rng& rng )
{
  std::vector<point_t> idx( std::size_t{ 1 } << n );
  std::iota( idx.begin(), idx.end(), point_t{ 0 } );
  rng.shuffle( idx );
  BooleanFunction f( n );
  for ( std::size_t k = 0; k < idx.size() / 2; ++k )
  {
    f.set( idx[k], true );
  }
  return f;
}

inline PermutationMap random_permutation( unsigned k, Rng& rng )
{
  std::vector<point_t> im( std::size_t{ 1 } << k );
  std::iota( im.begin(), im.end(), point_t{ 0 } );
  rng.shuffle( im );
  return PermutationMap( k, k, std::move( im ) );
}

/// Uniformly random subspace of F_2^k of dimension d (by random independent generators).
inline LinearSubspace random_subspace( unsigned k, unsigned d, Rng& rng )
{
  auto s = LinearSubspace( k );
  std::vector<point_t> gens;
  while ( s.dimension() < d )
  {
    gens.push_back( rng.below( point_t{ 1 } << k ) );
    s = LinearSubspace::span( k, gens );
  }
  return s;
}

inline BooleanFunction random_mm_bent( unsigned n, Rng& rng )
{
  const auto k = n / 2;
  return mm_function( random_permutation( k, rng ), random_function( k, rng ), true );
}

inline FieldFunction random_psap_theta( const GaloisField& field, Rng& rng )
{
  // balanced with theta(0) = 0: choose half of the nonzero elements
  std::vector<std::uint32_t> nonzero( field.order() - 1 );
  std::iota( nonzero.begin(), nonzero.end(), 1u );
  rng.shuffle( nonzero );
  FieldFunction theta( field.order(), 0 );
  for ( std::size_t i = 0; i < field.order() / 2; ++i )
  {
    theta[nonzero[i]] = 1;
  }
  return theta;
}

inline BooleanFunction random_psap_bent( unsigned n, Rng& rng )
{
  const GaloisField field( n / 2 );
  return psap_bent( field, random_psap_theta( field, rng ) );
}

struct ClassDParams
{
  PermutationMap phi;
  LinearSubspace e1;
  LinearSubspace e2;
};

/// phi maps a random E2 onto a random subspace V of equal dimension; E1 = V^perp.
inline ClassDParams random_class_d_params( unsigned k, Rng& rng )
{
  const auto d = static_cast<unsigned>( rng.below( k + 1 ) );
  auto e2 = random_subspace( k, d, rng );
  auto v = random_subspace( k, d, rng );
  auto src = e2.elements();
  auto dst = v.elements();
  rng.shuffle( dst );
  std::vector<point_t> rest_src, rest_dst;
  for ( point_t y = 0; y < ( point_t{ 1 } << k ); ++y )
  {
    if ( !e2.contains( y ) )
      rest_src.push_back( y );
    if ( !v.contains( y ) )
      rest_dst.push_back( y );
  }
  rng.shuffle( rest_dst );
  std::vector<point_t> im( std::size_t{ 1 } << k );
  for ( std::size_t i = 0; i < src.size(); ++i )
    im[src[i]] = dst[i];
  for ( std::size_t i = 0; i < rest_src.size(); ++i )
    im[rest_src[i]] = rest_dst[i];
  return { PermutationMap( k, k, std::move( im ) ), v.orthogonal_complement(), std::move( e2 ) };
}

inline BooleanFunction random_class_d_bent( unsigned n, Rng& rng )
{
  const auto p = random_class_d_params( n / 2, rng );
  return class_d_bent( p.phi, p.e1, p.e2 );
}

enum class bent_family
{
  maiorana_mcfarland,
  psap,
  class_d
};

inline BooleanFunction random_bent( unsigned n, bent_family family, Rng& rng )
{
  switch ( family )
  {
  case bent_family::maiorana_mcfarland:
    return random_mm_bent( n, rng );
  case bent_family::psap:
    return random_psap_bent( n, rng );
  default:
    return random_class_d_bent( n, rng );
  }
}

/// Injective map F_2^s -> F_2^r whose images all have weight >= min_weight.
inline PermutationMap random_heavy_injection( unsigned s, unsigned r, unsigned min_weight, Rng& rng )
{
  std::vector<point_t> pool;
  for ( point_t v = 0; v < ( point_t{ 1 } << r ); ++v )
  {
    if ( weight_of( v ) >= min_weight )
      pool.push_back( v );
  }
  if ( pool.size() < ( std::size_t{ 1 } << s ) )
  {
    throw dimension_error( "random_heavy_injection: not enough heavy vectors" );
  }
  rng.shuffle( pool );
  pool.resize( std::size_t{ 1 } << s );
  return PermutationMap( s, r, std::move( pool ) );
}

/*! \brief Three distinct (r+s)-variable M-M functions x.phi(y) + u_i(y) sharing phi

  With every image of weight >= t + 1 all three, and their sum, are
  t-resilient with nonlinearity 2^(r+s-1) - 2^(r-1).
*/
inline std::array<BooleanFunction, 3> random_resilient_mm_triple( const PermutationMap& phi, Rng& rng )
{
  const auto s = phi.domain_dim();
  std::array<BooleanFunction, 3> u{ random_function( s, rng ), BooleanFunction( s ), BooleanFunction( s ) };
  do
  {
    u[1] = random_function( s, rng );
  } while ( u[1] == u[0] );
  do
  {
    u[2] = random_function( s, rng );
  } while ( u[2] == u[0] || u[2] == u[1] );
  return { mm_function( phi, u[0] ), mm_function( phi, u[1] ), mm_function( phi, u[2] ) };
}

/*! \brief A t-resilient triple whose sum is t-resilient too

  Each f_i = L(x) + h_i(rest), with L the sum of t + 1 randomly chosen
  variables shared by all three and h_i arbitrary on the other variables.
*/
inline std::array<BooleanFunction, 3> random_resilient_triple( unsigned n, int t, Rng& rng )
{
  if ( t < 0 || static_cast<unsigned>( t ) + 1 > n )
  {
    throw dimension_error( "random_resilient_triple: need 0 <= t < n" );
  }
  std::vector<unsigned> vars( n );
  std::iota( vars.begin(), vars.end(), 1u );
  rng.shuffle( vars );
  point_t linear = 0;
  for ( int i = 0; i <= t; ++i )
  {
    linear |= variable_mask( n, vars[i] );
  }
  const auto rest = static_cast<unsigned>( n - t - 1 );
  std::array<BooleanFunction, 3> out{ BooleanFunction( n ), BooleanFunction( n ), BooleanFunction( n ) };
  for ( auto& f : out )
  {
    const auto h = rest > 0 ? random_function( rest, rng ) : BooleanFunction( 1 );
    f = BooleanFunction::from_predicate( n, [&]( point_t x ) {
      point_t key = 0;
      for ( auto j = 1u; j <= n; ++j )
      {
        const auto mask = variable_mask( n, j );
        if ( !( linear & mask ) )
        {
          key = ( key << 1 ) | ( ( x & mask ) != 0 );
        }
      }
      return dot( x, linear ) != ( rest > 0 && h[key] );
    } );
  }
  return out;
}

/*! \brief Derivative-trick bent triple from two M-M functions sharing phi

  vartheta = x'.phi(x'') + rho1(x''), theta = x'.phi(x'') + rho2(x''),
  a = (a', 0) with a' != 0, so D_a vartheta = D_a theta = a'.phi(x'').
*/
inline BentTriple random_derivative_triple( unsigned n, Rng& rng )
{
  const auto k = n / 2;
  const auto phi = random_permutation( k, rng );
  const auto vartheta = mm_function( phi, random_function( k, rng ), true );
  const auto theta = mm_function( phi, random_function( k, rng ), true );
  const point_t a_prime = 1 + rng.below( ( point_t{ 1 } << k ) - 1 );
  return bent_triple_derivative( vartheta, theta, a_prime << k );
}

} // namespace bentkit
