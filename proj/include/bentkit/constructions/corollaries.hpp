// SPDX-License-Identifier: Apache-2.0

/*!
  \file corollaries.hpp
  \brief Concrete instances of construction2 on known bent families

  Variable layout matches construction2: the surviving variables of the
  n-variable side in original order, then those of the m-variable side.
  For the Rothaus corollary the x-block is (x_1..x_n, x_{n+1}) and the
  y-block is (y_1..y_m, y_{m+1}).
*/

#pragma once

#include <string>

#include "construction2.hpp"
#include "primary.hpp"

namespace bentkit
{

/*! \brief Modified Maiorana-McFarland bent function in n + m - 2 variables

      h = sum_{i != mu} phi_i(x'') x_i + sum_{j != rho} psi_j(y'') y_j
          + phi_mu(x'') psi_rho(y'') + u(x'') + v(y'')

  where x'' = (x_{n/2+1}..x_n) and y'' = (y_{m/2+1}..y_m). Evaluated from the
  maps directly; it coincides with construction2 on the two M-M functions.
*/
inline BooleanFunction corollary_nmm( const PermutationMap& phi, const PermutationMap& psi, unsigned mu, unsigned rho,
                                      const BooleanFunction& u, const BooleanFunction& v )
{
  if ( !phi.is_permutation() || !psi.is_permutation() )
  {
    throw premise_error( "corollary_nmm: phi and psi must be permutations" );
  }
  const auto hn = phi.domain_dim();
  const auto hm = psi.domain_dim();
  if ( mu < 1 || mu > hn || rho < 1 || rho > hm )
  {
    throw dimension_error( "corollary_nmm: mu must lie in [1, n/2] and rho in [1, m/2]" );
  }
  if ( u.num_vars() != hn || v.num_vars() != hm )
  {
    throw dimension_error( "corollary_nmm: u and v must have n/2 and m/2 variables" );
  }
  const auto mask_x = ( point_t{ 1 } << hn ) - 1;
  const auto mask_y = ( point_t{ 1 } << hm ) - 1;
  return block_function( 2 * hn - 1, 2 * hm - 1, [&]( point_t xi, point_t yi ) {
    const auto xa = xi >> hn; // x_i, i != mu
    const auto xn = xi & mask_x;
    const auto ya = yi >> hm;
    const auto yn = yi & mask_y;
    const auto px = phi( xn );
    const auto py = psi( yn );
    bool h = dot( xa, remove_bit( px, hn, mu ) );
    h ^= dot( ya, remove_bit( py, hm, rho ) );
    h ^= phi.coordinate( xn, mu ) && psi.coordinate( yn, rho );
    h ^= u[xn];
    h ^= v[yn];
    return h;
  } );
}

/*! \brief Restrictions of f to the hyperplane {X : w.X = 0} and its coset shift + H

  Coordinates on H come from the reduced echelon basis of span{w}^perp:
  coordinate k of the (n-1)-variable result multiplies the k-th basis row
  (rows ordered by decreasing pivot).
*/
inline std::pair<BooleanFunction, BooleanFunction> hyperplane_split( const BooleanFunction& f, point_t form, point_t shift )
{
  const auto n = f.num_vars();
  if ( n < 2 )
  {
    throw dimension_error( "hyperplane_split: need at least 2 variables" );
  }
  if ( form == 0 || form >= f.size() || shift >= f.size() )
  {
    throw premise_error( "hyperplane_split: linear form must be a nonzero vector of F_2^n" );
  }
  if ( !dot( form, shift ) )
  {
    throw premise_error( "hyperplane_split: shift must lie outside the hyperplane" );
  }
  const auto basis = LinearSubspace::span( n, { form } ).orthogonal_complement().basis();
  auto point = [&]( point_t c ) {
    point_t v = 0;
    for ( auto k = 1u; k < n; ++k )
    {
      if ( c & variable_mask( n - 1, k ) )
      {
        v ^= basis[k - 1];
      }
    }
    return v;
  };
  auto f0 = BooleanFunction::from_predicate( n - 1, [&]( point_t c ) { return f[point( c )]; } );
  auto f1 = BooleanFunction::from_predicate( n - 1, [&]( point_t c ) { return f[point( c ) ^ shift]; } );
  return { std::move( f0 ), std::move( f1 ) };
}

/// The vector w in F_2^(2k) with w.(x, y) = Tr(a x + b y).
inline point_t trace_linear_form( const GaloisField& field, std::uint32_t a, std::uint32_t b )
{
  const auto k = field.degree();
  point_t w = 0;
  for ( auto j = 1u; j <= 2 * k; ++j )
  {
    const auto e = variable_mask( 2 * k, j );
    const auto x = field.element_from_index( e >> k );
    const auto y = field.element_from_index( e & ( ( point_t{ 1 } << k ) - 1 ) );
    if ( field.trace( field.add( field.mul( a, x ), field.mul( b, y ) ) ) )
    {
      w |= e;
    }
  }
  return w;
}

struct PsabSide
{
  const GaloisField* field;
  FieldFunction theta;
  std::uint32_t a; ///< hyperplane form (a, b)
  std::uint32_t b;
  std::uint32_t alpha; ///< coset shift (alpha, beta), Tr(a alpha + b beta) = 1
  std::uint32_t beta;
};

/// PS_ap function of one side split along its trace hyperplane.
inline std::pair<BooleanFunction, BooleanFunction> psab_split( const PsabSide& side )
{
  const auto& F = *side.field;
  if ( side.a == 0 && side.b == 0 )
  {
    throw premise_error( "corollary_psab: hyperplane form (a, b) must be nonzero" );
  }
  if ( !F.trace( F.add( F.mul( side.a, side.alpha ), F.mul( side.b, side.beta ) ) ) )
  {
    throw premise_error( "corollary_psab: trace condition Tr(a alpha + b beta) = 1 violated" );
  }
  const auto f = psap_bent( F, side.theta );
  const auto form = trace_linear_form( F, side.a, side.b );
  const auto shift = ( F.index_from_element( side.alpha ) << F.degree() ) | F.index_from_element( side.beta );
  return hyperplane_split( f, form, shift );
}

/// construction2 on two PS_ap functions, each split along a trace hyperplane.
inline BooleanFunction corollary_psab( const PsabSide& f_side, const PsabSide& g_side )
{
  const auto [f0, f1] = psab_split( f_side );
  const auto [g0, g1] = psab_split( g_side );
  return indirect_sum( f0, f1, g0, g1 );
}

/*! \brief Rothaus corollary in n + m + 2 variables, evaluated from its closed form

  Equals construction2(rothaus(f1, f2, f3), n + 2, rothaus(g1, g2, g3), m + 2).
*/
inline BooleanFunction corollary_rothaus( const BooleanFunction& f1, const BooleanFunction& f2, const BooleanFunction& f3,
                                          const BooleanFunction& g1, const BooleanFunction& g2, const BooleanFunction& g3 )
{
  require_rothaus_premise( f1, f2, f3, "corollary_rothaus (f side)" );
  require_rothaus_premise( g1, g2, g3, "corollary_rothaus (g side)" );
  return block_function( f1.num_vars() + 1, g1.num_vars() + 1, [&]( point_t xi, point_t yi ) {
    const auto x = xi >> 1;
    const auto y = yi >> 1;
    const bool xs = xi & 1, ys = yi & 1;
    const bool a = f1[x], b = f2[x], c = f3[x];
    const bool p = g1[y], q = g2[y], r = g3[y];
    bool h = ( ( a && b ) != ( a && c ) ) != ( b && c );
    h ^= ( ( p && q ) != ( p && r ) ) != ( q && r );
    h ^= ( a != b ) && xs;
    h ^= ( p != q ) && ys;
    h ^= ( a != c ) && ( p != r );
    h ^= ( a != c ) && ys;
    h ^= ( p != r ) && xs;
    h ^= xs && ys;
    return h;
  } );
}

/// construction2 on two class D functions, mu <= n/2 and rho <= m/2.
inline BooleanFunction corollary_class_d( const PermutationMap& phi, const LinearSubspace& e1, const LinearSubspace& e2,
                                          const PermutationMap& psi, const LinearSubspace& xi1, const LinearSubspace& xi2,
                                          unsigned mu, unsigned rho )
{
  if ( mu < 1 || mu > phi.domain_dim() || rho < 1 || rho > psi.domain_dim() )
  {
    throw dimension_error( "corollary_class_d: mu must lie in [1, n/2] and rho in [1, m/2]" );
  }
  const auto f = class_d_bent( phi, e1, e2 );
  const auto g = class_d_bent( psi, xi1, xi2 );
  return construction2( f, mu, g, rho );
}

} // namespace bentkit
