// SPDX-License-Identifier: Apache-2.0

/*!
  \file construction2.hpp
  \brief Bent functions in n + m - 2 variables from two restricted bent functions

  Given bent f in n variables and bent g in m variables, fix x_mu in f and
  y_rho in g to get f_0, f_1 and g_0, g_1, then

      h(x, y) = f_a(x) + g_b(y) + (f_0 + f_1)(x) (g_0 + g_1)(y)

  where the variant (a, b) selects the base terms; (0, 0) is the plain
  construction and the other three are bent as well. The x-block holds the
  n - 1 remaining variables of f in their original order, followed by the
  m - 1 remaining variables of g.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "secondary.hpp"

namespace bentkit
{

struct Variant
{
  bool f_base = false;
  bool g_base = false;

  static Variant parse( std::string_view s )
  {
    if ( s.size() != 2 || ( s[0] != '0' && s[0] != '1' ) || ( s[1] != '0' && s[1] != '1' ) )
    {
      throw parse_error( "variant must be one of 00, 01, 10, 11" );
    }
    return { s[0] == '1', s[1] == '1' };
  }

  std::string str() const { return { f_base ? '1' : '0', g_base ? '1' : '0' }; }

  friend bool operator==( const Variant&, const Variant& ) = default;
};

inline constexpr Variant all_variants[] = { { false, false }, { false, true }, { true, false }, { true, true } };

/// The two restrictions (x_j = 0, x_j = 1) of f.
inline std::pair<BooleanFunction, BooleanFunction> restriction_pair( const BooleanFunction& f, unsigned j )
{
  return { restrict( f, j, false ), restrict( f, j, true ) };
}

namespace detail
{

inline void check_construction2_inputs( const BooleanFunction& f, unsigned mu, const BooleanFunction& g, unsigned rho,
                                        bool check_bent )
{
  const auto n = f.num_vars();
  const auto m = g.num_vars();
  if ( n % 2 || m % 2 )
  {
    throw dimension_error( "construction2: both inputs need an even number of variables" );
  }
  if ( mu < 1 || mu > n )
  {
    throw dimension_error( "construction2: mu=" + std::to_string( mu ) + " outside [1, " + std::to_string( n ) + "]" );
  }
  if ( rho < 1 || rho > m )
  {
    throw dimension_error( "construction2: rho=" + std::to_string( rho ) + " outside [1, " + std::to_string( m ) + "]" );
  }
  if ( check_bent )
  {
    if ( !is_bent( f ) )
    {
      throw premise_error( "construction2: f is not bent" );
    }
    if ( !is_bent( g ) )
    {
      throw premise_error( "construction2: g is not bent" );
    }
  }
}

/// base_f(x) + base_g(y) + df(x) dg(y).
inline BooleanFunction restricted_combination( const BooleanFunction& base_f, const BooleanFunction& df,
                                               const BooleanFunction& base_g, const BooleanFunction& dg )
{
  return block_function( base_f.num_vars(), base_g.num_vars(),
                         [&]( point_t x, point_t y ) { return ( base_f[x] != base_g[y] ) != ( df[x] && dg[y] ); } );
}

} // namespace detail

inline BooleanFunction construction2( const BooleanFunction& f, unsigned mu, const BooleanFunction& g, unsigned rho,
                                      Variant variant = {}, bool check_bent = true )
{
  detail::check_construction2_inputs( f, mu, g, rho, check_bent );
  const auto [f0, f1] = restriction_pair( f, mu );
  const auto [g0, g1] = restriction_pair( g, rho );
  return detail::restricted_combination( variant.f_base ? f1 : f0, f0 ^ f1, variant.g_base ? g1 : g0, g0 ^ g1 );
}

/*! \brief Dual of construction2 from the restrictions of the input duals

  With F_0, F_1 and G_0, G_1 the restrictions of dual(f) at mu and dual(g)
  at rho, the dual of variant (a, b) is

      G_0(y) + F_0(x) + (G_0 + G_1 + b)(y) (F_0 + F_1 + a)(x).
*/
inline BooleanFunction construction2_dual( const BooleanFunction& f, unsigned mu, const BooleanFunction& g, unsigned rho,
                                           Variant variant = {} )
{
  detail::check_construction2_inputs( f, mu, g, rho, true );
  const auto [df0, df1] = restriction_pair( dual( f ), mu );
  const auto [dg0, dg1] = restriction_pair( dual( g ), rho );
  auto fd = df0 ^ df1;
  auto gd = dg0 ^ dg1;
  if ( variant.f_base )
  {
    fd = ~fd;
  }
  if ( variant.g_base )
  {
    gd = ~gd;
  }
  return detail::restricted_combination( df0, fd, dg0, gd );
}

} // namespace bentkit
