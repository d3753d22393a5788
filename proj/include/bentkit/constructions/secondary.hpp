// SPDX-License-Identifier: Apache-2.0

/*!
  \file secondary.hpp
  \brief Classical secondary constructions: direct sum, indirect sum, Rothaus

  Composite outputs list the x-block (the n-variable inputs) before the
  y-block (the m-variable inputs).
*/

#pragma once

#include <string>

#include "../analysis.hpp"

namespace bentkit
{

namespace detail
{

inline void require_arity( const BooleanFunction& f, unsigned n, const char* what )
{
  if ( f.num_vars() != n )
  {
    throw dimension_error( std::string( what ) + ": expected " + std::to_string( n ) + " variables, got " +
                           std::to_string( f.num_vars() ) );
  }
}

} // namespace detail

/// h(x, y) = f(x) + g(y).
inline BooleanFunction direct_sum( const BooleanFunction& f, const BooleanFunction& g )
{
  return block_function( f.num_vars(), g.num_vars(), [&]( point_t x, point_t y ) { return f[x] != g[y]; } );
}

/// Nonlinearity of a direct sum: 2^n N_g + 2^m N_f - 2 N_f N_g.
inline std::uint64_t direct_sum_nonlinearity( unsigned n, std::uint64_t nl_f, unsigned m, std::uint64_t nl_g )
{
  return ( std::uint64_t{ 1 } << n ) * nl_g + ( std::uint64_t{ 1 } << m ) * nl_f - 2 * nl_f * nl_g;
}

/// h = f1(x) + g1(y) + (f1 + f2)(x) (g1 + g2)(y).
inline BooleanFunction indirect_sum( const BooleanFunction& f1, const BooleanFunction& f2, const BooleanFunction& g1,
                                     const BooleanFunction& g2 )
{
  detail::require_arity( f2, f1.num_vars(), "indirect_sum f2" );
  detail::require_arity( g2, g1.num_vars(), "indirect_sum g2" );
  return block_function( f1.num_vars(), g1.num_vars(), [&]( point_t x, point_t y ) {
    return ( f1[x] != g1[y] ) != ( ( f1[x] != f2[x] ) && ( g1[y] != g2[y] ) );
  } );
}

/*! \brief f1 + g1 + (f1 + f2)(g1 + g2) + (f2 + f3)(g2 + g3)

  The plain formula; see resilient.hpp for the certified variants.
*/
inline BooleanFunction generalized_indirect_sum( const BooleanFunction& f1, const BooleanFunction& f2, const BooleanFunction& f3,
                                                 const BooleanFunction& g1, const BooleanFunction& g2, const BooleanFunction& g3 )
{
  const auto n = f1.num_vars();
  const auto m = g1.num_vars();
  detail::require_arity( f2, n, "generalized_indirect_sum f2" );
  detail::require_arity( f3, n, "generalized_indirect_sum f3" );
  detail::require_arity( g2, m, "generalized_indirect_sum g2" );
  detail::require_arity( g3, m, "generalized_indirect_sum g3" );
  return block_function( n, m, [&]( point_t x, point_t y ) {
    const bool a = f1[x], b = f2[x], c = f3[x];
    const bool u = g1[y], v = g2[y], w = g3[y];
    return ( ( a != u ) != ( ( a != b ) && ( u != v ) ) ) != ( ( b != c ) && ( v != w ) );
  } );
}

/// Throws unless f1, f2, f3 and f1 + f2 + f3 are all bent.
inline void require_rothaus_premise( const BooleanFunction& f1, const BooleanFunction& f2, const BooleanFunction& f3,
                                     const char* who )
{
  detail::require_arity( f2, f1.num_vars(), who );
  detail::require_arity( f3, f1.num_vars(), who );
  const char* names[] = { "f1", "f2", "f3", "f1+f2+f3" };
  const BooleanFunction fs[] = { f1, f2, f3, f1 ^ f2 ^ f3 };
  for ( auto i = 0u; i < 4; ++i )
  {
    if ( !is_bent( fs[i] ) )
    {
      throw premise_error( std::string( who ) + ": " + names[i] + " is not bent" );
    }
  }
}

/*! \brief Rothaus' construction in n + 2 variables

      f1 f2 + f1 f3 + f2 f3 + (f1 + f2) x_{n+1} + (f1 + f3) x_{n+2} + x_{n+1} x_{n+2}

  The fresh variables x_{n+1}, x_{n+2} are appended after x_1..x_n. All four
  bentness premises are checked first.
*/
inline BooleanFunction rothaus( const BooleanFunction& f1, const BooleanFunction& f2, const BooleanFunction& f3 )
{
  require_rothaus_premise( f1, f2, f3, "rothaus" );
  return block_function( f1.num_vars(), 2, [&]( point_t x, point_t t ) {
    const bool a = f1[x], b = f2[x], c = f3[x];
    const bool s1 = t >> 1, s2 = t & 1;
    const bool maj = ( ( a && b ) != ( a && c ) ) != ( b && c );
    return ( ( maj != ( ( a != b ) && s1 ) ) != ( ( a != c ) && s2 ) ) != ( s1 && s2 );
  } );
}

} // namespace bentkit
