// SPDX-License-Identifier: Apache-2.0

/*!
  \file analysis.hpp
  \brief Spectral classification of Boolean functions

  Everything here is read off the Walsh spectrum: nonlinearity, bentness and
  the dual, correlation immunity and resiliency, plateaued order, and the
  Siegenthaler / Sarkar-Maitra caps a profile has to respect.

  Resiliency follows the extended convention: every function is 0th-order
  correlation immune and (-1)-resilient, and a balanced function is
  0-resilient.
*/

#pragma once

#include <cstdint>
#include <optional>

#include "anf.hpp"
#include "walsh.hpp"

namespace bentkit
{

inline std::uint64_t nonlinearity( const WalshSpectrum& w )
{
  const auto half = std::uint64_t{ 1 } << ( w.num_vars() - 1 );
  return half - static_cast<std::uint64_t>( w.max_abs() / 2 );
}

inline std::uint64_t nonlinearity( const BooleanFunction& f )
{
  return nonlinearity( walsh_transform( f ) );
}

inline bool is_bent( const WalshSpectrum& w )
{
  const auto n = w.num_vars();
  if ( n % 2 )
  {
    return false;
  }
  const auto amp = std::int64_t{ 1 } << ( n / 2 );
  for ( auto v : w.values() )
  {
    if ( v != amp && v != -amp )
    {
      return false;
    }
  }
  return true;
}

inline bool is_bent( const BooleanFunction& f )
{
  return f.num_vars() % 2 == 0 && is_bent( walsh_transform( f ) );
}

/// Dual of a bent function: 0 where W_f = +2^(n/2), 1 where W_f = -2^(n/2).
inline BooleanFunction dual( const BooleanFunction& f )
{
  const auto w = walsh_transform( f );
  if ( !is_bent( w ) )
  {
    throw premise_error( "dual: input is not bent" );
  }
  return BooleanFunction::from_predicate( f.num_vars(), [&]( point_t i ) { return w[i] < 0; } );
}

struct ResiliencyReport
{
  unsigned ci_order = 0;
  int resiliency = -1;
};

/*! \brief Correlation-immunity order and resiliency from the spectrum

  ci_order is the largest r with W_f(w) = 0 for all 1 <= wt(w) <= r;
  resiliency is ci_order when W_f(0) = 0 and -1 otherwise.
*/
inline ResiliencyReport resiliency_report( const WalshSpectrum& w )
{
  const auto n = w.num_vars();
  // lightest nonzero mask with a nonzero coefficient bounds the CI order
  unsigned lightest = n + 1;
  for ( point_t i = 1; i < w.size(); ++i )
  {
    if ( w[i] != 0 )
    {
      lightest = std::min( lightest, weight_of( i ) );
    }
  }
  ResiliencyReport r;
  r.ci_order = std::min( lightest - 1, n );
  r.resiliency = w[0] == 0 ? static_cast<int>( r.ci_order ) : -1;
  return r;
}

inline ResiliencyReport resiliency_report( const BooleanFunction& f )
{
  return resiliency_report( walsh_transform( f ) );
}

inline int resiliency( const BooleanFunction& f )
{
  return resiliency_report( f ).resiliency;
}

/// 2 * ceil((n - 2) / 2), the plateaued order of a semi-bent function.
inline unsigned semi_bent_order( unsigned n ) noexcept
{
  return n <= 2 ? 0u : 2 * ( ( n - 2 + 1 ) / 2 );
}

struct PlateauedReport
{
  std::optional<unsigned> order;
  bool semi_bent = false;
};

/*! \brief Plateaued order r

  f is rth-order plateaued (r even) when its spectrum has support size 2^r
  and every nonzero value squares to 2^(2n - r).
*/
inline PlateauedReport plateaued_order( const WalshSpectrum& w )
{
  PlateauedReport rep;
  const auto n = w.num_vars();
  const auto support = w.support_size();
  if ( !std::has_single_bit( support ) )
  {
    return rep;
  }
  const auto r = static_cast<unsigned>( std::countr_zero( support ) );
  if ( r % 2 )
  {
    return rep;
  }
  const auto amp = std::int64_t{ 1 } << ( n - r / 2 );
  for ( auto v : w.values() )
  {
    if ( v != 0 && v != amp && v != -amp )
    {
      return rep;
    }
  }
  rep.order = r;
  rep.semi_bent = r == semi_bent_order( n );
  return rep;
}

inline PlateauedReport plateaued_order( const BooleanFunction& f )
{
  return plateaued_order( walsh_transform( f ) );
}

/*! \brief Complementary (p-1)th-order plateaued pair in an odd number p of variables

  Both functions must be (p-1)th-order plateaued and their spectral supports
  must partition F_2^p.
*/
inline bool complementary_plateaued( const BooleanFunction& g1, const BooleanFunction& g2 )
{
  if ( g1.num_vars() != g2.num_vars() )
  {
    throw dimension_error( "complementary_plateaued: variable counts differ" );
  }
  const auto p = g1.num_vars();
  if ( p % 2 == 0 )
  {
    throw dimension_error( "complementary_plateaued: variable count must be odd" );
  }
  const auto w1 = walsh_transform( g1 );
  const auto w2 = walsh_transform( g2 );
  const auto o1 = plateaued_order( w1 ).order;
  const auto o2 = plateaued_order( w2 ).order;
  if ( o1 != p - 1 || o2 != p - 1 )
  {
    return false;
  }
  for ( point_t i = 0; i < w1.size(); ++i )
  {
    if ( ( w1[i] == 0 ) == ( w2[i] == 0 ) )
    {
      return false;
    }
  }
  return true;
}

/// Degree and nonlinearity caps implied by a resiliency order.
struct BoundsReport
{
  unsigned degree_cap = 0;
  std::uint64_t nonlinearity_cap = 0;
  /// Sarkar-Maitra cap, present for 0 <= resiliency <= n - 2.
  std::optional<std::uint64_t> sarkar_maitra_cap;
  /// 2^(m+1+floor((n-m-2)/d)) divides the nonlinearity of an m-resilient degree-d function.
  std::optional<std::uint64_t> nonlinearity_divisor;
};

/// Covering-radius cap: 2^(n-1) - s/2 with s the least even integer >= 2^(n/2).
inline std::uint64_t universal_nonlinearity_cap( unsigned n )
{
  const auto half = std::uint64_t{ 1 } << ( n - 1 );
  if ( n % 2 == 0 )
  {
    return half - ( std::uint64_t{ 1 } << ( n / 2 ) ) / 2;
  }
  // smallest even s with s^2 >= 2^n
  std::uint64_t s = 2;
  while ( s * s < ( std::uint64_t{ 1 } << n ) )
  {
    s += 2;
  }
  return half - s / 2;
}

inline BoundsReport bounds_report( unsigned n, int resiliency, unsigned degree )
{
  if ( resiliency < -1 )
  {
    throw dimension_error( "bounds_report: resiliency must be >= -1" );
  }
  BoundsReport b;
  const auto universal = universal_nonlinearity_cap( n );
  b.nonlinearity_cap = universal;
  b.degree_cap = n;
  if ( resiliency < 0 )
  {
    return b;
  }

  const auto m = static_cast<unsigned>( resiliency );
  if ( m >= n - 1 )
  {
    // (n-1)-resilient functions are the all-variable linear function
    b.degree_cap = 1;
    b.nonlinearity_cap = 0;
    return b;
  }
  b.degree_cap = n - m - 1;

  const auto half = std::uint64_t{ 1 } << ( n - 1 );
  const auto step = std::uint64_t{ 1 } << ( m + 1 );
  std::uint64_t cap = half - step;
  if ( n % 2 == 0 )
  {
    if ( m + 2 <= n / 2 )
    {
      cap = half - ( std::uint64_t{ 1 } << ( n / 2 - 1 ) ) - step;
    }
  }
  else
  {
    cap = std::min( cap, universal / step * step );
  }
  b.sarkar_maitra_cap = cap;
  b.nonlinearity_cap = std::min( cap, universal );
  if ( degree >= 1 )
  {
    b.nonlinearity_divisor = std::uint64_t{ 1 } << ( m + 1 + ( n - m - 2 ) / degree );
  }
  return b;
}

/// Aggregated certification record for one function.
struct AnalysisProfile
{
  unsigned n = 0;
  std::uint64_t weight = 0;
  bool balanced = false;
  std::uint64_t nonlinearity = 0;
  unsigned degree = 0;
  unsigned ci_order = 0;
  int resiliency = -1;
  bool bent = false;
  std::optional<unsigned> plateaued_order;
  bool semi_bent = false;
  std::optional<std::uint64_t> sarkar_maitra_bound;
};

inline AnalysisProfile analyze( const BooleanFunction& f )
{
  const auto w = walsh_transform( f );
  AnalysisProfile p;
  p.n = f.num_vars();
  p.weight = f.weight();
  p.balanced = f.is_balanced();
  p.nonlinearity = nonlinearity( w );
  p.degree = degree( f );
  const auto r = resiliency_report( w );
  p.ci_order = r.ci_order;
  p.resiliency = r.resiliency;
  p.bent = is_bent( w );
  const auto pl = plateaued_order( w );
  p.plateaued_order = pl.order;
  p.semi_bent = pl.semi_bent;
  if ( p.resiliency >= 0 && static_cast<unsigned>( p.resiliency ) + 2 <= p.n )
  {
    p.sarkar_maitra_bound = bounds_report( p.n, p.resiliency, p.degree ).sarkar_maitra_cap;
  }
  return p;
}

/// True when the profile respects its own degree and nonlinearity caps.
inline bool respects_bounds( const AnalysisProfile& p )
{
  const auto b = bounds_report( p.n, p.resiliency, p.degree );
  if ( p.degree > b.degree_cap || p.nonlinearity > b.nonlinearity_cap )
  {
    return false;
  }
  if ( b.nonlinearity_divisor && p.nonlinearity % *b.nonlinearity_divisor != 0 )
  {
    return false;
  }
  return true;
}

} // namespace bentkit
