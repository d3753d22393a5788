// SPDX-License-Identifier: Apache-2.0

/*!
  \file oracle.hpp
  \brief Brute-force references for the fast paths

  Each oracle evaluates a definition directly and shares no code with the
  transform-based implementation it checks.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "analysis.hpp"

namespace bentkit
{

inline constexpr unsigned naive_walsh_cap = 14;
inline constexpr unsigned exhaustive_nonlinearity_cap = 12;
inline constexpr unsigned resiliency_definition_cap = 10;

namespace detail
{

inline void require_cap( unsigned n, unsigned cap, const char* who )
{
  if ( n > cap )
  {
    throw cap_error( std::string( who ) + ": n=" + std::to_string( n ) + " exceeds oracle cap " + std::to_string( cap ) );
  }
}

} // namespace detail

/// W_f(w) = sum_x (-1)^(f(x) + w.x) by the double loop, O(4^n).
inline WalshSpectrum naive_walsh( const BooleanFunction& f )
{
  detail::require_cap( f.num_vars(), naive_walsh_cap, "naive_walsh" );
  const auto size = f.size();
  std::vector<std::int64_t> values( size );
  for ( point_t w = 0; w < size; ++w )
  {
    std::int64_t s = 0;
    for ( point_t x = 0; x < size; ++x )
    {
      s += ( f[x] != dot( w, x ) ) ? -1 : 1;
    }
    values[w] = s;
  }
  return WalshSpectrum( f.num_vars(), std::move( values ) );
}

/// min over all 2^(n+1) affine functions of the Hamming distance to f.
inline std::uint64_t exhaustive_nonlinearity( const BooleanFunction& f )
{
  detail::require_cap( f.num_vars(), exhaustive_nonlinearity_cap, "exhaustive_nonlinearity" );
  std::uint64_t best = f.size();
  for ( point_t w = 0; w < f.size(); ++w )
  {
    const auto ell = BooleanFunction::linear( f.num_vars(), w );
    const auto d = ( f ^ ell ).weight();
    best = std::min( { best, d, f.size() - d } ); // ell and ell + 1
  }
  return best;
}

/*! \brief Correlation immunity of order r from statistical independence

  For every set of r variables and every assignment to them, the restricted
  subfunction must have weight wt(f) / 2^r.
*/
namespace detail
{

/// Body of correlation_immune_by_definition without the size cap.
inline bool correlation_immune_uncapped( const BooleanFunction& f, unsigned r )
{
  const auto n = f.num_vars();
  if ( r > n )
  {
    throw dimension_error( "resiliency_by_definition: r exceeds n" );
  }
  const auto total = f.weight();
  if ( r == 0 )
  {
    return true;
  }
  if ( total % ( std::uint64_t{ 1 } << r ) )
  {
    return false;
  }
  const auto expected = total >> r;
  for ( point_t subset = 0; subset < f.size(); ++subset )
  {
    if ( weight_of( subset ) != r )
    {
      continue;
    }
    // tally weight per assignment of the chosen variables
    std::vector<std::uint64_t> count( std::size_t{ 1 } << r, 0 );
    for ( point_t x = 0; x < f.size(); ++x )
    {
      if ( !f[x] )
      {
        continue;
      }
      std::size_t key = 0, k = 0;
      for ( point_t s = subset; s; s &= s - 1, ++k )
      {
        if ( x & ( s & -s ) )
        {
          key |= std::size_t{ 1 } << k;
        }
      }
      ++count[key];
    }
    for ( auto c : count )
    {
      if ( c != expected )
      {
        return false;
      }
    }
  }
  return true;
}

} // namespace detail

inline bool correlation_immune_by_definition( const BooleanFunction& f, unsigned r )
{
  detail::require_cap( f.num_vars(), resiliency_definition_cap, "resiliency_by_definition" );
  return detail::correlation_immune_uncapped( f, r );
}

/// r-resiliency by definition: balanced and r-th order correlation immune.
inline bool resiliency_by_definition( const BooleanFunction& f, unsigned r )
{
  detail::require_cap( f.num_vars(), resiliency_definition_cap, "resiliency_by_definition" );
  if ( r > f.num_vars() )
  {
    throw dimension_error( "resiliency_by_definition: r exceeds n" );
  }
  return f.is_balanced() && correlation_immune_by_definition( f, r );
}

/// Bentness by exhaustive affine distance: n even and N_f = 2^(n-1) - 2^(n/2-1).
inline bool bent_by_definition( const BooleanFunction& f )
{
  const auto n = f.num_vars();
  detail::require_cap( n, exhaustive_nonlinearity_cap, "bent oracle" );
  if ( n % 2 )
  {
    return false;
  }
  return exhaustive_nonlinearity( f ) == ( std::uint64_t{ 1 } << ( n - 1 ) ) - ( std::uint64_t{ 1 } << ( n / 2 - 1 ) );
}

struct Divergence
{
  std::uint64_t index = 0;
  std::int64_t fast = 0;
  std::int64_t oracle = 0;
};

struct OracleReport
{
  std::string subject;
  bool agreed = true;
  std::optional<Divergence> first_divergence;
};

inline OracleReport verify_walsh( const BooleanFunction& f )
{
  const auto fast = walsh_transform( f );
  const auto slow = naive_walsh( f );
  OracleReport rep{ "walsh", true, std::nullopt };
  for ( point_t w = 0; w < fast.size(); ++w )
  {
    if ( fast[w] != slow[w] )
    {
      rep.agreed = false;
      rep.first_divergence = Divergence{ w, fast[w], slow[w] };
      break;
    }
  }
  return rep;
}

inline OracleReport verify_nonlinearity( const BooleanFunction& f )
{
  const auto slow = exhaustive_nonlinearity( f );
  const auto fast = nonlinearity( f );
  OracleReport rep{ "nonlinearity", true, std::nullopt };
  if ( fast != slow )
  {
    rep.agreed = false;
    rep.first_divergence = Divergence{ 0, static_cast<std::int64_t>( fast ), static_cast<std::int64_t>( slow ) };
  }
  return rep;
}

/// Spectral resiliency r must pass the definition at r and fail it at r + 1.
inline OracleReport verify_resiliency( const BooleanFunction& f )
{
  detail::require_cap( f.num_vars(), resiliency_definition_cap, "resiliency_by_definition" );
  const auto fast = resiliency_report( f ).resiliency;
  int slow = -1;
  for ( unsigned r = 0; r <= f.num_vars() && resiliency_by_definition( f, r ); ++r )
  {
    slow = static_cast<int>( r );
  }
  OracleReport rep{ "resiliency", true, std::nullopt };
  if ( fast != slow )
  {
    rep.agreed = false;
    rep.first_divergence = Divergence{ 0, fast, slow };
  }
  return rep;
}

inline OracleReport verify_bent( const BooleanFunction& f )
{
  const bool slow = bent_by_definition( f );
  const bool fast = is_bent( f );
  OracleReport rep{ "bent", true, std::nullopt };
  if ( fast != slow )
  {
    rep.agreed = false;
    rep.first_divergence = Divergence{ 0, fast, slow };
  }
  return rep;
}

} // namespace bentkit
