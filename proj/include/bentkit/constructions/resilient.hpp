// SPDX-License-Identifier: Apache-2.0

/*!
  \file resilient.hpp
  \brief Generalized indirect sum and highly nonlinear resilient functions

      f(x, y) = f1(x) + g1(y) + (f1 + f2)(x)(g1 + g2)(y) + (f2 + f3)(x)(g2 + g3)(y)

  With t-resilient f1, f2, f3, f1+f2+f3 and k-resilient g1, g2, g3, g1+g2+g3
  the result is (t+k+1)-resilient. When the f's form a certified bent triple
  (nu1 = f1+f2+f3 bent with dual(nu1) = dual(f1)+dual(f2)+dual(f3)) every
  Walsh value factors as W_f(a, b) = W_gsel(b) W_f1(a), where gsel is one of
  g1, g2, g3, nu2 depending on the signs of W_f1(a), W_f2(a), W_f3(a).
*/

#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "secondary.hpp"

namespace bentkit
{

struct BentTriple
{
  BooleanFunction f1;
  BooleanFunction f2;
  BooleanFunction f3;
  bool certified = false;

  BooleanFunction nu() const { return f1 ^ f2 ^ f3; }
  unsigned num_vars() const noexcept { return f1.num_vars(); }
};

/// Certifies a triple: all four of f1, f2, f3, nu1 bent and dual(nu1) = sum of the duals.
inline BentTriple make_bent_triple( BooleanFunction f1, BooleanFunction f2, BooleanFunction f3 )
{
  detail::require_arity( f2, f1.num_vars(), "bent triple f2" );
  detail::require_arity( f3, f1.num_vars(), "bent triple f3" );
  BentTriple t{ std::move( f1 ), std::move( f2 ), std::move( f3 ), false };
  const auto nu = t.nu();
  if ( is_bent( t.f1 ) && is_bent( t.f2 ) && is_bent( t.f3 ) && is_bent( nu ) )
  {
    t.certified = dual( nu ) == ( dual( t.f1 ) ^ dual( t.f2 ) ^ dual( t.f3 ) );
  }
  return t;
}

/*! \brief The triple (theta', theta'(. + a), theta) from D_a theta' = D_a theta

  Here nu1 = theta(. + a) and its dual is dual(theta) + a.x, so the triple
  satisfies the dual-sum hypothesis.
*/
inline BentTriple bent_triple_derivative( const BooleanFunction& vartheta, const BooleanFunction& theta, point_t a )
{
  detail::require_arity( theta, vartheta.num_vars(), "bent_triple_derivative theta" );
  if ( a >= vartheta.size() )
  {
    throw dimension_error( "bent_triple_derivative: direction out of range" );
  }
  if ( !is_bent( vartheta ) || !is_bent( theta ) )
  {
    throw premise_error( "bent_triple_derivative: inputs must be bent" );
  }
  if ( derivative( vartheta, a ) != derivative( theta, a ) )
  {
    throw premise_error( "bent_triple_derivative: D_a vartheta != D_a theta" );
  }
  auto t = make_bent_triple( vartheta, translate( vartheta, a ), theta );
  if ( !t.certified )
  {
    throw premise_error( "bent_triple_derivative: triple failed certification" );
  }
  return t;
}

enum class g_selector
{
  g1,
  g2,
  g3,
  nu2
};

struct WalshCase
{
  int id = 1; ///< 1..4
  g_selector multiplier = g_selector::g1;
};

/// Case from the three values W_f1(a), W_f2(a), W_f3(a) of a bent triple.
inline WalshCase walsh_case( std::int64_t w1, std::int64_t w2, std::int64_t w3 )
{
  if ( w1 == w2 && w2 == w3 )
    return { 1, g_selector::g1 };
  if ( w1 == w2 )
    return { 2, g_selector::nu2 };
  if ( w2 == w3 )
    return { 3, g_selector::g2 };
  return { 4, g_selector::g3 };
}

/// Spectra of a certified triple, computed once for repeated classification.
class TripleSpectra
{
public:
  explicit TripleSpectra( const BentTriple& t )
      : w1_( walsh_transform( t.f1 ) ), w2_( walsh_transform( t.f2 ) ), w3_( walsh_transform( t.f3 ) )
  {
    if ( !t.certified )
    {
      throw premise_error( "walsh_case_classify: triple is not certified" );
    }
  }

  WalshCase classify( point_t alpha ) const
  {
    if ( alpha >= w1_.size() )
    {
      throw dimension_error( "walsh_case_classify: alpha out of range" );
    }
    return walsh_case( w1_[alpha], w2_[alpha], w3_[alpha] );
  }

  const WalshSpectrum& f1() const noexcept { return w1_; }
  const WalshSpectrum& f2() const noexcept { return w2_; }
  const WalshSpectrum& f3() const noexcept { return w3_; }

private:
  WalshSpectrum w1_, w2_, w3_;
};

inline WalshCase walsh_case_classify( const BentTriple& t, point_t alpha )
{
  return TripleSpectra( t ).classify( alpha );
}

inline const BooleanFunction& select_g( g_selector s, const BooleanFunction& g1, const BooleanFunction& g2,
                                        const BooleanFunction& g3, const BooleanFunction& nu2 )
{
  switch ( s )
  {
  case g_selector::g1:
    return g1;
  case g_selector::g2:
    return g2;
  case g_selector::g3:
    return g3;
  default:
    return nu2;
  }
}

/// Minimum resiliency over the four functions of a triple (the three plus their sum).
inline int triple_resiliency( const BooleanFunction& a, const BooleanFunction& b, const BooleanFunction& c )
{
  return std::min( { resiliency( a ), resiliency( b ), resiliency( c ), resiliency( a ^ b ^ c ) } );
}

/*! \brief Generalized indirect sum with the resiliency premise checked

  Requires f1, f2, f3 and their sum to be t-resilient and g1, g2, g3 and their
  sum to be k-resilient; the output is (t+k+1)-resilient.
*/
inline BooleanFunction generalized_indirect_sum_resilient( const BooleanFunction& f1, const BooleanFunction& f2,
                                                           const BooleanFunction& f3, const BooleanFunction& g1,
                                                           const BooleanFunction& g2, const BooleanFunction& g3, int t, int k )
{
  auto f = generalized_indirect_sum( f1, f2, f3, g1, g2, g3 );
  if ( triple_resiliency( f1, f2, f3 ) < t )
  {
    throw premise_error( "generalized_indirect_sum: f-side is not " + std::to_string( t ) + "-resilient" );
  }
  if ( triple_resiliency( g1, g2, g3 ) < k )
  {
    throw premise_error( "generalized_indirect_sum: g-side is not " + std::to_string( k ) + "-resilient" );
  }
  return f;
}

/// Generalized indirect sum of two certified bent triples; the result is bent.
inline BooleanFunction generalized_indirect_sum_bent( const BentTriple& fs, const BentTriple& gs )
{
  if ( !fs.certified || !gs.certified )
  {
    throw premise_error( "generalized_indirect_sum: bent mode needs two certified triples" );
  }
  return generalized_indirect_sum( fs.f1, fs.f2, fs.f3, gs.f1, gs.f2, gs.f3 );
}

/// Output of the bent-triple resilient builders together with what was verified.
struct ResilientBuild
{
  BooleanFunction function;
  std::array<BooleanFunction, 3> g;
  int claimed_resiliency = -1;
  int resiliency = -1;
  std::uint64_t nonlinearity = 0;
  std::uint64_t nonlinearity_bound = 0;
  /// {f_i, f_i + 1} pairwise disjoint.
  bool distinct_up_to_complement = false;
  bool f_all_equal = false;
};

inline bool equal_up_to_complement( const BooleanFunction& a, const BooleanFunction& b )
{
  return a == b || a == ~b;
}

namespace detail
{

inline ResilientBuild finish_resilient_build( const BentTriple& t, std::array<BooleanFunction, 3> g, int k,
                                              std::int64_t g_max )
{
  const auto n = t.num_vars();
  const auto m = g[0].num_vars();
  auto f = generalized_indirect_sum( t.f1, t.f2, t.f3, g[0], g[1], g[2] );
  const auto w = walsh_transform( f );
  ResilientBuild out{ std::move( f ), std::move( g ) };
  out.claimed_resiliency = k;
  out.resiliency = resiliency_report( w ).resiliency;
  out.nonlinearity = nonlinearity( w );
  out.nonlinearity_bound =
      ( std::uint64_t{ 1 } << ( n + m - 1 ) ) - ( std::uint64_t{ 1 } << ( n / 2 - 1 ) ) * static_cast<std::uint64_t>( g_max );
  out.distinct_up_to_complement = !equal_up_to_complement( t.f1, t.f2 ) && !equal_up_to_complement( t.f1, t.f3 ) &&
                                  !equal_up_to_complement( t.f2, t.f3 );
  out.f_all_equal = t.f1 == t.f2 && t.f2 == t.f3;
  if ( out.resiliency < k )
  {
    throw error( "resilient build: output resiliency " + std::to_string( out.resiliency ) + " below claimed " + std::to_string( k ) );
  }
  if ( out.nonlinearity < out.nonlinearity_bound )
  {
    throw error( "resilient build: nonlinearity below the guaranteed bound" );
  }
  return out;
}

} // namespace detail

/*! \brief Bent triple on the x side, k-resilient g's on the y side

  The g's and g1+g2+g3 must be k-resilient (k defaults to the smallest
  resiliency among them). The output is k-resilient with
  N_f >= 2^(n+m-1) - 2^(n/2-1) max(max|W_g1|, max|W_g2|, max|W_g3|, max|W_nu2|).
*/
inline ResilientBuild theorem42_build( const BentTriple& t, const BooleanFunction& g1, const BooleanFunction& g2,
                                       const BooleanFunction& g3, std::optional<int> k = std::nullopt )
{
  if ( !t.certified )
  {
    throw premise_error( "theorem42_build: triple is not certified" );
  }
  if ( t.num_vars() % 2 )
  {
    throw premise_error( "theorem42_build: the bent side needs an even number of variables" );
  }
  const auto m = g1.num_vars();
  detail::require_arity( g2, m, "theorem42_build g2" );
  detail::require_arity( g3, m, "theorem42_build g3" );
  const auto nu2 = g1 ^ g2 ^ g3;
  const int actual = triple_resiliency( g1, g2, g3 );
  const int kk = k.value_or( actual );
  if ( actual < kk )
  {
    throw premise_error( "theorem42_build: g-side is not " + std::to_string( kk ) + "-resilient" );
  }
  const auto g_max = std::max( { walsh_transform( g1 ).max_abs(), walsh_transform( g2 ).max_abs(),
                                 walsh_transform( g3 ).max_abs(), walsh_transform( nu2 ).max_abs() } );
  return detail::finish_resilient_build( t, { g1, g2, g3 }, kk, g_max );
}

/*! \brief k-resilient function from a bent triple and two k-resilient p, q

  Reads the signs of W_f1(0), W_f2(0), W_f3(0). In cases 1 and 3 the g's are
  (p, q, q + y_i); in cases 2 and 4 they are (p + y_i, q + y_i, q).
*/
inline ResilientBuild proposition_cor41( const BentTriple& t, const BooleanFunction& p, const BooleanFunction& q, unsigned i )
{
  if ( !t.certified )
  {
    throw premise_error( "proposition_cor41: triple is not certified" );
  }
  if ( t.num_vars() % 2 )
  {
    throw premise_error( "proposition_cor41: the bent side needs an even number of variables" );
  }
  const auto m = p.num_vars();
  detail::require_arity( q, m, "proposition_cor41 q" );
  if ( i < 1 || i > m )
  {
    throw dimension_error( "proposition_cor41: i=" + std::to_string( i ) + " outside [1, " + std::to_string( m ) + "]" );
  }
  const int k = std::min( resiliency( p ), resiliency( q ) );
  if ( k < 0 )
  {
    throw premise_error( "proposition_cor41: p and q must be resilient (balanced)" );
  }
  const auto yi = BooleanFunction::variable( m, i );
  const auto c = walsh_case( walsh_transform( t.f1 )[0], walsh_transform( t.f2 )[0], walsh_transform( t.f3 )[0] );
  std::array<BooleanFunction, 3> g = ( c.id == 1 || c.id == 3 ) ? std::array<BooleanFunction, 3>{ p, q, q ^ yi }
                                                                 : std::array<BooleanFunction, 3>{ p ^ yi, q ^ yi, q };
  const auto g_max = std::max( walsh_transform( p ).max_abs(), walsh_transform( q ).max_abs() );
  return detail::finish_resilient_build( t, std::move( g ), k, g_max );
}

} // namespace bentkit
