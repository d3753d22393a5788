#include <gtest/gtest.h>

#include <bentkit/constructions/corollaries.hpp>
#include <bentkit/oracle.hpp>
#include <bentkit/random.hpp>

using namespace bentkit;

TEST( CorollaryNmm, MatchesComposition )
{
  Rng rng( 101 );
  for ( int i = 0; i < 20; ++i )
  {
    const auto hn = 2u + static_cast<unsigned>( rng.below( 2 ) );
    const auto hm = 2u + static_cast<unsigned>( rng.below( 2 ) );
    const auto phi = random_permutation( hn, rng );
    const auto psi = random_permutation( hm, rng );
    const auto u = random_function( hn, rng );
    const auto v = random_function( hm, rng );
    const auto mu = 1 + static_cast<unsigned>( rng.below( hn ) );
    const auto rho = 1 + static_cast<unsigned>( rng.below( hm ) );
    const auto h = corollary_nmm( phi, psi, mu, rho, u, v );
    EXPECT_EQ( h, construction2( mm_function( phi, u ), mu, mm_function( psi, v ), rho ) );
    EXPECT_TRUE( is_bent( h ) );
  }
}

TEST( CorollaryNmm, IdentityMaps )
{
  const auto id = PermutationMap::identity( 2 );
  const auto h = corollary_nmm( id, id, 1, 1, BooleanFunction( 2 ), BooleanFunction( 2 ) );
  EXPECT_EQ( h.num_vars(), 6u );
  EXPECT_TRUE( bent_by_definition( h ) );
}

TEST( CorollaryNmm, CanStayMaioranaMcFarland )
{
  // phi = psi = identity, mu = rho = 1: h = x2 x4 + y2 y4 + x3 y3 over the
  // layout x2 | x3 x4 | y2 | y3 y4, affine in (x2, x3, y2) for fixed (x4, y3, y4)
  const auto id = PermutationMap::identity( 2 );
  const auto h = corollary_nmm( id, id, 1, 1, BooleanFunction( 2 ), BooleanFunction( 2 ) );
  for ( point_t rest = 0; rest < 8; ++rest )
  {
    const point_t x4 = rest >> 2, y34 = rest & 3;
    const auto sub = BooleanFunction::from_predicate( 3, [&]( point_t a ) {
      const point_t x2 = a >> 2, x3 = ( a >> 1 ) & 1, y2 = a & 1;
      return h[( x2 << 5 ) | ( x3 << 4 ) | ( x4 << 3 ) | ( y2 << 2 ) | y34];
    } );
    EXPECT_LE( degree( sub ), 1u );
  }
}

TEST( CorollaryNmm, Errors )
{
  const auto id = PermutationMap::identity( 2 );
  EXPECT_THROW( corollary_nmm( id, id, 3, 1, BooleanFunction( 2 ), BooleanFunction( 2 ) ), dimension_error );
  EXPECT_THROW( corollary_nmm( PermutationMap( 2, 2, { 0, 0, 1, 2 } ), id, 1, 1, BooleanFunction( 2 ), BooleanFunction( 2 ) ),
                premise_error );
}

TEST( HyperplaneSplit, CoordinateHyperplaneMatchesRestriction )
{
  Rng rng( 102 );
  const auto f = random_function( 6, rng );
  for ( auto j = 1u; j <= 6; ++j )
  {
    const auto [f0, f1] = hyperplane_split( f, variable_mask( 6, j ), variable_mask( 6, j ) );
    EXPECT_EQ( f0, restrict( f, j, false ) );
    EXPECT_EQ( f1, restrict( f, j, true ) );
  }
  EXPECT_THROW( hyperplane_split( f, 0, 1 ), premise_error );
  EXPECT_THROW( hyperplane_split( f, 3, 3 ), premise_error );
}

TEST( CorollaryPsab, FourByFour )
{
  const GaloisField F( 2 );
  const FieldFunction theta{ 0, 0, 1, 1 };
  // Tr(1 * alpha) = 1 needs alpha in {w, w^2}
  const PsabSide side{ &F, theta, 1, 0, 2, 0 };
  const auto h = corollary_psab( side, side );
  EXPECT_EQ( h.num_vars(), 6u );
  EXPECT_TRUE( bent_by_definition( h ) );
}

TEST( CorollaryPsab, TraceConditionViolated )
{
  const GaloisField F( 2 );
  const PsabSide bad{ &F, { 0, 0, 1, 1 }, 1, 0, 1, 0 };
  const PsabSide good{ &F, { 0, 0, 1, 1 }, 1, 0, 2, 0 };
  EXPECT_THROW( corollary_psab( bad, good ), premise_error );
  const PsabSide zero{ &F, { 0, 0, 1, 1 }, 0, 0, 2, 0 };
  EXPECT_THROW( corollary_psab( good, zero ), premise_error );
}

TEST( CorollaryPsab, GeneralHyperplanesAreComplementary )
{
  Rng rng( 103 );
  for ( unsigned k : { 2u, 3u } )
  {
    const GaloisField F( k );
    for ( int i = 0; i < 10; ++i )
    {
      PsabSide s{ &F, random_psap_theta( F, rng ), 0, 0, 0, 0 };
      do
      {
        s.a = static_cast<std::uint32_t>( rng.below( F.order() ) );
        s.b = static_cast<std::uint32_t>( rng.below( F.order() ) );
      } while ( s.a == 0 && s.b == 0 );
      do
      {
        s.alpha = static_cast<std::uint32_t>( rng.below( F.order() ) );
        s.beta = static_cast<std::uint32_t>( rng.below( F.order() ) );
      } while ( !F.trace( F.add( F.mul( s.a, s.alpha ), F.mul( s.b, s.beta ) ) ) );
      const auto [f0, f1] = psab_split( s );
      EXPECT_TRUE( complementary_plateaued( f0, f1 ) );
      EXPECT_TRUE( is_bent( corollary_psab( s, s ) ) );
    }
  }
}

TEST( CorollaryRothaus, DegenerateTriples )
{
  Rng rng( 104 );
  const auto f = random_mm_bent( 4, rng );
  const auto g = random_mm_bent( 4, rng );
  const auto h = corollary_rothaus( f, f, f, g, g, g );
  // x-block (x, x5), y-block (y, y5)
  const auto expect = block_function( 5, 5, [&]( point_t x, point_t y ) { return ( f[x >> 1] != g[y >> 1] ) != ( x & y & 1 ); } );
  EXPECT_EQ( h, expect );
}

TEST( CorollaryRothaus, MatchesComposition )
{
  Rng rng( 105 );
  for ( int i = 0; i < 10; ++i )
  {
    auto triple = [&]( unsigned k ) {
      const auto phi = random_permutation( k, rng );
      const auto u = random_function( k, rng );
      return std::array{ mm_function( phi, u ), mm_function( phi, ~u ), mm_function( phi, random_function( k, rng ) ) };
    };
    const auto fs = triple( 2 );
    const auto gs = triple( 2 );
    const auto h = corollary_rothaus( fs[0], fs[1], fs[2], gs[0], gs[1], gs[2] );
    EXPECT_EQ( h, construction2( rothaus( fs[0], fs[1], fs[2] ), 6, rothaus( gs[0], gs[1], gs[2] ), 6 ) );
    EXPECT_TRUE( is_bent( h ) );
  }
}

namespace
{

/// The class D corollary as displayed, summing over tau in E1 and sigma in Xi1.
BooleanFunction class_d_displayed( const PermutationMap& phi, const LinearSubspace& e1, const LinearSubspace& e2,
                                   const PermutationMap& psi, const LinearSubspace& xi1, const LinearSubspace& xi2,
                                   unsigned mu, unsigned rho )
{
  const auto hn = phi.domain_dim(), hm = psi.domain_dim();
  const auto t1 = e1.elements(), s1 = xi1.elements();
  return block_function( 2 * hn - 1, 2 * hm - 1, [&]( point_t xi, point_t yi ) {
    const auto xa = xi >> hn, X = xi & ( ( point_t{ 1 } << hn ) - 1 );
    const auto ya = yi >> hm, Y = yi & ( ( point_t{ 1 } << hm ) - 1 );
    // sum over tau of prod_{i != mu} (x_i + tau_i + 1) is [tau agrees with x off mu]
    auto agree = [&]( point_t tau, point_t a, unsigned k, unsigned skip ) { return remove_bit( tau, k, skip ) == a; };
    bool a_pure = false, a_all = false, b_pure = false, b_all = false;
    for ( auto tau : t1 )
    {
      if ( agree( tau, xa, hn, mu ) )
      {
        a_all ^= true;
        a_pure ^= !( tau & variable_mask( hn, mu ) );
      }
    }
    for ( auto s : s1 )
    {
      if ( agree( s, ya, hm, rho ) )
      {
        b_all ^= true;
        b_pure ^= !( s & variable_mask( hm, rho ) );
      }
    }
    const bool e2y = e2.contains( X ), x2y = xi2.contains( Y );
    bool h = dot( xa, remove_bit( phi( X ), hn, mu ) ) != dot( ya, remove_bit( psi( Y ), hm, rho ) );
    h ^= a_pure && e2y;
    h ^= b_pure && x2y;
    h ^= phi.coordinate( X, mu ) && psi.coordinate( Y, rho );
    h ^= psi.coordinate( Y, rho ) && a_all && e2y;
    h ^= phi.coordinate( X, mu ) && b_all && x2y;
    h ^= a_all && e2y && b_all && x2y;
    return h;
  } );
}

} // namespace

TEST( CorollaryClassD, DisplayedFormulaAtFourByFour )
{
  Rng rng( 106 );
  for ( int i = 0; i < 30; ++i )
  {
    const auto p = random_class_d_params( 2, rng );
    const auto q = random_class_d_params( 2, rng );
    const auto mu = 1 + static_cast<unsigned>( rng.below( 2 ) );
    const auto rho = 1 + static_cast<unsigned>( rng.below( 2 ) );
    const auto h = corollary_class_d( p.phi, p.e1, p.e2, q.phi, q.e1, q.e2, mu, rho );
    EXPECT_EQ( h, class_d_displayed( p.phi, p.e1, p.e2, q.phi, q.e1, q.e2, mu, rho ) );
    EXPECT_TRUE( bent_by_definition( h ) );
  }
}

TEST( CorollaryClassD, TrivialSubspaces )
{
  const auto id = PermutationMap::identity( 2 );
  const auto h = corollary_class_d( id, LinearSubspace::full( 2 ), LinearSubspace( 2 ), id, LinearSubspace::full( 2 ),
                                    LinearSubspace( 2 ), 1, 2 );
  EXPECT_TRUE( bent_by_definition( h ) );
  EXPECT_THROW( corollary_class_d( id, LinearSubspace( 2 ), LinearSubspace( 2 ), id, LinearSubspace::full( 2 ),
                                   LinearSubspace( 2 ), 1, 1 ),
                premise_error );
  EXPECT_THROW( corollary_class_d( id, LinearSubspace::full( 2 ), LinearSubspace( 2 ), id, LinearSubspace::full( 2 ),
                                   LinearSubspace( 2 ), 3, 1 ),
                dimension_error );
}

TEST( CorollaryClassD, DegreeWindow )
{
  Rng rng( 107 );
  for ( int i = 0; i < 10; ++i )
  {
    const auto p = random_class_d_params( 3, rng );
    const auto q = random_class_d_params( 3, rng );
    const auto h = corollary_class_d( p.phi, p.e1, p.e2, q.phi, q.e1, q.e2, 1 + i % 3, 1 + ( i / 3 ) % 3 );
    EXPECT_GE( degree( h ), 2u );
    EXPECT_LE( degree( h ), 4u );
  }
}
