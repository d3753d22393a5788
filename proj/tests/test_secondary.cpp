#include <gtest/gtest.h>

#include <bentkit/oracle.hpp>
#include <bentkit/random.hpp>

using namespace bentkit;

TEST( DirectSum, TwoFourVariableBent )
{
  const auto f = mm_function( PermutationMap::identity( 2 ) );
  const auto h = direct_sum( f, f );
  EXPECT_EQ( nonlinearity( h ), 120u );
  EXPECT_EQ( direct_sum_nonlinearity( 4, 6, 4, 6 ), 120u );
  EXPECT_TRUE( is_bent( h ) );
}

TEST( DirectSum, NonlinearityFormula )
{
  Rng rng( 81 );
  for ( int i = 0; i < 30; ++i )
  {
    const auto n = 2u + static_cast<unsigned>( rng.below( 5 ) );
    const auto m = 2u + static_cast<unsigned>( rng.below( 5 ) );
    const auto f = random_function( n, rng );
    const auto g = random_function( m, rng );
    EXPECT_EQ( nonlinearity( direct_sum( f, g ) ), direct_sum_nonlinearity( n, nonlinearity( f ), m, nonlinearity( g ) ) );
  }
}

TEST( DirectSum, Resiliency )
{
  Rng rng( 82 );
  const auto f = random_resilient_triple( 5, 1, rng )[0];
  EXPECT_GE( resiliency( direct_sum( f, BooleanFunction::variable( 1, 1 ) ) ), resiliency( f ) + 1 );
  const auto h = direct_sum( BooleanFunction::linear( 2, 3 ), BooleanFunction::linear( 2, 3 ) );
  EXPECT_EQ( resiliency( h ), 3 );
}

TEST( IndirectSum, DegeneratesToDirectSum )
{
  Rng rng( 83 );
  const auto f = random_function( 4, rng );
  const auto g1 = random_function( 3, rng );
  const auto g2 = random_function( 3, rng );
  EXPECT_EQ( indirect_sum( f, f, g1, g2 ), direct_sum( f, g1 ) );
}

TEST( IndirectSum, BentAndDual )
{
  Rng rng( 84 );
  for ( int i = 0; i < 10; ++i )
  {
    const auto f1 = random_mm_bent( 4, rng ), f2 = random_mm_bent( 4, rng );
    const auto g1 = random_mm_bent( 4, rng ), g2 = random_mm_bent( 4, rng );
    const auto h = indirect_sum( f1, f2, g1, g2 );
    EXPECT_TRUE( bent_by_definition( h ) );
    EXPECT_EQ( dual( h ), indirect_sum( dual( f1 ), dual( f2 ), dual( g1 ), dual( g2 ) ) );
  }
  EXPECT_THROW( indirect_sum( BooleanFunction( 3 ), BooleanFunction( 4 ), BooleanFunction( 2 ), BooleanFunction( 2 ) ),
                dimension_error );
}

TEST( Rothaus, EqualTripleCollapses )
{
  Rng rng( 85 );
  const auto f = random_mm_bent( 4, rng );
  const auto h = rothaus( f, f, f );
  const auto expect = block_function( 4, 2, [&]( point_t x, point_t t ) { return f[x] != ( t == 3 ); } );
  EXPECT_EQ( h, expect );
  EXPECT_TRUE( is_bent( h ) );
}

TEST( Rothaus, SharedPhiTriple )
{
  Rng rng( 86 );
  for ( int i = 0; i < 10; ++i )
  {
    const auto phi = random_permutation( 2, rng );
    const auto u = random_function( 2, rng );
    const auto h = rothaus( mm_function( phi, u ), mm_function( phi, ~u ), mm_function( phi, random_function( 2, rng ) ) );
    EXPECT_TRUE( bent_by_definition( h ) );
  }
}

TEST( Rothaus, PremiseFailures )
{
  const auto phi = PermutationMap::identity( 2 );
  const auto f = mm_function( phi );
  EXPECT_THROW( rothaus( f, f, BooleanFunction::variable( 4, 1 ) ), premise_error );
  // all three bent, but the summed map y + swap(y) + phi3(y) collides at 0 and 2
  const auto g = mm_function( PermutationMap( 2, 2, { 0, 2, 1, 3 } ) );
  const auto s = mm_function( PermutationMap( 2, 2, { 0, 1, 3, 2 } ) );
  ASSERT_FALSE( is_bent( f ^ g ^ s ) );
  EXPECT_THROW( rothaus( f, g, s ), premise_error );
}

TEST( GeneralizedIndirectSum, ReducesToIndirectSum )
{
  Rng rng( 87 );
  const auto f1 = random_function( 4, rng ), f2 = random_function( 4, rng );
  const auto g1 = random_function( 3, rng ), g2 = random_function( 3, rng );
  EXPECT_EQ( generalized_indirect_sum( f1, f2, f2, g1, g2, g2 ), indirect_sum( f1, f2, g1, g2 ) );
}
