#include <gtest/gtest.h>

#include <bentkit/analysis.hpp>
#include <bentkit/random.hpp>

using namespace bentkit;

namespace
{

BooleanFunction x1x2()
{
  BooleanFunction f( 2 );
  f.set( 3, true );
  return f;
}

BooleanFunction x1x3_x2x4()
{
  return mm_function( PermutationMap::identity( 2 ), BooleanFunction( 2 ) );
}

/// phi: F_2^3 -> F_2^5 injective with every image of weight >= 2.
PermutationMap heavy_injection()
{
  return PermutationMap( 3, 5, { 0b00011, 0b00101, 0b00110, 0b01001, 0b01010, 0b01100, 0b10001, 0b10010 } );
}

} // namespace

TEST( Nonlinearity, Examples )
{
  EXPECT_EQ( nonlinearity( BooleanFunction::linear( 6, 0b100101 ) ), 0u );
  EXPECT_EQ( nonlinearity( ~BooleanFunction::linear( 6, 3 ) ), 0u );
  EXPECT_EQ( nonlinearity( x1x2() ), 1u );
  EXPECT_EQ( nonlinearity( x1x3_x2x4() ), 6u );
}

TEST( Bent, Examples )
{
  EXPECT_TRUE( is_bent( x1x2() ) );
  EXPECT_TRUE( is_bent( x1x3_x2x4() ) );
  EXPECT_FALSE( is_bent( BooleanFunction::linear( 4, 5 ) ) );
  Rng rng( 51 );
  for ( int i = 0; i < 20; ++i )
    EXPECT_FALSE( is_bent( random_function( 5, rng ) ) );
}

TEST( Dual, Examples )
{
  EXPECT_EQ( dual( x1x2() ), x1x2() );
  EXPECT_EQ( dual( x1x3_x2x4() ), x1x3_x2x4() );
  EXPECT_THROW( dual( BooleanFunction::linear( 4, 1 ) ), premise_error );
}

TEST( Dual, Involution )
{
  Rng rng( 52 );
  for ( int i = 0; i < 20; ++i )
  {
    const auto f = random_mm_bent( 6, rng );
    EXPECT_EQ( dual( dual( f ) ), f );
  }
}

TEST( Resiliency, Examples )
{
  const auto r = resiliency_report( BooleanFunction::linear( 3, 7 ) );
  EXPECT_EQ( r.ci_order, 2u );
  EXPECT_EQ( r.resiliency, 2 );
  const auto s = resiliency_report( x1x2() );
  EXPECT_EQ( s.ci_order, 0u );
  EXPECT_EQ( s.resiliency, -1 );
}

TEST( Resiliency, UnbalancedKeepsCiOrder )
{
  // f = (x1 + x2)(x3 + x4) is CI of order 1 and not balanced
  const auto f = BooleanFunction::linear( 4, 0b1100 ) & BooleanFunction::linear( 4, 0b0011 );
  const auto r = resiliency_report( f );
  EXPECT_EQ( r.ci_order, 1u );
  EXPECT_EQ( r.resiliency, -1 );
}

TEST( Resiliency, HeavyInjectionMaioranaMcFarland )
{
  const auto f = mm_function( heavy_injection(), BooleanFunction( 3 ) );
  ASSERT_EQ( f.num_vars(), 8u );
  EXPECT_EQ( resiliency( f ), 1 );
  EXPECT_EQ( nonlinearity( f ), 112u );
}

TEST( Plateaued, Examples )
{
  EXPECT_EQ( plateaued_order( x1x3_x2x4() ).order, 4u );
  EXPECT_EQ( plateaued_order( BooleanFunction::linear( 5, 3 ) ).order, 0u );
  EXPECT_EQ( plateaued_order( BooleanFunction( 5 ) ).order, 0u );
  EXPECT_FALSE( plateaued_order( BooleanFunction( 5 ) ).semi_bent );
  Rng rng( 53 );
  const auto f = random_mm_bent( 6, rng );
  const auto r = plateaued_order( restrict( f, 2, true ) );
  EXPECT_EQ( r.order, 4u );
  EXPECT_TRUE( r.semi_bent );
}

TEST( Plateaued, NotPlateaued )
{
  // x1 x2 x3 has three distinct spectral magnitudes
  BooleanFunction f( 3 );
  f.set( 7, true );
  EXPECT_FALSE( plateaued_order( f ).order.has_value() );
}

TEST( Complementary, RestrictionsOfBent )
{
  Rng rng( 54 );
  for ( int i = 0; i < 5; ++i )
  {
    const auto f = random_bent( 6, static_cast<bent_family>( i % 3 ), rng );
    for ( auto j = 1u; j <= 6; ++j )
      EXPECT_TRUE( complementary_plateaued( restrict( f, j, false ), restrict( f, j, true ) ) );
  }
}

TEST( Complementary, Negative )
{
  const auto a = BooleanFunction::linear( 3, 5 );
  EXPECT_FALSE( complementary_plateaued( a, a ) );
  EXPECT_FALSE( complementary_plateaued( a, a ^ BooleanFunction::variable( 3, 2 ) ) );
  EXPECT_THROW( complementary_plateaued( a, BooleanFunction( 4 ) ), dimension_error );
  EXPECT_THROW( complementary_plateaued( BooleanFunction( 4 ), BooleanFunction( 4 ) ), dimension_error );
}

TEST( Bounds, Examples )
{
  EXPECT_EQ( bounds_report( 8, 1, 5 ).nonlinearity_cap, 116u );
  EXPECT_EQ( *bounds_report( 8, 1, 5 ).sarkar_maitra_cap, 116u );
  EXPECT_EQ( bounds_report( 7, 6, 1 ).degree_cap, 1u );
  const auto u = bounds_report( 8, -1, 8 );
  EXPECT_EQ( u.nonlinearity_cap, 120u );
  EXPECT_FALSE( u.sarkar_maitra_cap.has_value() );
  EXPECT_EQ( bounds_report( 7, 2, 4 ).degree_cap, 4u );
  EXPECT_EQ( bounds_report( 7, 2, 4 ).nonlinearity_cap, 56u );
  EXPECT_THROW( bounds_report( 8, -2, 1 ), dimension_error );
}

TEST( Profile, FieldsAndInvariants )
{
  Rng rng( 55 );
  for ( int i = 0; i < 50; ++i )
  {
    const auto n = 3u + static_cast<unsigned>( rng.below( 8 ) );
    const auto f = i % 2 ? random_function( n, rng ) : random_balanced( n, rng );
    const auto p = analyze( f );
    EXPECT_EQ( p.resiliency, p.balanced ? static_cast<int>( p.ci_order ) : -1 );
    if ( p.bent )
    {
      EXPECT_EQ( p.nonlinearity, ( 1u << ( n - 1 ) ) - ( 1u << ( n / 2 - 1 ) ) );
    }
    if ( p.resiliency >= 0 && static_cast<unsigned>( p.resiliency ) + 2 <= n )
    {
      EXPECT_TRUE( p.sarkar_maitra_bound.has_value() );
      EXPECT_LE( p.degree + p.resiliency + 1, n );
    }
    else
    {
      EXPECT_FALSE( p.sarkar_maitra_bound.has_value() );
    }
    EXPECT_TRUE( respects_bounds( p ) );
  }
}

TEST( Profile, Bent )
{
  const auto p = analyze( x1x3_x2x4() );
  EXPECT_TRUE( p.bent );
  EXPECT_EQ( p.nonlinearity, 6u );
  EXPECT_EQ( p.plateaued_order, 4u );
  EXPECT_FALSE( p.semi_bent );
}

TEST( Profile, SarkarMaitraDivisibility )
{
  Rng rng( 56 );
  for ( int i = 0; i < 30; ++i )
  {
    const auto t = static_cast<int>( rng.below( 3 ) );
    const auto fs = random_resilient_triple( 7, t, rng );
    for ( const auto& f : fs )
    {
      const auto p = analyze( f );
      ASSERT_GE( p.resiliency, t );
      if ( p.resiliency <= 5 )
        EXPECT_EQ( p.nonlinearity % ( 1u << ( p.resiliency + 1 ) ), 0u );
    }
  }
}
