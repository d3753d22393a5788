#include <gtest/gtest.h>

#include <bentkit/anf.hpp>
#include <bentkit/boolean_function.hpp>
#include <bentkit/random.hpp>

using namespace bentkit;

namespace
{

BooleanFunction from_bits( unsigned n, std::initializer_list<int> bits )
{
  BooleanFunction f( n );
  point_t i = 0;
  for ( auto b : bits )
    f.set( i++, b != 0 );
  return f;
}

} // namespace

TEST( Encoding, FirstVariableIsMostSignificant )
{
  const std::uint8_t x[] = { 1, 0, 0 };
  EXPECT_EQ( encode( x ), 4u );
  EXPECT_EQ( variable_mask( 3, 1 ), 4u );
  EXPECT_EQ( variable_mask( 3, 3 ), 1u );
}

TEST( Encoding, RoundTrip )
{
  for ( point_t i = 0; i < 64; ++i )
  {
    const auto v = decode( i, 6 );
    EXPECT_EQ( encode( v ), i );
  }
}

TEST( BooleanFunctionTest, VariableTable )
{
  const auto x1 = BooleanFunction::variable( 2, 1 );
  EXPECT_EQ( x1, from_bits( 2, { 0, 0, 1, 1 } ) );
  const auto x2 = BooleanFunction::variable( 2, 2 );
  EXPECT_EQ( x2, from_bits( 2, { 0, 1, 0, 1 } ) );
}

TEST( BooleanFunctionTest, ArityLimits )
{
  EXPECT_THROW( BooleanFunction( 0 ), dimension_error );
  EXPECT_THROW( BooleanFunction( 27 ), dimension_error );
  EXPECT_NO_THROW( BooleanFunction( 1 ) );
}

TEST( BooleanFunctionTest, ComplementKeepsTailClear )
{
  BooleanFunction f( 3 );
  const auto g = ~f;
  EXPECT_EQ( g.weight(), 8u );
  EXPECT_TRUE( g.is_constant() );
  EXPECT_EQ( g.words()[0], 0xffu );
}

TEST( Evaluate, Examples )
{
  const std::uint8_t zero[] = { 0, 0 };
  const std::uint8_t ones[] = { 1, 1 };
  EXPECT_FALSE( evaluate( BooleanFunction( 2 ), ones ) );
  EXPECT_TRUE( evaluate( from_bits( 2, { 0, 0, 0, 1 } ), ones ) );
  EXPECT_TRUE( evaluate( from_bits( 2, { 1, 0, 0, 0 } ), zero ) );
  const std::uint8_t bad[] = { 1, 0, 1 };
  EXPECT_THROW( evaluate( BooleanFunction( 2 ), bad ), dimension_error );
}

TEST( Combine, Laws )
{
  Rng rng( 11 );
  const auto f = random_function( 7, rng );
  EXPECT_EQ( combine( f, f, combine_kind::xor_op ), BooleanFunction( 7 ) );
  EXPECT_EQ( combine( f, BooleanFunction::constant( 7, true ), combine_kind::and_op ), f );
  EXPECT_THROW( combine( f, BooleanFunction( 6 ), combine_kind::xor_op ), dimension_error );
}

TEST( Translate, Involution )
{
  Rng rng( 12 );
  const auto f = random_function( 9, rng );
  for ( point_t a : { 0u, 1u, 77u, 511u } )
    EXPECT_EQ( translate( translate( f, a ), a ), f );
}

TEST( Derivative, Examples )
{
  Rng rng( 13 );
  const auto f = random_function( 6, rng );
  EXPECT_EQ( derivative( f, 0 ), BooleanFunction( 6 ) );
  const point_t w = 0b101101;
  for ( point_t a : { 1u, 6u, 63u } )
    EXPECT_EQ( derivative( BooleanFunction::linear( 6, w ), a ), BooleanFunction::constant( 6, dot( w, a ) ) );
  const std::uint8_t a[] = { 1, 0, 0, 0, 0, 0 };
  EXPECT_EQ( derivative( f, a ), derivative( f, 32 ) );
}

TEST( Derivative, SharedPhiGivesEqualDerivatives )
{
  Rng rng( 14 );
  const auto phi = random_permutation( 3, rng );
  const auto t1 = mm_function( phi, random_function( 3, rng ) );
  const auto t2 = mm_function( phi, random_function( 3, rng ) );
  for ( point_t ap = 1; ap < 8; ++ap )
    EXPECT_EQ( derivative( t1, ap << 3 ), derivative( t2, ap << 3 ) );
}

TEST( Restrict, Examples )
{
  const auto x1x2 = from_bits( 2, { 0, 0, 0, 1 } );
  EXPECT_EQ( restrict( x1x2, 1, false ), BooleanFunction( 1 ) );
  EXPECT_EQ( restrict( x1x2, 1, true ), BooleanFunction::variable( 1, 1 ) );
  EXPECT_THROW( restrict( BooleanFunction( 1 ), 1, false ), dimension_error );
  EXPECT_THROW( restrict( x1x2, 3, false ), dimension_error );
  EXPECT_THROW( restrict( x1x2, 0, false ), dimension_error );
}

TEST( Restrict, KeepsRelativeOrder )
{
  // f = x1 x3 + x4 in 4 variables; fixing x2 leaves x1 x2' + x3' in 3 variables
  const auto f = BooleanFunction::from_predicate( 4, []( point_t i ) { return ( ( i >> 3 ) & ( i >> 1 ) & 1 ) != ( i & 1 ); } );
  const auto expect =
      BooleanFunction::from_predicate( 3, []( point_t i ) { return ( ( i >> 2 ) & ( i >> 1 ) & 1 ) != ( i & 1 ); } );
  EXPECT_EQ( restrict( f, 2, false ), expect );
  EXPECT_EQ( restrict( f, 2, true ), expect );
}

TEST( Restrict, XorOfRestrictionsIsDerivative )
{
  Rng rng( 15 );
  for ( int trial = 0; trial < 5; ++trial )
  {
    const auto f = random_function( 8, rng );
    for ( auto j = 1u; j <= 8; ++j )
    {
      const auto d = restrict( derivative( f, variable_mask( 8, j ) ), j, false );
      EXPECT_EQ( restrict( f, j, false ) ^ restrict( f, j, true ), d );
    }
  }
}

TEST( Restrict, DegreeOfXorNeverGrows )
{
  Rng rng( 16 );
  for ( int trial = 0; trial < 20; ++trial )
  {
    const auto f = random_function( 7, rng );
    const auto g = random_mm_bent( 6, rng );
    const auto g7 = BooleanFunction::from_predicate( 7, [&]( point_t x ) { return g[x >> 1]; } );
    EXPECT_LE( degree( f ^ g7 ), std::max( degree( f ), degree( g7 ) ) );
  }
}

TEST( BlockFunction, Layout )
{
  const auto h = block_function( 2, 3, []( point_t x, point_t y ) { return x == 2 && y == 5; } );
  EXPECT_EQ( h.weight(), 1u );
  EXPECT_TRUE( h[( 2u << 3 ) | 5u] );
}
