#include <gtest/gtest.h>

#include <bentkit/random.hpp>
#include <bentkit/subspace.hpp>

using namespace bentkit;

TEST( Subspace, EchelonFormIsCanonical )
{
  const auto a = LinearSubspace::span( 4, { 0b1100, 0b0110 } );
  const auto b = LinearSubspace::span( 4, { 0b1010, 0b0110, 0b1100 } );
  EXPECT_EQ( a, b );
  EXPECT_EQ( a.dimension(), 2u );
  EXPECT_EQ( a.basis(), ( std::vector<point_t>{ 0b1010, 0b0110 } ) );
}

TEST( Subspace, Membership )
{
  const auto s = LinearSubspace::span( 5, { 0b10001, 0b01010 } );
  EXPECT_TRUE( s.contains( 0 ) );
  EXPECT_TRUE( s.contains( 0b11011 ) );
  EXPECT_FALSE( s.contains( 0b00001 ) );
  EXPECT_EQ( s.elements().size(), 4u );
  EXPECT_EQ( s.indicator().weight(), 4u );
  EXPECT_THROW( s.contains( 32 ), dimension_error );
}

TEST( Subspace, OrthogonalComplement )
{
  Rng rng( 61 );
  for ( unsigned k = 1; k <= 6; ++k )
  {
    for ( unsigned d = 0; d <= k; ++d )
    {
      const auto s = random_subspace( k, d, rng );
      const auto p = s.orthogonal_complement();
      EXPECT_EQ( p.dimension(), k - d );
      for ( auto u : s.elements() )
        for ( auto v : p.elements() )
          ASSERT_FALSE( dot( u, v ) );
      EXPECT_EQ( p.orthogonal_complement(), s );
    }
  }
  EXPECT_EQ( LinearSubspace( 3 ).orthogonal_complement(), LinearSubspace::full( 3 ) );
}
