// SPDX-License-Identifier: Apache-2.0

// A 1-resilient 14-variable function from a 6-variable bent triple and two
// 8-variable 1-resilient Maiorana-McFarland functions.

#include <cstdio>

#include <bentkit/bentkit.hpp>

using namespace bentkit;

int main()
{
  Rng rng( 7 );
  const auto t = random_derivative_triple( 6, rng );
  const PermutationMap phi( 3, 5, { 0b00011, 0b00101, 0b00110, 0b01001, 0b01010, 0b01100, 0b10001, 0b10010 } );
  const auto g = random_resilient_mm_triple( phi, rng );

  std::printf( "inputs: p (8,%d,%llu)  q (8,%d,%llu)\n", resiliency( g[0] ), static_cast<unsigned long long>( nonlinearity( g[0] ) ),
               resiliency( g[1] ), static_cast<unsigned long long>( nonlinearity( g[1] ) ) );

  const auto b = proposition_cor41( t, g[0], g[1], 1 );
  std::printf( "output: (%u,%d,%llu)  bound %llu\n", b.function.num_vars(), b.resiliency,
               static_cast<unsigned long long>( b.nonlinearity ), static_cast<unsigned long long>( b.nonlinearity_bound ) );

  const auto c = theorem42_build( t, g[0], g[1], g[2] );
  std::printf( "three g's: (%u,%d,%llu)  plateaued order %u\n", c.function.num_vars(), c.resiliency,
               static_cast<unsigned long long>( c.nonlinearity ), plateaued_order( c.function ).order.value_or( 0 ) );
}
