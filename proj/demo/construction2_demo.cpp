// SPDX-License-Identifier: Apache-2.0

// Combine a Maiorana-McFarland function and a PS_ap function into a bent
// function on n + m - 2 variables, then compare the predicted dual.

#include <cstdio>

#include <bentkit/bentkit.hpp>

using namespace bentkit;

int main()
{
  Rng rng( 2024 );
  const auto f = random_mm_bent( 6, rng );
  const auto g = random_psap_bent( 6, rng );

  for ( const auto v : all_variants )
  {
    const auto h = construction2( f, 3, g, 2, v );
    const auto p = analyze( h );
    std::printf( "variant %s: n=%u bent=%d nonlinearity=%llu degree=%u dual-matches=%d\n", v.str().c_str(), p.n, p.bent,
                 static_cast<unsigned long long>( p.nonlinearity ), p.degree,
                 construction2_dual( f, 3, g, 2, v ) == dual( h ) );
  }

  const auto h = construction2( f, 3, g, 2 );
  std::printf( "\n%s", serialize_truth_table( h ).c_str() );
}
