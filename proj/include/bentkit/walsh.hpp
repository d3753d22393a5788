// SPDX-License-Identifier: Apache-2.0

/*!
  \file walsh.hpp
  \brief Walsh-Hadamard spectrum via the in-place butterfly

  W_f(w) = sum_x (-1)^(f(x) + w.x), indexed by w in the same encoding as the
  truth table. The butterfly is O(n 2^n) and exact in 64-bit integers.
*/

#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "boolean_function.hpp"

namespace bentkit
{

class WalshSpectrum
{
public:
  WalshSpectrum( unsigned n, std::vector<std::int64_t> values ) : n_( n ), values_( std::move( values ) )
  {
    if ( values_.size() != ( std::size_t{ 1 } << n ) )
    {
      throw dimension_error( "spectrum length does not match 2^n" );
    }
  }

  unsigned num_vars() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::int64_t operator[]( point_t w ) const noexcept { return values_[w]; }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }

  std::int64_t max_abs() const noexcept
  {
    std::int64_t m = 0;
    for ( auto v : values_ )
    {
      m = std::max( m, std::abs( v ) );
    }
    return m;
  }

  /// Number of w with W(w) != 0.
  std::size_t support_size() const noexcept
  {
    std::size_t s = 0;
    for ( auto v : values_ )
    {
      s += v != 0;
    }
    return s;
  }

  /// Sum of squares; equals 2^(2n) for any Boolean function.
  std::uint64_t energy() const noexcept
  {
    std::uint64_t e = 0;
    for ( auto v : values_ )
    {
      e += static_cast<std::uint64_t>( v * v );
    }
    return e;
  }

  bool satisfies_parseval() const noexcept { return energy() == ( std::uint64_t{ 1 } << ( 2 * n_ ) ); }

  friend bool operator==( const WalshSpectrum&, const WalshSpectrum& ) = default;

private:
  unsigned n_;
  std::vector<std::int64_t> values_;
};

inline WalshSpectrum walsh_transform( const BooleanFunction& f )
{
  const auto size = f.size();
  std::vector<std::int64_t> v( size );
  for ( point_t i = 0; i < size; ++i )
  {
    v[i] = f[i] ? -1 : 1;
  }
  for ( point_t h = 1; h < size; h <<= 1 )
  {
    for ( point_t i = 0; i < size; i += h << 1 )
    {
      for ( point_t j = i; j < i + h; ++j )
      {
        const auto a = v[j];
        const auto b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
  return WalshSpectrum( f.num_vars(), std::move( v ) );
}

} // namespace bentkit
