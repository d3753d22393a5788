// SPDX-License-Identifier: Apache-2.0

/*!
  \file galois.hpp
  \brief GF(2^m) arithmetic in a polynomial basis, 1 <= m <= 16

  Elements are m-bit integers, bit j holding the coefficient of X^j. Each
  degree uses the numerically smallest irreducible polynomial of that degree,
  so the field (and every table built on it) is fully determined by m.

  Vectors of F_2^m are identified with field elements by
  (x_1, ..., x_m) -> sum_j x_j X^(j-1).
*/

#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "boolean_function.hpp"

namespace bentkit
{

namespace detail
{

/// Carry-less product of two polynomials of degree < 32.
inline std::uint64_t clmul( std::uint32_t a, std::uint32_t b ) noexcept
{
  std::uint64_t r = 0;
  for ( std::uint64_t aa = a; b; b >>= 1, aa <<= 1 )
  {
    if ( b & 1 )
    {
      r ^= aa;
    }
  }
  return r;
}

inline unsigned poly_degree( std::uint64_t p ) noexcept
{
  return 63u - static_cast<unsigned>( std::countl_zero( p ) );
}

inline std::uint64_t poly_mod( std::uint64_t a, std::uint64_t p ) noexcept
{
  const auto dp = poly_degree( p );
  while ( a && poly_degree( a ) >= dp )
  {
    a ^= p << ( poly_degree( a ) - dp );
  }
  return a;
}

/// Exhaustive trial division by every polynomial of degree 1..deg/2.
inline bool is_irreducible( std::uint64_t p )
{
  const auto d = poly_degree( p );
  for ( std::uint64_t q = 2; poly_degree( q ) <= d / 2; ++q )
  {
    if ( poly_mod( p, q ) == 0 )
    {
      return false;
    }
  }
  return true;
}

} // namespace detail

class GaloisField
{
public:
  explicit GaloisField( unsigned m ) : m_( m )
  {
    if ( m < 1 || m > 16 )
    {
      throw dimension_error( "field degree must be in [1, 16], got " + std::to_string( m ) );
    }
    for ( std::uint32_t p = 1u << m; p < ( 2u << m ); ++p )
    {
      if ( detail::is_irreducible( p ) )
      {
        poly_ = p;
        break;
      }
    }
    if ( !detail::is_irreducible( poly_ ) || detail::poly_degree( poly_ ) != m )
    {
      throw error( "no irreducible polynomial found" );
    }
  }

  unsigned degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return 1u << m_; }
  std::uint32_t reduction_poly() const noexcept { return poly_; }

  bool contains( std::uint32_t a ) const noexcept { return a < order(); }

  std::uint32_t add( std::uint32_t a, std::uint32_t b ) const
  {
    check( a );
    check( b );
    return a ^ b;
  }

  std::uint32_t mul( std::uint32_t a, std::uint32_t b ) const
  {
    check( a );
    check( b );
    return static_cast<std::uint32_t>( detail::poly_mod( detail::clmul( a, b ), poly_ ) );
  }

  std::uint32_t pow( std::uint32_t a, std::uint64_t e ) const
  {
    std::uint32_t r = 1;
    while ( e )
    {
      if ( e & 1 )
      {
        r = mul( r, a );
      }
      a = mul( a, a );
      e >>= 1;
    }
    return r;
  }

  /// Multiplicative inverse, a^(2^m - 2).
  std::uint32_t inv( std::uint32_t a ) const
  {
    check( a );
    if ( a == 0 )
    {
      throw premise_error( "inverse of zero" );
    }
    return pow( a, order() - 2 );
  }

  /// a / b with the convention a / 0 = 0.
  std::uint32_t div( std::uint32_t a, std::uint32_t b ) const
  {
    check( a );
    check( b );
    return b == 0 ? 0u : mul( a, inv( b ) );
  }

  /// Absolute trace a + a^2 + ... + a^(2^(m-1)).
  bool trace( std::uint32_t a ) const
  {
    check( a );
    std::uint32_t t = 0;
    auto s = a;
    for ( auto i = 0u; i < m_; ++i )
    {
      t ^= s;
      s = mul( s, s );
    }
    return t == 1;
  }

  /// Index of (x_1, ..., x_m) in the core encoding -> element with bit j-1 = x_j.
  std::uint32_t element_from_index( point_t index ) const
  {
    if ( index >= order() )
    {
      throw dimension_error( "vector out of range for field" );
    }
    std::uint32_t e = 0;
    for ( auto j = 1u; j <= m_; ++j )
    {
      if ( index & variable_mask( m_, j ) )
      {
        e |= 1u << ( j - 1 );
      }
    }
    return e;
  }

  point_t index_from_element( std::uint32_t e ) const
  {
    check( e );
    point_t index = 0;
    for ( auto j = 1u; j <= m_; ++j )
    {
      if ( e & ( 1u << ( j - 1 ) ) )
      {
        index |= variable_mask( m_, j );
      }
    }
    return index;
  }

  friend bool operator==( const GaloisField& a, const GaloisField& b ) noexcept
  {
    return a.m_ == b.m_ && a.poly_ == b.poly_;
  }

private:
  void check( std::uint32_t a ) const
  {
    if ( a >= order() )
    {
      throw dimension_error( "value " + std::to_string( a ) + " is not an element of GF(2^" + std::to_string( m_ ) + ")" );
    }
  }

  unsigned m_;
  std::uint32_t poly_ = 0;
};

/// An element tagged with its field, for mixed-field checking.
class FieldElement
{
public:
  FieldElement( std::shared_ptr<const GaloisField> field, std::uint32_t bits ) : field_( std::move( field ) ), bits_( bits )
  {
    if ( !field_->contains( bits_ ) )
    {
      throw dimension_error( "value is not an element of the field" );
    }
  }

  const GaloisField& field() const noexcept { return *field_; }
  std::uint32_t bits() const noexcept { return bits_; }

  friend FieldElement operator+( const FieldElement& a, const FieldElement& b )
  {
    return { a.same_field( b ), a.field_->add( a.bits_, b.bits_ ) };
  }
  friend FieldElement operator*( const FieldElement& a, const FieldElement& b )
  {
    return { a.same_field( b ), a.field_->mul( a.bits_, b.bits_ ) };
  }
  friend FieldElement operator/( const FieldElement& a, const FieldElement& b )
  {
    return { a.same_field( b ), a.field_->div( a.bits_, b.bits_ ) };
  }
  FieldElement inverse() const { return { field_, field_->inv( bits_ ) }; }
  bool trace() const { return field_->trace( bits_ ); }

  friend bool operator==( const FieldElement& a, const FieldElement& b )
  {
    return *a.field_ == *b.field_ && a.bits_ == b.bits_;
  }

private:
  std::shared_ptr<const GaloisField> same_field( const FieldElement& o ) const
  {
    if ( !( *field_ == *o.field_ ) )
    {
      throw dimension_error( "operands belong to different fields" );
    }
    return field_;
  }

  std::shared_ptr<const GaloisField> field_;
  std::uint32_t bits_;
};

} // namespace bentkit
