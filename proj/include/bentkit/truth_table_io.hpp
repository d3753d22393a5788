// SPDX-License-Identifier: Apache-2.0

/*!
  \file truth_table_io.hpp
  \brief Canonical text format for truth tables

      n=<decimal>
      bits=<payload>

  For n >= 2 the payload is 2^n / 4 lowercase hex digits; table index i is
  bit (3 - i mod 4) of digit i / 4, so the first digit holds f(0..00) in its
  most significant bit. For n = 1 the payload is the two literal bits f(0)f(1).
  Both lines end in LF.
*/

#pragma once

#include <algorithm>

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "boolean_function.hpp"

namespace bentkit
{

namespace detail
{

inline std::string_view trim_eol( std::string_view line )
{
  if ( !line.empty() && line.back() == '\r' )
  {
    line.remove_suffix( 1 );
  }
  return line;
}

inline int hex_value( char c )
{
  if ( c >= '0' && c <= '9' )
    return c - '0';
  if ( c >= 'a' && c <= 'f' )
    return c - 'a' + 10;
  if ( c >= 'A' && c <= 'F' )
    return c - 'A' + 10;
  return -1;
}

} // namespace detail

inline BooleanFunction parse_truth_table( std::string_view text )
{
  const auto eol = text.find( '\n' );
  if ( eol == std::string_view::npos )
  {
    throw parse_error( "truth table: expected two lines" );
  }
  const auto header = detail::trim_eol( text.substr( 0, eol ) );
  auto rest = text.substr( eol + 1 );
  const auto nl = std::find( rest.begin(), rest.end(), '\n' );
  const auto eol2 = nl == rest.end() ? std::string_view::npos : static_cast<std::size_t>( nl - rest.begin() );
  const auto body = detail::trim_eol( rest.substr( 0, eol2 ) );
  if ( eol2 != std::string_view::npos )
  {
    for ( auto c : rest.substr( eol2 + 1 ) )
    {
      if ( c != '\n' && c != '\r' && c != ' ' && c != '\t' )
      {
        throw parse_error( "truth table: unexpected content after payload line" );
      }
    }
  }

  if ( header.substr( 0, 2 ) != "n=" || header.size() == 2 || header.size() > 4 )
  {
    throw parse_error( "truth table: malformed header '" + std::string( header ) + "'" );
  }
  unsigned n = 0;
  for ( auto c : header.substr( 2 ) )
  {
    if ( c < '0' || c > '9' )
    {
      throw parse_error( "truth table: malformed header '" + std::string( header ) + "'" );
    }
    n = n * 10 + static_cast<unsigned>( c - '0' );
  }
  if ( n < 1 || n > max_vars )
  {
    throw parse_error( "truth table: n=" + std::to_string( n ) + " outside [1, 26]" );
  }
  if ( body.substr( 0, 5 ) != "bits=" )
  {
    throw parse_error( "truth table: expected 'bits=' line" );
  }
  const auto payload = body.substr( 5 );

  BooleanFunction f( n );
  if ( n == 1 )
  {
    if ( payload.size() != 2 )
    {
      throw parse_error( "truth table: n=1 payload must be two 0/1 characters" );
    }
    for ( auto i = 0u; i < 2; ++i )
    {
      if ( payload[i] != '0' && payload[i] != '1' )
      {
        throw parse_error( "truth table: n=1 payload must be two 0/1 characters" );
      }
      f.set( i, payload[i] == '1' );
    }
    return f;
  }

  const auto digits = f.size() / 4;
  if ( payload.size() != digits )
  {
    throw parse_error( "truth table: payload has " + std::to_string( payload.size() * 4 ) + " bits, expected " +
                       std::to_string( f.size() ) );
  }
  for ( point_t d = 0; d < digits; ++d )
  {
    const auto v = detail::hex_value( payload[d] );
    if ( v < 0 )
    {
      throw parse_error( "truth table: invalid hex digit '" + std::string( 1, payload[d] ) + "'" );
    }
    for ( auto k = 0u; k < 4; ++k )
    {
      if ( ( v >> ( 3 - k ) ) & 1 )
      {
        f.set( 4 * d + k, true );
      }
    }
  }
  return f;
}

inline std::string serialize_truth_table( const BooleanFunction& f )
{
  std::string out = "n=" + std::to_string( f.num_vars() ) + "\nbits=";
  if ( f.num_vars() == 1 )
  {
    out += f[0] ? '1' : '0';
    out += f[1] ? '1' : '0';
  }
  else
  {
    static constexpr char hex[] = "0123456789abcdef";
    const auto digits = f.size() / 4;
    out.reserve( out.size() + digits + 1 );
    for ( point_t d = 0; d < digits; ++d )
    {
      const auto v = ( f[4 * d] << 3 ) | ( f[4 * d + 1] << 2 ) | ( f[4 * d + 2] << 1 ) | f[4 * d + 3];
      out += hex[v];
    }
  }
  out += '\n';
  return out;
}

inline BooleanFunction read_truth_table( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw parse_error( "cannot open '" + path + "'" );
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_truth_table( ss.str() );
}

inline void write_truth_table( const BooleanFunction& f, const std::string& path )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
  {
    throw error( "cannot write '" + path + "'" );
  }
  out << serialize_truth_table( f );
}

} // namespace bentkit
