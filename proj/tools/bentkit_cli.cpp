// SPDX-License-Identifier: Apache-2.0

// bentkit command-line front end.
//
//   bentkit analyze f.tt
//   bentkit build construction2 --f f.tt --mu 4 --g g.tt --rho 4 --variant 00 -o h.tt
//   bentkit verify --property walsh f.tt
//   bentkit dual f.tt [-o d.tt] | wht f.tt | anf f.tt [-o a.tt]
//
// Exit codes: 0 ok, 1 oracle divergence or I/O failure, 2 parse error,
// 3 premise failure, 4 size cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <bentkit/bentkit.hpp>
#include <bentkit/report_json.hpp>

using namespace bentkit;
using json = nlohmann::ordered_json;

namespace
{

constexpr int exit_divergence = 1;
constexpr int exit_parse = 2;
constexpr int exit_premise = 3;
constexpr int exit_cap = 4;

/// Construction parameters, merged from --param-file and flags (flags win).
class Params
{
public:
  void set( const std::string& key, const std::string& value ) { values_[key] = value; }

  void load_file( const std::string& path )
  {
    std::ifstream in( path );
    if ( !in )
    {
      throw parse_error( "cannot open parameter file '" + path + "'" );
    }
    nlohmann::json j;
    try
    {
      in >> j;
    }
    catch ( const nlohmann::json::exception& e )
    {
      throw parse_error( "parameter file: " + std::string( e.what() ) );
    }
    if ( !j.is_object() )
    {
      throw parse_error( "parameter file must hold a JSON object" );
    }
    for ( const auto& [k, v] : j.items() )
    {
      if ( values_.count( k ) )
        continue;
      values_[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
  }

  bool has( const std::string& key ) const { return values_.count( key ) != 0; }

  const std::string& str( const std::string& key ) const
  {
    const auto it = values_.find( key );
    if ( it == values_.end() )
    {
      throw parse_error( "missing parameter --" + key );
    }
    return it->second;
  }

  std::uint64_t num( const std::string& key ) const { return parse_number( key, str( key ) ); }

  std::uint64_t num_or( const std::string& key, std::uint64_t fallback ) const
  {
    return has( key ) ? num( key ) : fallback;
  }

  /// Hex integer, with or without a 0x prefix.
  std::uint64_t hex( const std::string& key ) const { return parse_hex( key, str( key ) ); }

  std::vector<std::uint64_t> hex_list( const std::string& key ) const
  {
    std::vector<std::uint64_t> out;
    std::stringstream ss( str( key ) );
    std::string item;
    while ( std::getline( ss, item, ',' ) )
    {
      out.push_back( parse_hex( key, item ) );
    }
    return out;
  }

  BooleanFunction table( const std::string& key ) const { return read_truth_table( str( key ) ); }

  /// An inline table in truth-table hex form, e.g. --theta 3 for [0, 0, 1, 1].
  BooleanFunction inline_table( const std::string& key, unsigned n ) const
  {
    try
    {
      return parse_truth_table( "n=" + std::to_string( n ) + "\nbits=" + str( key ) + "\n" );
    }
    catch ( const parse_error& e )
    {
      throw parse_error( "--" + key + ": " + e.what() );
    }
  }

private:
  static std::uint64_t parse_number( const std::string& key, const std::string& s )
  {
    std::size_t pos = 0;
    std::uint64_t v = 0;
    try
    {
      v = std::stoull( s, &pos, 10 );
    }
    catch ( const std::exception& )
    {
      pos = 0;
    }
    if ( s.empty() || pos != s.size() )
    {
      throw parse_error( "--" + key + ": expected a decimal integer, got '" + s + "'" );
    }
    return v;
  }

  static std::uint64_t parse_hex( const std::string& key, std::string s )
  {
    if ( s.rfind( "0x", 0 ) == 0 || s.rfind( "0X", 0 ) == 0 )
      s = s.substr( 2 );
    std::size_t pos = 0;
    std::uint64_t v = 0;
    try
    {
      v = std::stoull( s, &pos, 16 );
    }
    catch ( const std::exception& )
    {
      pos = 0;
    }
    if ( s.empty() || pos != s.size() )
    {
      throw parse_error( "--" + key + ": expected a hex integer, got '" + s + "'" );
    }
    return v;
  }

  std::map<std::string, std::string> values_;
};

unsigned log2_exact( std::size_t count, const std::string& what )
{
  if ( count == 0 || ( count & ( count - 1 ) ) )
  {
    throw parse_error( what + ": need a power-of-two number of entries" );
  }
  return static_cast<unsigned>( std::countr_zero( count ) );
}

PermutationMap read_map( const Params& p, const std::string& key, const std::string& image_dim_key )
{
  const auto images = p.hex_list( key );
  const auto s = log2_exact( images.size(), "--" + key );
  const auto r = static_cast<unsigned>( p.num_or( image_dim_key, s ) );
  return PermutationMap( s, r, images );
}

LinearSubspace read_subspace( const Params& p, const std::string& key, unsigned k )
{
  if ( !p.has( key ) || p.str( key ).empty() )
  {
    return LinearSubspace( k );
  }
  return LinearSubspace::span( k, p.hex_list( key ) );
}

BooleanFunction read_u( const Params& p, const std::string& key, unsigned s )
{
  return p.has( key ) ? p.inline_table( key, s ) : BooleanFunction( s );
}

FieldFunction read_theta( const Params& p, const std::string& key, const GaloisField& field )
{
  const auto t = p.inline_table( key, field.degree() );
  FieldFunction out( field.order() );
  for ( std::uint32_t e = 0; e < field.order(); ++e )
  {
    out[e] = t[e];
  }
  return out;
}

Variant read_variant( const Params& p )
{
  return p.has( "variant" ) ? Variant::parse( p.str( "variant" ) ) : Variant{};
}

json certification( const BooleanFunction& h )
{
  const auto prof = analyze( h );
  json j;
  j["n"] = prof.n;
  j["bent"] = prof.bent;
  j["balanced"] = prof.balanced;
  j["resiliency"] = prof.resiliency;
  j["nonlinearity"] = prof.nonlinearity;
  j["degree"] = prof.degree;
  return j;
}

json resilient_summary( const ResilientBuild& b )
{
  json j = certification( b.function );
  j["claimed_resiliency"] = b.claimed_resiliency;
  j["nonlinearity_bound"] = b.nonlinearity_bound;
  j["bound_met_with_equality"] = b.nonlinearity == b.nonlinearity_bound;
  j["distinct_up_to_complement"] = b.distinct_up_to_complement;
  j["f_all_equal"] = b.f_all_equal;
  return j;
}

BentTriple read_triple( const Params& p )
{
  return make_bent_triple( p.table( "f1" ), p.table( "f2" ), p.table( "f3" ) );
}

bent_family parse_family( const std::string& s )
{
  if ( s == "mm" )
    return bent_family::maiorana_mcfarland;
  if ( s == "psap" )
    return bent_family::psap;
  if ( s == "class-d" )
    return bent_family::class_d;
  throw parse_error( "--family must be one of mm, psap, class-d" );
}

std::string stem_path( const std::string& out, const std::string& tag )
{
  const auto dot = out.rfind( ".tt" );
  const auto base = dot != std::string::npos && dot + 3 == out.size() ? out.substr( 0, dot ) : out;
  return base + "_" + tag + ".tt";
}

struct BuildResult
{
  std::vector<std::pair<std::string, BooleanFunction>> outputs; ///< (tag, table); empty tag = -o itself
  json summary;
};

using Builder = std::function<BuildResult( const Params& )>;

BuildResult single( BooleanFunction h, json extra = json::object() )
{
  auto summary = certification( h );
  for ( auto& [k, v] : extra.items() )
  {
    summary[k] = v;
  }
  BuildResult r;
  r.outputs.emplace_back( "", std::move( h ) );
  r.summary = std::move( summary );
  return r;
}

const std::map<std::string, Builder>& builders()
{
  static const std::map<std::string, Builder> table = {
      { "mm",
        []( const Params& p ) {
          const auto phi = read_map( p, "phi", "r" );
          return single( mm_function( phi, read_u( p, "u", phi.domain_dim() ), p.has( "bent" ) ) );
        } },
      { "psap",
        []( const Params& p ) {
          const GaloisField field( static_cast<unsigned>( p.num( "n" ) / 2 ) );
          return single( psap_bent( field, read_theta( p, "theta", field ) ) );
        } },
      { "class-d",
        []( const Params& p ) {
          const auto phi = read_map( p, "phi", "r" );
          const auto k = phi.domain_dim();
          return single( class_d_bent( phi, read_subspace( p, "e1", k ), read_subspace( p, "e2", k ) ) );
        } },
      { "direct-sum",
        []( const Params& p ) {
          const auto f = p.table( "f" ), g = p.table( "g" );
          const auto formula = direct_sum_nonlinearity( f.num_vars(), nonlinearity( f ), g.num_vars(), nonlinearity( g ) );
          return single( direct_sum( f, g ), { { "nonlinearity_formula", formula } } );
        } },
      { "indirect-sum",
        []( const Params& p ) { return single( indirect_sum( p.table( "f1" ), p.table( "f2" ), p.table( "g1" ), p.table( "g2" ) ) ); } },
      { "rothaus", []( const Params& p ) { return single( rothaus( p.table( "f1" ), p.table( "f2" ), p.table( "f3" ) ) ); } },
      { "construction2",
        []( const Params& p ) {
          const auto v = read_variant( p );
          return single( construction2( p.table( "f" ), static_cast<unsigned>( p.num( "mu" ) ), p.table( "g" ),
                                        static_cast<unsigned>( p.num( "rho" ) ), v ),
                         { { "variant", v.str() } } );
        } },
      { "construction2-dual",
        []( const Params& p ) {
          const auto f = p.table( "f" ), g = p.table( "g" );
          const auto mu = static_cast<unsigned>( p.num( "mu" ) ), rho = static_cast<unsigned>( p.num( "rho" ) );
          const auto v = read_variant( p );
          auto d = construction2_dual( f, mu, g, rho, v );
          const bool matches = d == dual( construction2( f, mu, g, rho, v ) );
          return single( std::move( d ), { { "variant", v.str() }, { "matches_spectral_dual", matches } } );
        } },
      { "corollary-nmm",
        []( const Params& p ) {
          const auto phi = read_map( p, "phi", "r" );
          const auto psi = read_map( p, "psi", "r-psi" );
          return single( corollary_nmm( phi, psi, static_cast<unsigned>( p.num( "mu" ) ), static_cast<unsigned>( p.num( "rho" ) ),
                                        read_u( p, "u", phi.domain_dim() ), read_u( p, "v", psi.domain_dim() ) ) );
        } },
      { "corollary-psab",
        []( const Params& p ) {
          const GaloisField fn( static_cast<unsigned>( p.num( "n" ) / 2 ) );
          const GaloisField fm( static_cast<unsigned>( p.num( "m" ) / 2 ) );
          auto elem = [&]( const std::string& key ) { return static_cast<std::uint32_t>( p.hex( key ) ); };
          const PsabSide fs{ &fn, read_theta( p, "theta", fn ), elem( "a" ), elem( "b" ), elem( "alpha" ), elem( "beta" ) };
          const PsabSide gs{ &fm, read_theta( p, "vartheta", fm ), elem( "c" ), elem( "d" ), elem( "gamma" ), elem( "delta" ) };
          for ( const auto* s : { &fs, &gs } )
          {
            for ( auto v : { s->a, s->b, s->alpha, s->beta } )
            {
              if ( !s->field->contains( v ) )
                throw dimension_error( "corollary-psab: field element out of range" );
            }
          }
          return single( corollary_psab( fs, gs ) );
        } },
      { "corollary-rothaus",
        []( const Params& p ) {
          return single( corollary_rothaus( p.table( "f1" ), p.table( "f2" ), p.table( "f3" ), p.table( "g1" ), p.table( "g2" ),
                                            p.table( "g3" ) ) );
        } },
      { "corollary-class-d",
        []( const Params& p ) {
          const auto phi = read_map( p, "phi", "r" );
          const auto psi = read_map( p, "psi", "r-psi" );
          const auto k = phi.domain_dim(), l = psi.domain_dim();
          return single( corollary_class_d( phi, read_subspace( p, "e1", k ), read_subspace( p, "e2", k ), psi,
                                            read_subspace( p, "xi1", l ), read_subspace( p, "xi2", l ),
                                            static_cast<unsigned>( p.num( "mu" ) ), static_cast<unsigned>( p.num( "rho" ) ) ) );
        } },
      { "generalized-indirect-sum",
        []( const Params& p ) {
          const auto f1 = p.table( "f1" ), f2 = p.table( "f2" ), f3 = p.table( "f3" );
          const auto g1 = p.table( "g1" ), g2 = p.table( "g2" ), g3 = p.table( "g3" );
          if ( p.has( "t" ) || p.has( "k" ) )
          {
            const auto t = static_cast<int>( p.num_or( "t", 0 ) ), k = static_cast<int>( p.num_or( "k", 0 ) );
            return single( generalized_indirect_sum_resilient( f1, f2, f3, g1, g2, g3, t, k ),
                           { { "claimed_resiliency", t + k + 1 } } );
          }
          if ( p.has( "bent" ) )
          {
            return single( generalized_indirect_sum_bent( make_bent_triple( f1, f2, f3 ), make_bent_triple( g1, g2, g3 ) ) );
          }
          return single( generalized_indirect_sum( f1, f2, f3, g1, g2, g3 ) );
        } },
      { "theorem42",
        []( const Params& p ) {
          std::optional<int> k;
          if ( p.has( "k" ) )
            k = static_cast<int>( p.num( "k" ) );
          const auto b = theorem42_build( read_triple( p ), p.table( "g1" ), p.table( "g2" ), p.table( "g3" ), k );
          BuildResult r;
          r.outputs.emplace_back( "", b.function );
          r.summary = resilient_summary( b );
          return r;
        } },
      { "proposition-cor41",
        []( const Params& p ) {
          const auto b = proposition_cor41( read_triple( p ), p.table( "p" ), p.table( "q" ), static_cast<unsigned>( p.num( "i" ) ) );
          BuildResult r;
          r.outputs.emplace_back( "", b.function );
          r.summary = resilient_summary( b );
          return r;
        } },
      { "random-function",
        []( const Params& p ) {
          Rng rng( p.num_or( "seed", 0 ) );
          const auto n = static_cast<unsigned>( p.num( "n" ) );
          return single( p.has( "balanced" ) ? random_balanced( n, rng ) : random_function( n, rng ) );
        } },
      { "random-bent",
        []( const Params& p ) {
          Rng rng( p.num_or( "seed", 0 ) );
          const auto n = static_cast<unsigned>( p.num( "n" ) );
          if ( n % 2 || n < 2 )
            throw dimension_error( "random-bent: n must be even and >= 2" );
          return single( random_bent( n, parse_family( p.has( "family" ) ? p.str( "family" ) : "mm" ), rng ) );
        } },
      { "derivative-triple",
        []( const Params& p ) {
          Rng rng( p.num_or( "seed", 0 ) );
          const auto n = static_cast<unsigned>( p.num( "n" ) );
          if ( n % 2 || n < 2 )
            throw dimension_error( "derivative-triple: n must be even and >= 2" );
          const auto t = random_derivative_triple( n, rng );
          BuildResult r;
          r.outputs = { { "f1", t.f1 }, { "f2", t.f2 }, { "f3", t.f3 } };
          r.summary = { { "n", n }, { "certified", t.certified } };
          return r;
        } },
      { "resilient-mm",
        []( const Params& p ) {
          Rng rng( p.num_or( "seed", 0 ) );
          const auto s = static_cast<unsigned>( p.num_or( "s", 3 ) );
          const auto rr = static_cast<unsigned>( p.num_or( "r", 5 ) );
          const auto t = static_cast<unsigned>( p.num_or( "t", 1 ) );
          const auto gs = random_resilient_mm_triple( random_heavy_injection( s, rr, t + 1, rng ), rng );
          BuildResult r;
          r.outputs = { { "g1", gs[0] }, { "g2", gs[1] }, { "g3", gs[2] } };
          r.summary = { { "n", s + rr },
                        { "resiliency", triple_resiliency( gs[0], gs[1], gs[2] ) },
                        { "nonlinearity", nonlinearity( gs[0] ) } };
          return r;
        } },
  };
  return table;
}

void emit( const json& j )
{
  std::cout << j.dump( 2 ) << '\n';
}

void write_or_print( const BooleanFunction& f, const std::string& out )
{
  if ( out.empty() )
    std::cout << serialize_truth_table( f );
  else
    write_truth_table( f, out );
}

int run( int argc, char** argv )
{
  CLI::App app{ "Construct and certify bent and resilient Boolean functions" };
  app.require_subcommand( 1 );
  app.set_version_flag( "--version", "bentkit 1.0" );

  std::string path, out, property, name, param_file;
  std::uint64_t seed = 0;

  auto* analyze_cmd = app.add_subcommand( "analyze", "Print the analysis profile of a truth table as JSON" );
  analyze_cmd->add_option( "path", path, "truth-table file" )->required();

  auto* verify_cmd = app.add_subcommand( "verify", "Check a fast path against its brute-force oracle" );
  verify_cmd->add_option( "--property", property, "walsh | nonlinearity | resiliency | bent" )
      ->required()
      ->check( CLI::IsMember( { "walsh", "nonlinearity", "resiliency", "bent" } ) );
  verify_cmd->add_option( "path", path, "truth-table file" )->required();

  auto* dual_cmd = app.add_subcommand( "dual", "Dual of a bent function" );
  dual_cmd->add_option( "path", path )->required();
  dual_cmd->add_option( "-o,--output", out );

  auto* wht_cmd = app.add_subcommand( "wht", "Walsh spectrum as JSON" );
  wht_cmd->add_option( "path", path )->required();

  auto* anf_cmd = app.add_subcommand( "anf", "Algebraic normal form as JSON; -o writes the coefficient table" );
  anf_cmd->add_option( "path", path )->required();
  anf_cmd->add_option( "-o,--output", out );

  auto* build_cmd = app.add_subcommand( "build", "Run a construction and certify the result" );
  std::vector<std::string> names;
  for ( const auto& [k, v] : builders() )
    names.push_back( k );
  build_cmd->add_option( "name", name, "construction name" )->required()->check( CLI::IsMember( names ) );
  build_cmd->add_option( "-o,--output", out, "output truth-table file (stem for multi-output builds)" )->required();
  build_cmd->add_option( "--param-file", param_file, "JSON object with the construction parameters" );
  build_cmd->add_option( "--seed", seed, "seed for random builds" );

  static const char* value_flags[] = { "f", "g", "f1", "f2", "f3", "g1", "g2", "g3", "p", "q", "mu", "rho", "variant",
                                       "i", "t", "k", "n", "m", "r", "r-psi", "s", "phi", "psi", "u", "v", "e1", "e2",
                                       "xi1", "xi2", "theta", "vartheta", "a", "b", "c", "d", "alpha", "beta", "gamma",
                                       "delta", "family" };
  std::map<std::string, std::string> flag_values;
  for ( const auto* f : value_flags )
  {
    build_cmd->add_option( std::string( "--" ) + f, flag_values[f] );
  }
  bool bent_flag = false, balanced_flag = false;
  build_cmd->add_flag( "--bent", bent_flag, "require/certify bentness where the construction offers it" );
  build_cmd->add_flag( "--balanced", balanced_flag, "random-function: draw a balanced function" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::CallForHelp& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::CallForVersion& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::ParseError& e )
  {
    app.exit( e );
    return exit_parse;
  }

  if ( analyze_cmd->parsed() )
  {
    emit( json( analyze( read_truth_table( path ) ) ) );
    return 0;
  }
  if ( verify_cmd->parsed() )
  {
    const auto f = read_truth_table( path );
    OracleReport rep;
    if ( property == "walsh" )
      rep = verify_walsh( f );
    else if ( property == "nonlinearity" )
      rep = verify_nonlinearity( f );
    else if ( property == "resiliency" )
      rep = verify_resiliency( f );
    else
      rep = verify_bent( f );
    emit( json( rep ) );
    return rep.agreed ? 0 : exit_divergence;
  }
  if ( dual_cmd->parsed() )
  {
    write_or_print( dual( read_truth_table( path ) ), out );
    return 0;
  }
  if ( wht_cmd->parsed() )
  {
    const auto w = walsh_transform( read_truth_table( path ) );
    emit( json{ { "n", w.num_vars() }, { "values", w.values() } } );
    return 0;
  }
  if ( anf_cmd->parsed() )
  {
    const auto f = read_truth_table( path );
    const auto a = mobius( f );
    json monomials = json::array();
    for ( point_t I = 0; I < f.size(); ++I )
    {
      if ( !a.coefficient( I ) )
        continue;
      json vars = json::array();
      for ( auto j = 1u; j <= f.num_vars(); ++j )
      {
        if ( I & variable_mask( f.num_vars(), j ) )
          vars.push_back( j );
      }
      monomials.push_back( std::move( vars ) );
    }
    if ( !out.empty() )
      write_truth_table( a.coefficients(), out );
    emit( json{ { "n", f.num_vars() }, { "degree", a.degree() }, { "monomials", std::move( monomials ) } } );
    return 0;
  }

  // build
  Params params;
  for ( const auto& [k, v] : flag_values )
  {
    if ( build_cmd->count( "--" + k ) )
      params.set( k, v );
  }
  if ( build_cmd->count( "--seed" ) )
    params.set( "seed", std::to_string( seed ) );
  if ( bent_flag )
    params.set( "bent", "true" );
  if ( balanced_flag )
    params.set( "balanced", "true" );
  if ( !param_file.empty() )
    params.load_file( param_file );

  auto result = builders().at( name )( params );
  json summary{ { "construction", name } };
  json files = json::array();
  for ( const auto& [tag, f] : result.outputs )
  {
    const auto target = tag.empty() ? out : stem_path( out, tag );
    write_truth_table( f, target );
    files.push_back( target );
  }
  summary["outputs"] = std::move( files );
  for ( auto& [k, v] : result.summary.items() )
    summary[k] = v;
  emit( summary );
  return 0;
}

} // namespace

int main( int argc, char** argv )
{
  try
  {
    return run( argc, argv );
  }
  catch ( const parse_error& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_parse;
  }
  catch ( const cap_error& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_cap;
  }
  catch ( const premise_error& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_premise;
  }
  catch ( const dimension_error& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_premise;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_divergence;
  }
}
