#include "kkbounds/cli.hpp"

#include "kkbounds/certificates.hpp"
#include "kkbounds/errors.hpp"
#include "kkbounds/io.hpp"
#include "kkbounds/quadrature.hpp"
#include "kkbounds/search.hpp"
#include "kkbounds/universal.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace kkbounds::cli {

namespace {

using io::format_number;
using io::json;

struct Options {
  int n = 0;
  int k = 0;
  bool as_json = false;
  std::string code_file;
  double tol = 1e-9;
  bool normalize = false;
  std::string poly_file;
  bool energy = false;
  int cardinality = 0;
  std::string potential;
  bool upper = false;
  int jmax = 0;
  int degree = 0;
  int max_iterations = 200;
  std::string name;
  std::string out_file;
  int points = 0;
};

SphericalCode load_code(const Options& o) {
  return io::code_from_json(io::read_json_file(o.code_file),
                            o.normalize ? SphericalCode::Normalize::yes : SphericalCode::Normalize::no);
}

int cmd_bound(const Options& o, std::ostream& out) {
  auto result = universal_bound(o.n, o.k);
  auto verdict = tightness(o.n, o.k);
  if (o.as_json) {
    out << io::universal_to_json(result, verdict).dump(2) << '\n';
    return kOk;
  }
  out << to_string(result.bound) << '\n';
  out << "dgs_bound D(n,2k+1): " << to_string(result.dgs_reference) << '\n';
  out << "attaining inner products:";
  for (const auto& node : result.attaining_inner_products) out << ' ' << format_number(node.value);
  out << '\n';
  out << "tightness: " << status_name(verdict.status);
  if (verdict.clause != TightnessClause::none) out << " (clause " << clause_name(verdict.clause) << ')';
  out << '\n';
  if (verdict.forbidden_cardinality) {
    out << "no (2,2)-design with " << to_string(*verdict.forbidden_cardinality) << " points\n";
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SphericalCode code = load_code(o);
  DesignReport report = is_kk_design(code, o.k, o.tol);
  out << io::design_report_to_json(report, code.size()).dump(2) << '\n';
  return report.holds() ? kOk : kNegative;
}

int cmd_certify(const Options& o, std::ostream& out) {
  GegenbauerExpansion f = io::expansion_from_json(io::read_json_file(o.poly_file), o.n);
  try {
    if (!o.energy) {
      out << io::certificate_to_json(cardinality_bound(f, o.k)).dump(2) << '\n';
      return kOk;
    }
    if (o.potential.empty()) throw FormatError("--energy needs --potential");
    if (o.cardinality < 2) throw FormatError("--energy needs --M >= 2");
    Potential h = io::parse_potential(o.potential);
    BoundCertificate cert =
        o.upper ? energy_upper_bound(f, o.k, o.cardinality, h) : energy_lower_bound(f, o.k, o.cardinality, h);
    out << io::certificate_to_json(cert, &h).dump(2) << '\n';
    return kOk;
  } catch (const ConeViolationError& e) {
    json doc = {{"error", "cone_violation"}, {"membership", io::membership_to_json(e.membership())}};
    out << doc.dump(2) << '\n';
    return kNegative;
  }
}

int cmd_optimality(const Options& o, std::ostream& out) {
  const int jmax = o.jmax > 0 ? o.jmax : default_jmax(o.k);
  TestFunctionTable table = optimality_scan(o.n, o.k, jmax);
  out << io::scan_to_csv(table);
  out << "# no improvement possible with degree <= " << 2 * o.k << '\n';
  auto list = [&](const char* label, const std::vector<int>& js) {
    if (js.empty()) return;
    out << "# " << label << ':';
    for (int j : js) out << ' ' << j;
    out << '\n';
  };
  list("improvement indicated at degree", table.improvement_degrees());
  list("inconclusive at degree", table.inconclusive_degrees());
  return kOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchOptions options;
  options.max_iterations = o.max_iterations;
  SearchOutcome outcome = search(o.n, o.k, o.degree, options);
  out << io::search_outcome_to_json(outcome).dump(2) << '\n';
  return outcome.certified ? kOk : kNegative;
}

int cmd_energy(const Options& o, std::ostream& out, std::ostream& err) {
  SphericalCode code = load_code(o);
  Potential h = io::parse_potential(o.potential);
  try {
    out << format_number(energy(code, h)) << '\n';
    return kOk;
  } catch (const InfiniteEnergyError& e) {
    out << "inf\n";
    err << "error: " << e.what() << '\n';
    return kNegative;
  }
}

int cmd_construct(const Options& o, std::ostream& out) {
  SphericalCode code = construct(construction_from_name(o.name), o.n, o.points);
  io::write_json_file(o.out_file, io::code_to_json(code));
  out << "wrote " << code.size() << " points in R^" << code.dimension() << " to " << o.out_file << '\n';
  return kOk;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear-programming bounds for spherical (k,k)-designs", "kkbounds"};
  app.require_subcommand(1);
  Options o;

  auto* bound = app.add_subcommand("bound", "universal bound, DGS bound, attaining inner products, tightness");
  bound->add_option("--n", o.n, "dimension")->required();
  bound->add_option("--k", o.k, "design parameter")->required();
  bound->add_flag("--json", o.as_json, "print JSON");

  auto* verify = app.add_subcommand("verify", "check whether a code is a (k,k)-design");
  verify->add_option("--code", o.code_file, "code JSON file")->required();
  verify->add_option("--k", o.k)->required();
  verify->add_option("--tol", o.tol, "moment tolerance, scaled by |C|^2");
  verify->add_flag("--normalize", o.normalize, "rescale points to unit length");

  auto* certify = app.add_subcommand("certify", "check cone membership and emit a bound certificate");
  certify->add_option("--poly", o.poly_file, "polynomial JSON file")->required();
  certify->add_option("--n", o.n)->required();
  certify->add_option("--k", o.k)->required();
  certify->add_flag("--energy", o.energy, "energy bound instead of cardinality");
  certify->add_option("--M", o.cardinality, "code size for energy bounds");
  certify->add_option("--potential", o.potential, "riesz:s | gaussian:sigma | poly:FILE");
  certify->add_flag("--upper", o.upper, "upper energy bound (cone U) instead of lower (cone L)");

  auto* optimality = app.add_subcommand("optimality", "test functions Q_j as CSV");
  optimality->add_option("--n", o.n)->required();
  optimality->add_option("--k", o.k)->required();
  optimality->add_option("--jmax", o.jmax, "largest j (default 4k+4)");

  auto* search_cmd = app.add_subcommand("search", "cutting-plane LP search for cardinality polynomials");
  search_cmd->add_option("--n", o.n)->required();
  search_cmd->add_option("--k", o.k)->required();
  search_cmd->add_option("--degree", o.degree)->required();
  search_cmd->add_option("--max-iterations", o.max_iterations);

  auto* energy_cmd = app.add_subcommand("energy", "h-energy of a code");
  energy_cmd->add_option("--code", o.code_file)->required();
  energy_cmd->add_option("--potential", o.potential)->required();
  energy_cmd->add_flag("--normalize", o.normalize);

  auto* construct_cmd = app.add_subcommand("construct", "write a built-in code as JSON");
  construct_cmd->add_option("--name", o.name,
                            "orthonormal_basis | cross_polytope | icosahedron | icosahedron_half | regular_polygon")
      ->required();
  construct_cmd->add_option("--n", o.n)->required();
  construct_cmd->add_option("--out", o.out_file)->required();
  construct_cmd->add_option("--points", o.points, "point count for regular_polygon");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kUsage;
  }

  try {
    if (bound->parsed()) return cmd_bound(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (certify->parsed()) return cmd_certify(o, out);
    if (optimality->parsed()) return cmd_optimality(o, out);
    if (search_cmd->parsed()) return cmd_search(o, out);
    if (energy_cmd->parsed()) return cmd_energy(o, out, err);
    if (construct_cmd->parsed()) return cmd_construct(o, out);
  } catch (const FormatError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << one_line(e.what()) << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace kkbounds::cli
