#include "kkbounds/io.hpp"

#include "kkbounds/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace kkbounds::io {

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

double round12(double value) {
  if (!std::isfinite(value)) return value;
  return std::stod(format_number(value));
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path.string() + "'");
  out << doc.dump(2) << '\n';
}

namespace {

const json& member(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return v.get<int>();
}

Rational as_rational(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw FormatError("coefficients must be rational strings \"p/q\" or integers");
}

std::vector<Rational> rational_list(const json& v) {
  if (!v.is_array()) throw FormatError("coefficient list must be an array");
  std::vector<Rational> out;
  for (const auto& c : v) out.push_back(as_rational(c));
  return out;
}

json rational_strings(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

}  // namespace

SphericalCode code_from_json(const json& doc, SphericalCode::Normalize normalize) {
  const int n = as_int(member(doc, "dimension"), "dimension");
  const json& pts = member(doc, "points");
  if (!pts.is_array()) throw FormatError("points must be an array");
  std::vector<std::vector<double>> points;
  for (const auto& p : pts) {
    if (!p.is_array()) throw FormatError("each point must be an array of numbers");
    std::vector<double> coords;
    for (const auto& x : p) {
      if (!x.is_number()) throw FormatError("coordinates must be numbers");
      coords.push_back(x.get<double>());
    }
    points.push_back(std::move(coords));
  }
  try {
    return SphericalCode(n, points, normalize);
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
}

json code_to_json(const SphericalCode& code) {
  return {{"dimension", code.dimension()}, {"points", code.point_list()}};
}

Polynomial polynomial_from_json(const json& doc) {
  if (doc.is_object() && doc.contains("monomial")) return Polynomial(rational_list(doc.at("monomial")));
  if (doc.is_object() && doc.contains("gegenbauer")) {
    const json& g = doc.at("gegenbauer");
    return GegenbauerExpansion(as_int(member(g, "n"), "n"), rational_list(member(g, "coeffs"))).to_polynomial();
  }
  throw FormatError("polynomial must have a 'monomial' or 'gegenbauer' field");
}

GegenbauerExpansion expansion_from_json(const json& doc, int n) {
  if (doc.is_object() && doc.contains("gegenbauer")) {
    const json& g = doc.at("gegenbauer");
    const int dim = as_int(member(g, "n"), "n");
    if (dim < 2) throw FormatError("gegenbauer dimension must be >= 2");
    GegenbauerExpansion f(dim, rational_list(member(g, "coeffs")));
    if (dim == n) return f;
    return expand(f.to_polynomial(), n);
  }
  return expand(polynomial_from_json(doc), n);
}

json monomial_to_json(const Polynomial& p) { return {{"monomial", rational_strings(p.coeffs())}}; }

json expansion_to_json(const GegenbauerExpansion& f) {
  return {{"gegenbauer", {{"n", f.dimension()}, {"coeffs", rational_strings(f.coeffs())}}}};
}

Potential parse_potential(const std::string& spec, const std::filesystem::path& base_dir) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw FormatError("potential spec must look like family:parameter");
  const std::string family = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  auto number = [&]() {
    try {
      std::size_t used = 0;
      double v = std::stod(arg, &used);
      if (used != arg.size()) throw FormatError("bad potential parameter '" + arg + "'");
      return v;
    } catch (const std::logic_error&) {
      throw FormatError("bad potential parameter '" + arg + "'");
    }
  };
  try {
    if (family == "riesz") return Potential::riesz(number());
    if (family == "gaussian") return Potential::gaussian(number());
    if (family == "poly") {
      std::filesystem::path path(arg);
      if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
      Potential h = Potential::polynomial(polynomial_from_json(read_json_file(path)));
      h.set_id(spec);
      return h;
    }
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
  throw FormatError("unknown potential family '" + family + "'");
}

json membership_to_json(const ConeMembership& m) {
  json signs = json::array();
  for (const auto& e : m.signs) {
    signs.push_back({{"index", e.index},
                     {"coefficient", to_string(e.coefficient)},
                     {"required", requirement_name(e.required)},
                     {"satisfied", e.satisfied}});
  }
  json pointwise = {{"method", m.pointwise.method},
                    {"satisfied", m.pointwise.satisfied},
                    {"worst_violation", round12(m.pointwise.worst_violation)}};
  if (m.pointwise.witness) pointwise["witness"] = round12(*m.pointwise.witness);
  return {{"cone", cone_name(m.cone)}, {"n", m.n},           {"k", m.k},
          {"member", m.member()},      {"signs", signs},     {"pointwise", pointwise}};
}

json certificate_to_json(const BoundCertificate& cert, const Potential* h) {
  json inputs = {{"n", cert.n}, {"k", cert.k}};
  if (cert.cardinality) inputs["M"] = *cert.cardinality;
  if (cert.potential_id) {
    json pot = {{"spec", *cert.potential_id}};
    if (h != nullptr) {
      if (const Polynomial* p = h->as_polynomial()) pot["monomial"] = rational_strings(p->coeffs());
    }
    inputs["potential"] = pot;
  }
  json doc = {{"bound_kind", bound_kind_name(cert.kind)},
              {"inputs", inputs},
              {"expansion", expansion_to_json(cert.expansion).at("gegenbauer")},
              {"membership", membership_to_json(cert.membership)},
              {"value", to_string(cert.value)},
              {"value_float", round12(to_double(cert.value))}};
  return doc;
}

ParsedCertificate certificate_from_json(const json& doc) {
  const BoundKind kind = bound_kind_from_name(member(doc, "bound_kind").get<std::string>());
  const json& inputs = member(doc, "inputs");
  const int n = as_int(member(inputs, "n"), "n");
  const int k = as_int(member(inputs, "k"), "k");
  const json& ex = member(doc, "expansion");
  GegenbauerExpansion f(as_int(member(ex, "n"), "n"), rational_list(member(ex, "coeffs")));
  if (f.dimension() != n) throw FormatError("expansion dimension does not match inputs.n");

  std::optional<Potential> h;
  std::optional<int> cardinality;
  std::optional<std::string> potential_id;
  if (inputs.contains("M")) cardinality = as_int(inputs.at("M"), "M");
  if (inputs.contains("potential")) {
    const json& pot = inputs.at("potential");
    potential_id = member(pot, "spec").get<std::string>();
    if (pot.contains("monomial")) {
      h = Potential::polynomial(Polynomial(rational_list(pot.at("monomial"))));
      h->set_id(*potential_id);
    } else {
      h = parse_potential(*potential_id);
    }
  }

  const json& mem = member(doc, "membership");
  ConeMembership membership;
  membership.cone = cone_from_name(member(mem, "cone").get<std::string>());
  membership.n = as_int(member(mem, "n"), "n");
  membership.k = as_int(member(mem, "k"), "k");
  for (const auto& s : member(mem, "signs")) {
    SignEvidence e;
    e.index = as_int(member(s, "index"), "index");
    e.coefficient = as_rational(member(s, "coefficient"));
    const std::string req = member(s, "required").get<std::string>();
    e.required = req == "positive"      ? SignRequirement::positive
                 : req == "nonpositive" ? SignRequirement::nonpositive
                 : req == "nonnegative" ? SignRequirement::nonnegative
                                        : throw FormatError("unknown sign requirement '" + req + "'");
    e.satisfied = member(s, "satisfied").get<bool>();
    membership.signs.push_back(e);
  }
  const json& pw = member(mem, "pointwise");
  membership.pointwise.method = member(pw, "method").get<std::string>();
  membership.pointwise.satisfied = member(pw, "satisfied").get<bool>();
  membership.pointwise.worst_violation = member(pw, "worst_violation").get<double>();
  if (pw.contains("witness")) membership.pointwise.witness = pw.at("witness").get<double>();

  BoundCertificate cert{f,           std::move(membership), kind, parse_rational(member(doc, "value").get<std::string>()),
                        n,           k,
                        cardinality, potential_id};
  return {std::move(cert), std::move(h)};
}

bool recheck_certificate(const json& doc) {
  ParsedCertificate parsed = certificate_from_json(doc);
  const BoundCertificate& cert = parsed.certificate;
  const Potential* h = parsed.potential ? &*parsed.potential : nullptr;
  ConeMembership fresh = check_cone(cert.expansion, cert.membership.cone, cert.k, h);
  if (fresh.member() != cert.membership.member()) return false;
  return fresh.member() && cert.recompute() == cert.value;
}

json design_report_to_json(const DesignReport& report, std::size_t cardinality) {
  json moments = json::object();
  for (const auto& [i, m] : report.moments) moments[std::to_string(i)] = round12(m);
  json verdicts = json::array();
  for (const auto& v : report.verdicts) {
    verdicts.push_back({{"property", v.property}, {"tolerance", v.tolerance}, {"holds", v.holds}});
  }
  return {{"cardinality", cardinality},
          {"moments", moments},
          {"verdicts", verdicts},
          {"max_residual", round12(report.max_residual)},
          {"threshold", round12(report.threshold)},
          {"tolerance_convention", "max |M_i| <= tol * |C|^2"}};
}

json universal_to_json(const UniversalBoundResult& result, const TightnessVerdict& verdict) {
  json nodes = json::array();
  for (const auto& node : result.attaining_inner_products) {
    nodes.push_back({{"value", round12(node.value)},
                     {"lo", to_string(node.bracket.lo)},
                     {"hi", to_string(node.bracket.hi)}});
  }
  json tight = {{"status", status_name(verdict.status)}, {"clause", clause_name(verdict.clause)}};
  if (verdict.forbidden_cardinality) tight["forbidden_cardinality"] = to_string(*verdict.forbidden_cardinality);
  return {{"n", result.n},
          {"k", result.k},
          {"bound", to_string(result.bound)},
          {"dgs_bound", to_string(result.dgs_reference)},
          {"polynomial", expansion_to_json(result.polynomial).at("gegenbauer")},
          {"attaining_inner_products", nodes},
          {"tightness", tight}};
}

json search_outcome_to_json(const SearchOutcome& outcome) {
  BoundCertificate cert{outcome.polynomial,
                        check_cone(outcome.polynomial, Cone::M, outcome.k),
                        BoundKind::cardinality,
                        Rational(0),
                        outcome.n,
                        outcome.k,
                        {},
                        {}};
  if (outcome.polynomial.coeff(0) != 0) cert.value = cert.recompute();
  json doc = certificate_to_json(cert);
  doc["search"] = {{"degree", outcome.degree},
                   {"iterations", outcome.iterations},
                   {"cut_count", outcome.cut_points.size()},
                   {"certified", outcome.certified},
                   {"converged", outcome.converged},
                   {"lp_value", round12(outcome.lp_value)},
                   {"best_value", round12(outcome.best_value)}};
  return doc;
}

std::string scan_to_csv(const TestFunctionTable& table) {
  std::ostringstream os;
  os << "j,Q_j,classification\n";
  for (const auto& e : table.entries) {
    os << e.j << ',' << format_number(e.value) << ',' << classification_name(e.classification) << '\n';
  }
  return os.str();
}

}  // namespace kkbounds::io
