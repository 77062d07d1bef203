#pragma once

#include "kkbounds/certificates.hpp"
#include "kkbounds/code.hpp"
#include "kkbounds/gegenbauer.hpp"
#include "kkbounds/potential.hpp"
#include "kkbounds/quadrature.hpp"
#include "kkbounds/search.hpp"
#include "kkbounds/universal.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace kkbounds::io {

using nlohmann::json;

/// 12 significant digits, shortest form ("0.4472135955", "6", "-1e-13").
std::string format_number(double value);

/// value rounded to 12 significant digits, for stable JSON output.
double round12(double value);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& doc);

/// {"dimension": n, "points": [[x1, ..., xn], ...]}
SphericalCode code_from_json(const json& doc, SphericalCode::Normalize normalize = SphericalCode::Normalize::no);
json code_to_json(const SphericalCode& code);

/// {"monomial": ["p/q", ...]} (constant term first), or
/// {"gegenbauer": {"n": N, "coeffs": ["p/q", ...]}}.
/// A Gegenbauer input in another dimension is re-expanded in dimension n.
GegenbauerExpansion expansion_from_json(const json& doc, int n);
Polynomial polynomial_from_json(const json& doc);
json monomial_to_json(const Polynomial& p);
json expansion_to_json(const GegenbauerExpansion& f);

/// "riesz:s", "gaussian:sigma", "poly:FILE" (FILE relative to base_dir).
Potential parse_potential(const std::string& spec, const std::filesystem::path& base_dir = {});

/// Certificate JSON. Potentials travel as {"spec": id} plus the monomial
/// coefficients when the potential is a polynomial, so the certificate can be
/// rechecked without the original files.
json certificate_to_json(const BoundCertificate& cert, const Potential* h = nullptr);

struct ParsedCertificate {
  BoundCertificate certificate;
  std::optional<Potential> potential;
};

ParsedCertificate certificate_from_json(const json& doc);

/// Re-runs the cone check and recomputes the bound from a serialized
/// certificate. Returns true iff membership still holds and the recomputed
/// value equals the stored one exactly.
bool recheck_certificate(const json& doc);

json membership_to_json(const ConeMembership& m);
json design_report_to_json(const DesignReport& report, std::size_t cardinality);
json universal_to_json(const UniversalBoundResult& result, const TightnessVerdict& verdict);
json search_outcome_to_json(const SearchOutcome& outcome);

/// "j,Q_j,classification" header then one row per entry.
std::string scan_to_csv(const TestFunctionTable& table);

}  // namespace kkbounds::io
