#include "kkbounds/certificates.hpp"

#include "kkbounds/errors.hpp"
#include "kkbounds/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace kkbounds {

std::string cone_name(Cone cone) {
  switch (cone) {
    case Cone::F: return "F";
    case Cone::G: return "G";
    case Cone::M: return "M";
    case Cone::L: return "L";
    case Cone::U: return "U";
  }
  return "?";
}

Cone cone_from_name(const std::string& name) {
  if (name == "F") return Cone::F;
  if (name == "G") return Cone::G;
  if (name == "M") return Cone::M;
  if (name == "L") return Cone::L;
  if (name == "U") return Cone::U;
  throw FormatError("unknown cone '" + name + "'");
}

std::string requirement_name(SignRequirement r) {
  switch (r) {
    case SignRequirement::positive: return "positive";
    case SignRequirement::nonpositive: return "nonpositive";
    case SignRequirement::nonnegative: return "nonnegative";
  }
  return "?";
}

std::string bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::cardinality: return "cardinality";
    case BoundKind::energy_lower: return "energy_lower";
    case BoundKind::energy_upper: return "energy_upper";
  }
  return "?";
}

BoundKind bound_kind_from_name(const std::string& name) {
  if (name == "cardinality") return BoundKind::cardinality;
  if (name == "energy_lower") return BoundKind::energy_lower;
  if (name == "energy_upper") return BoundKind::energy_upper;
  throw FormatError("unknown bound kind '" + name + "'");
}

bool ConeMembership::member() const {
  return pointwise.satisfied &&
         std::all_of(signs.begin(), signs.end(), [](const SignEvidence& e) { return e.satisfied; });
}

ConeViolationError::ConeViolationError(ConeMembership membership)
    : std::runtime_error("polynomial is not in cone " + cone_name(membership.cone)),
      membership_(std::move(membership)) {}

namespace {

bool meets(const Rational& value, SignRequirement r) {
  switch (r) {
    case SignRequirement::positive: return value > 0;
    case SignRequirement::nonpositive: return value <= 0;
    case SignRequirement::nonnegative: return value >= 0;
  }
  return false;
}

PointwiseEvidence exact_nonnegative(const Polynomial& slack) {
  auto r = check_nonnegative(slack, Rational(-1), Rational(1));
  PointwiseEvidence e;
  e.method = "exact";
  e.satisfied = r.holds;
  e.worst_violation = r.holds ? 0.0 : -to_double(r.min_sampled);
  if (!r.holds) e.witness = to_double(r.witness);
  return e;
}

// Lipschitz bound of a polynomial on [a, b] from its monomial coefficients.
double polynomial_derivative_bound(const std::vector<double>& derivative, double a, double b) {
  double r = std::max(std::abs(a), std::abs(b));
  double bound = 0.0;
  double power = 1.0;
  for (double c : derivative) {
    bound += std::abs(c) * power;
    power *= r;
  }
  return bound;
}

// Certifies f <= h (upper = false) or f >= h (upper = true) on a Chebyshev grid.
// On each cell the slack g is bounded below by (g(a) + g(b) - Lip * (b - a)) / 2.
PointwiseEvidence grid_compare(const Polynomial& f, const Potential& h, bool f_above, int grid_points) {
  if (grid_points < 2) throw DomainError("grid needs at least two points");
  std::vector<double> grid(static_cast<std::size_t>(grid_points));
  for (int j = 0; j < grid_points; ++j) {
    grid[static_cast<std::size_t>(j)] = -std::cos(std::numbers::pi * j / (grid_points - 1));
  }
  grid.front() = -1.0;
  grid.back() = 1.0;

  const auto fd = f.derivative().to_doubles();
  auto slack = [&](double t) {
    double hv = h(t);
    double fv = f(t);
    return f_above ? fv - hv : hv - fv;
  };

  PointwiseEvidence e;
  e.method = "grid";
  double worst = std::numeric_limits<double>::infinity();
  double worst_at = 0.0;
  for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
    const double a = grid[j];
    const double b = grid[j + 1];
    const double ga = slack(a);
    const double gb = slack(b);
    const double lf = polynomial_derivative_bound(fd, a, b);
    const double lh = h.derivative_bound(a, b);
    double lower = -std::numeric_limits<double>::infinity();
    if (std::isfinite(lh)) lower = 0.5 * (ga + gb - (lf + lh) * (b - a));
    if (h.is_increasing()) {
      // h(a) <= h <= h(b) across the cell, which stays sharp where h blows up.
      if (f_above) {
        double fmin = std::min(f(a), f(b)) - 0.5 * lf * (b - a);
        lower = std::max(lower, fmin - h(b));
      } else {
        double fmax = std::max(f(a), f(b)) + 0.5 * lf * (b - a);
        lower = std::max(lower, h(a) - fmax);
      }
    }
    // Allowance for rounding in the double evaluations of f and h.
    lower -= 1e-12 * (1.0 + std::abs(f(a)) + std::abs(f(b)) + std::abs(h(a)) + (std::isfinite(h(b)) ? std::abs(h(b)) : 0.0));
    if (std::isnan(lower)) lower = -std::numeric_limits<double>::infinity();
    if (lower < worst) {
      worst = lower;
      worst_at = std::isfinite(gb) && gb <= ga ? b : a;
    }
  }
  e.satisfied = worst >= 0.0;
  e.worst_violation = e.satisfied ? 0.0 : -worst;
  if (!e.satisfied) e.witness = worst_at;
  return e;
}

}  // namespace

ConeMembership check_cone(const GegenbauerExpansion& f, Cone cone, int k, const Potential* h,
                          const PointwiseOptions& options) {
  if (k < 1) throw DomainError("k must be >= 1");
  const bool needs_potential = cone == Cone::L || cone == Cone::U;
  if (needs_potential && h == nullptr) throw DomainError("cones L and U need a potential");
  if (!needs_potential && h != nullptr) throw DomainError("cones F, G and M take no potential");

  ConeMembership m;
  m.cone = cone;
  m.n = f.dimension();
  m.k = k;

  const SignRequirement tail = cone == Cone::G || cone == Cone::L ? SignRequirement::nonnegative
                                                                   : SignRequirement::nonpositive;
  auto add = [&](int i, SignRequirement r) {
    Rational c = f.coeff(i);
    m.signs.push_back({i, c, r, meets(c, r)});
  };
  add(0, SignRequirement::positive);
  for (int i = 1; i <= f.degree(); ++i) {
    if (i % 2 == 1 || i >= 2 * k + 1) add(i, tail);
  }

  const Polynomial poly = f.to_polynomial();
  switch (cone) {
    case Cone::F:
    case Cone::G:
      break;
    case Cone::M:
      m.pointwise = exact_nonnegative(poly);
      break;
    case Cone::L:
    case Cone::U: {
      const bool f_above = cone == Cone::U;
      if (const Polynomial* hp = h->as_polynomial()) {
        m.pointwise = exact_nonnegative(f_above ? poly - *hp : *hp - poly);
      } else {
        m.pointwise = grid_compare(poly, *h, f_above, options.grid_points);
      }
      break;
    }
  }
  return m;
}

Rational BoundCertificate::recompute() const {
  const Rational f0 = expansion.coeff(0);
  const Rational f1 = expansion.value_at_one();
  if (kind == BoundKind::cardinality) {
    if (f0 == 0) throw DomainError("f_0 = 0: bound undefined");
    return f1 / f0;
  }
  if (!cardinality) throw DomainError("energy certificate lacks a cardinality");
  const Rational M = *cardinality;
  return M * (f0 * M - f1);
}

BoundCertificate cardinality_bound(const GegenbauerExpansion& f, int k) {
  ConeMembership membership = check_cone(f, Cone::M, k);
  if (!membership.member()) throw ConeViolationError(std::move(membership));
  BoundCertificate cert{f, std::move(membership), BoundKind::cardinality, Rational(0), f.dimension(), k, {}, {}};
  cert.value = cert.recompute();
  return cert;
}

namespace {

BoundCertificate energy_bound(const GegenbauerExpansion& f, int k, int cardinality, const Potential& h,
                              BoundKind kind) {
  if (cardinality < 2) throw DomainError("energy bounds need M >= 2");
  const Cone cone = kind == BoundKind::energy_lower ? Cone::L : Cone::U;
  ConeMembership membership = check_cone(f, cone, k, &h);
  if (!membership.member()) throw ConeViolationError(std::move(membership));
  BoundCertificate cert{f, std::move(membership), kind, Rational(0), f.dimension(), k, cardinality, h.id()};
  cert.value = cert.recompute();
  return cert;
}

}  // namespace

BoundCertificate energy_lower_bound(const GegenbauerExpansion& f, int k, int cardinality, const Potential& h) {
  return energy_bound(f, k, cardinality, h, BoundKind::energy_lower);
}

BoundCertificate energy_upper_bound(const GegenbauerExpansion& f, int k, int cardinality, const Potential& h) {
  return energy_bound(f, k, cardinality, h, BoundKind::energy_upper);
}

IdentitySides verify_identity(const SphericalCode& code, const GegenbauerExpansion& f) {
  if (code.dimension() != f.dimension()) {
    throw DomainError("expansion dimension " + std::to_string(f.dimension()) + " does not match code dimension " +
                      std::to_string(code.dimension()));
  }
  const Polynomial poly = f.to_polynomial();
  const double size = static_cast<double>(code.size());
  const auto rows = static_cast<Eigen::Index>(code.size());

  IdentitySides sides;
  sides.lhs = size * to_double(f.value_at_one());
  for (Eigen::Index x = 0; x < rows; ++x) {
    for (Eigen::Index y = 0; y < rows; ++y) {
      if (x != y) sides.lhs += poly(code.gram()(x, y));
    }
  }

  sides.rhs = size * size * to_double(f.coeff(0));
  if (f.degree() >= 1) {
    auto m = moments(code, f.degree());
    for (int i = 1; i <= f.degree(); ++i) sides.rhs += to_double(f.coeff(i)) * m[static_cast<std::size_t>(i)];
  }
  return sides;
}

EqualityReport equality_diagnostics(const SphericalCode& code, const GegenbauerExpansion& f, int k, double tol) {
  if (code.dimension() != f.dimension()) throw DomainError("expansion dimension does not match code dimension");
  if (k < 1) throw DomainError("k must be >= 1");
  EqualityReport report;
  report.tolerance = tol;

  const Polynomial poly = f.to_polynomial();
  const auto rows = static_cast<Eigen::Index>(code.size());
  for (Eigen::Index x = 0; x < rows; ++x) {
    for (Eigen::Index y = x + 1; y < rows; ++y) {
      double t = code.gram()(x, y);
      double v = poly(t);
      if (std::abs(v) > tol) {
        report.inner_products.push_back({static_cast<std::size_t>(x), static_cast<std::size_t>(y), t, v});
      }
    }
  }

  if (f.degree() >= 1) {
    const double scale = tol * static_cast<double>(code.size()) * static_cast<double>(code.size());
    auto m = moments(code, f.degree());
    for (int i = 1; i <= f.degree(); ++i) {
      if (i % 2 == 0 && i <= 2 * k) continue;
      double c = to_double(f.coeff(i));
      double mi = m[static_cast<std::size_t>(i)];
      if (std::abs(c * mi) > scale) report.moments.push_back({i, c, mi});
    }
  }
  return report;
}

}  // namespace kkbounds
