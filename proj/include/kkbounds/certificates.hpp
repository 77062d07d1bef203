#pragma once

#include "kkbounds/code.hpp"
#include "kkbounds/gegenbauer.hpp"
#include "kkbounds/potential.hpp"
#include "kkbounds/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kkbounds {

enum class Cone { F, G, M, L, U };

std::string cone_name(Cone cone);
Cone cone_from_name(const std::string& name);

enum class SignRequirement { positive, nonpositive, nonnegative };

std::string requirement_name(SignRequirement r);

struct SignEvidence {
  int index = 0;
  Rational coefficient;
  SignRequirement required = SignRequirement::positive;
  bool satisfied = false;
};

/// How a global inequality on [-1, 1] was decided.
///   "none"  the cone has no pointwise condition (F, G)
///   "exact" Sturm root isolation on a rational polynomial
///   "grid"  Chebyshev grid with a derivative-bound margin (not exact)
struct PointwiseEvidence {
  std::string method = "none";
  bool satisfied = true;
  // Amount by which the inequality is violated at the worst checked point;
  // 0 when it holds.
  double worst_violation = 0.0;
  std::optional<double> witness;
};

struct ConeMembership {
  Cone cone = Cone::F;
  int n = 2;
  int k = 1;
  std::vector<SignEvidence> signs;
  PointwiseEvidence pointwise;

  bool member() const;
};

struct PointwiseOptions {
  int grid_points = 2048;
};

/// Sign conditions on f_0 and on f_i for odd i < 2k and all i > 2k (up to the
/// degree of f), plus the pointwise condition of M (f >= 0), L (f <= h) or
/// U (f >= h). h is required exactly for L and U.
ConeMembership check_cone(const GegenbauerExpansion& f, Cone cone, int k, const Potential* h = nullptr,
                          const PointwiseOptions& options = {});

enum class BoundKind { cardinality, energy_lower, energy_upper };

std::string bound_kind_name(BoundKind kind);
BoundKind bound_kind_from_name(const std::string& name);

struct BoundCertificate {
  GegenbauerExpansion expansion;
  ConeMembership membership;
  BoundKind kind = BoundKind::cardinality;
  Rational value;
  int n = 2;
  int k = 1;
  std::optional<int> cardinality;
  std::optional<std::string> potential_id;

  /// f(1)/f_0 or M (f_0 M - f(1)) from the stored expansion.
  Rational recompute() const;
};

class ConeViolationError : public std::runtime_error {
 public:
  explicit ConeViolationError(ConeMembership membership);
  const ConeMembership& membership() const { return membership_; }

 private:
  ConeMembership membership_;
};

/// Lower bound f(1)/f_0 on the size of any (k,k)-design; requires f in M_{n,k}.
BoundCertificate cardinality_bound(const GegenbauerExpansion& f, int k);

/// Lower bound M (f_0 M - f(1)) on the h-energy of (k,k)-designs of size M;
/// requires f in L^{(h)}_{n,k}.
BoundCertificate energy_lower_bound(const GegenbauerExpansion& f, int k, int cardinality, const Potential& h);

/// Upper bound M (f_0 M - f(1)); requires f in U^{(h)}_{n,k}.
BoundCertificate energy_upper_bound(const GegenbauerExpansion& f, int k, int cardinality, const Potential& h);

struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Both sides of  |C| f(1) + sum_{x != y} f(<x,y>) = |C|^2 f_0 + sum_{i>=1} f_i M_i.
IdentitySides verify_identity(const SphericalCode& code, const GegenbauerExpansion& f);

struct EqualityReport {
  struct InnerProductViolation {
    std::size_t x = 0;
    std::size_t y = 0;
    double inner_product = 0.0;
    double value = 0.0;
  };
  struct MomentViolation {
    int index = 0;
    double coefficient = 0.0;
    double moment = 0.0;
  };

  double tolerance = 0.0;
  std::vector<InnerProductViolation> inner_products;
  std::vector<MomentViolation> moments;

  bool clean() const { return inner_products.empty() && moments.empty(); }
};

/// Equality conditions of the LP bounds: every off-diagonal inner product is a
/// root of f (|f(t)| <= tol) and f_i M_i vanishes (<= tol |C|^2) for odd i and
/// i >= 2k+1.
EqualityReport equality_diagnostics(const SphericalCode& code, const GegenbauerExpansion& f, int k,
                                    double tol = 1e-9);

}  // namespace kkbounds
