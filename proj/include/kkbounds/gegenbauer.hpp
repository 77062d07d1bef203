#pragma once

#include "kkbounds/polynomial.hpp"
#include "kkbounds/rational.hpp"

#include <vector>

namespace kkbounds {

/// Normalized Gegenbauer polynomial P_i^{(n)}, orthogonal on [-1, 1] with
/// weight (1 - t^2)^{(n-3)/2} and P_i^{(n)}(1) = 1. Built from the
/// three-term recurrence
///   (i + n - 2) P_{i+1} = (2i + n - 2) t P_i - i P_{i-1},  P_0 = 1, P_1 = t.
/// Throws DomainError if n < 2 or i < 0.
Polynomial gegenbauer(int n, int i);

/// P_0^{(n)} ... P_max^{(n)}.
std::vector<Polynomial> gegenbauer_basis(int n, int max_degree);

/// P_i^{(n)}(t) in floating point, by the recurrence rather than through
/// monomial coefficients (which cancel badly at high degree).
double gegenbauer_value(int n, int i, double t);

/// P_0^{(n)}(t) ... P_max^{(n)}(t).
std::vector<double> gegenbauer_values(int n, int max_degree, double t);

/// Adjacent polynomials: Jacobi polynomials with parameters
/// (alpha + a, alpha + b), alpha = (n - 3) / 2, scaled to 1 at t = 1.
struct JacobiParams {
  int dimension = 2;
  int a = 0;
  int b = 0;
};

Polynomial adjacent(const JacobiParams& params, int i);

/// Coefficients f_0..f_m of f = sum f_i P_i^{(n)} for a fixed dimension n.
class GegenbauerExpansion {
 public:
  GegenbauerExpansion(int dimension, std::vector<Rational> coeffs);

  int dimension() const { return dimension_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// f_i, zero past the stored degree.
  Rational coeff(int i) const;

  /// f(1) = sum of all f_i since every P_i^{(n)}(1) = 1.
  Rational value_at_one() const;

  Polynomial to_polynomial() const;

  /// L1 norm of the coefficient vector.
  double coefficient_norm() const;

  friend bool operator==(const GegenbauerExpansion&, const GegenbauerExpansion&) = default;

 private:
  int dimension_;
  std::vector<Rational> coeffs_;
};

/// Exact change of basis by eliminating the leading coefficient against
/// P_deg^{(n)} from the top degree down.
GegenbauerExpansion expand(const Polynomial& f, int n);

}  // namespace kkbounds
