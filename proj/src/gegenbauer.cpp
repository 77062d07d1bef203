#include "kkbounds/gegenbauer.hpp"

#include "kkbounds/errors.hpp"

#include <cmath>
#include <string>

namespace kkbounds {

namespace {

void require_dimension(int n) {
  if (n < 2) throw DomainError("dimension must be >= 2, got " + std::to_string(n));
}

}  // namespace

std::vector<Polynomial> gegenbauer_basis(int n, int max_degree) {
  require_dimension(n);
  if (max_degree < 0) throw DomainError("degree must be >= 0, got " + std::to_string(max_degree));
  std::vector<Polynomial> basis;
  basis.reserve(static_cast<std::size_t>(max_degree) + 1);
  basis.push_back(Polynomial::constant(1));
  if (max_degree >= 1) basis.push_back(Polynomial::monomial(1));
  const Polynomial t = Polynomial::monomial(1);
  for (int i = 1; i + 1 <= max_degree; ++i) {
    Polynomial next = t * basis[static_cast<std::size_t>(i)] * Rational(2 * i + n - 2) -
                      basis[static_cast<std::size_t>(i - 1)] * Rational(i);
    next *= Rational(1, i + n - 2);
    basis.push_back(std::move(next));
  }
  return basis;
}

Polynomial gegenbauer(int n, int i) {
  require_dimension(n);
  if (i < 0) throw DomainError("degree must be >= 0, got " + std::to_string(i));
  return gegenbauer_basis(n, i).back();
}

std::vector<double> gegenbauer_values(int n, int max_degree, double t) {
  require_dimension(n);
  if (max_degree < 0) throw DomainError("degree must be >= 0, got " + std::to_string(max_degree));
  std::vector<double> v(static_cast<std::size_t>(max_degree) + 1);
  v[0] = 1.0;
  if (max_degree >= 1) v[1] = t;
  for (int i = 1; i + 1 <= max_degree; ++i) {
    v[static_cast<std::size_t>(i + 1)] =
        ((2.0 * i + n - 2) * t * v[static_cast<std::size_t>(i)] - i * v[static_cast<std::size_t>(i - 1)]) /
        (i + n - 2);
  }
  return v;
}

double gegenbauer_value(int n, int i, double t) { return gegenbauer_values(n, i, t).back(); }

Polynomial adjacent(const JacobiParams& params, int i) {
  require_dimension(params.dimension);
  if (params.a < 0 || params.a > 1 || params.b < 0 || params.b > 1) {
    throw DomainError("adjacent polynomial parameters must lie in {0,1}");
  }
  if (i < 0) throw DomainError("degree must be >= 0, got " + std::to_string(i));

  const Rational base(params.dimension - 3, 2);
  const Rational alpha = base + params.a;
  const Rational beta = base + params.b;
  const Rational ab = alpha + beta;
  const Polynomial t = Polynomial::monomial(1);

  // Standard Jacobi recurrence for P^{(alpha,beta)}; normalized at the end.
  Polynomial prev = Polynomial::constant(1);
  if (i == 0) return prev;
  Polynomial cur = (t * (ab + 2) + Polynomial::constant(alpha - beta)) * Rational(1, 2);
  for (int m = 2; m <= i; ++m) {
    const Rational two_m_ab = 2 * m + ab;
    const Rational a1 = 2 * m * (m + ab) * (two_m_ab - 2);
    const Rational a2 = (two_m_ab - 1) * (alpha * alpha - beta * beta);
    const Rational a3 = (two_m_ab - 1) * two_m_ab * (two_m_ab - 2);
    const Rational a4 = 2 * (m + alpha - 1) * (m + beta - 1) * two_m_ab;
    Polynomial next = (t * a3 + Polynomial::constant(a2)) * cur - prev * a4;
    next *= Rational(1) / a1;
    prev = std::move(cur);
    cur = std::move(next);
  }
  const Rational at_one = cur(Rational(1));
  return cur * (Rational(1) / at_one);
}

GegenbauerExpansion::GegenbauerExpansion(int dimension, std::vector<Rational> coeffs)
    : dimension_(dimension), coeffs_(std::move(coeffs)) {
  require_dimension(dimension);
  if (coeffs_.empty()) coeffs_.push_back(0);
}

Rational GegenbauerExpansion::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational GegenbauerExpansion::value_at_one() const {
  Rational sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

Polynomial GegenbauerExpansion::to_polynomial() const {
  auto basis = gegenbauer_basis(dimension_, degree());
  Polynomial f;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) f += basis[i] * coeffs_[i];
  }
  return f;
}

double GegenbauerExpansion::coefficient_norm() const {
  double norm = 0.0;
  for (const auto& c : coeffs_) norm += std::abs(to_double(c));
  return norm;
}

GegenbauerExpansion expand(const Polynomial& f, int n) {
  require_dimension(n);
  if (f.is_zero()) return GegenbauerExpansion(n, {Rational(0)});
  const int m = f.degree();
  auto basis = gegenbauer_basis(n, m);
  std::vector<Rational> out(static_cast<std::size_t>(m) + 1);
  Polynomial rest = f;
  for (int i = m; i >= 0 && !rest.is_zero(); --i) {
    if (rest.degree() < i) continue;
    const auto& p = basis[static_cast<std::size_t>(i)];
    Rational c = rest.leading() / p.leading();
    out[static_cast<std::size_t>(i)] = c;
    rest -= p * c;
  }
  if (!rest.is_zero()) throw InternalConsistencyError("Gegenbauer elimination left a remainder");
  return GegenbauerExpansion(n, std::move(out));
}

}  // namespace kkbounds
