#pragma once

#include "kkbounds/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace kkbounds {

/// Univariate polynomial with exact rational coefficients in the monomial
/// basis, constant term first. The coefficient vector never carries trailing
/// zeros; the zero polynomial has an empty vector and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// c * t^degree
  static Polynomial monomial(int degree, const Rational& c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Coefficient of t^i; zero past the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& t) const;
  double operator()(double t) const;

  Polynomial derivative() const;

  bool is_even() const;
  bool is_odd() const;

  std::vector<double> to_doubles() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Polynomial long division: a = q*b + r with deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; gcd(0, 0) is 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// Same roots as p, each with multiplicity one.
Polynomial squarefree_part(const Polynomial& p);

/// (t - a)
Polynomial linear_factor(const Rational& a);

}  // namespace kkbounds
