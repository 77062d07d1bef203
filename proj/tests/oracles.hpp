#pragma once

// Test-only reference computations, kept independent of the library's
// recurrence and elimination code paths.

#include "kkbounds/code.hpp"
#include "kkbounds/polynomial.hpp"
#include "kkbounds/rational.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace kkbounds::oracle {

// Explicit sum for the classical Gegenbauer polynomial C_i^lambda,
// lambda = (n-2)/2, scaled to 1 at t = 1. Valid for n >= 3.
inline Polynomial explicit_gegenbauer(int n, int i) {
  const Rational lambda(n - 2, 2);
  std::vector<Rational> coeffs(static_cast<std::size_t>(i) + 1);
  for (int m = 0; 2 * m <= i; ++m) {
    // (lambda)_{i-m} / (m! (i-2m)!) * 2^{i-2m} * (-1)^m
    Rational term = 1;
    for (int j = 0; j < i - m; ++j) term *= lambda + j;
    for (int j = 2; j <= m; ++j) term /= j;
    for (int j = 2; j <= i - 2 * m; ++j) term /= j;
    term *= Rational(Integer(1) << (i - 2 * m));
    if (m % 2 == 1) term = -term;
    coeffs[static_cast<std::size_t>(i - 2 * m)] = term;
  }
  Polynomial p(std::move(coeffs));
  return p * (Rational(1) / p(Rational(1)));
}

// int_{-1}^{1} g(t) (1 - t^2)^{(n-3)/2} dt, via t = cos(theta) so the
// integrand g(cos theta) sin^{n-2}(theta) is smooth on [0, pi].
template <class F>
double weighted_integral(int n, F g) {
  auto integrand = [&](double theta) { return g(std::cos(theta)) * std::pow(std::sin(theta), n - 2); };
  // Split to keep the 30-point rule far inside its exactness range.
  constexpr int pieces = 8;
  double total = 0.0;
  for (int p = 0; p < pieces; ++p) {
    double a = std::numbers::pi * p / pieces;
    double b = std::numbers::pi * (p + 1) / pieces;
    total += boost::math::quadrature::gauss<double, 30>::integrate(integrand, a, b);
  }
  return total;
}

// Normalized mean f_0 by numeric integration.
template <class F>
double numeric_mean(int n, F g) {
  return weighted_integral(n, g) / weighted_integral(n, [](double) { return 1.0; });
}

inline SphericalCode random_code(std::mt19937_64& rng, int n, int size) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::vector<double>> pts(static_cast<std::size_t>(size), std::vector<double>(static_cast<std::size_t>(n)));
  for (auto& p : pts) {
    for (auto& x : p) x = normal(rng);
  }
  return SphericalCode(n, pts, SphericalCode::Normalize::yes);
}

// Small random rational in [-range, range] with denominator <= 16.
inline Rational random_rational(std::mt19937_64& rng, int range = 3) {
  std::uniform_int_distribution<int> den(1, 16);
  int d = den(rng);
  std::uniform_int_distribution<int> num(-range * d, range * d);
  return Rational(num(rng), d);
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = random_rational(rng);
  if (c.back() == 0) c.back() = 1;
  return Polynomial(std::move(c));
}

}  // namespace kkbounds::oracle
