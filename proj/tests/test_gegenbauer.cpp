#include "kkbounds/errors.hpp"
#include "kkbounds/gegenbauer.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace kkbounds;

namespace {

Polynomial t_pow(int m) { return Polynomial::monomial(m); }

}  // namespace

TEST_CASE("low-degree Gegenbauer polynomials") {
  CHECK(gegenbauer(5, 0) == Polynomial::constant(1));
  CHECK(gegenbauer(5, 1) == t_pow(1));
  // (5t^2 - 1)/4 and (3t^2 - 1)/2
  CHECK(gegenbauer(5, 2) == Polynomial{Rational(-1, 4), Rational(0), Rational(5, 4)});
  CHECK(gegenbauer(3, 2) == Polynomial{Rational(-1, 2), Rational(0), Rational(3, 2)});
  // n = 2 gives Chebyshev T_3 = 4t^3 - 3t.
  CHECK(gegenbauer(2, 3) == Polynomial{Rational(0), Rational(-3), Rational(0), Rational(4)});
}

TEST_CASE("recurrence agrees with the explicit-sum oracle") {
  for (int n = 3; n <= 12; ++n) {
    for (int i = 0; i <= 12; ++i) {
      CAPTURE(n);
      CAPTURE(i);
      CHECK(gegenbauer(n, i) == oracle::explicit_gegenbauer(n, i));
    }
  }
}

TEST_CASE("normalization and parity") {
  for (int n = 2; n <= 12; ++n) {
    auto basis = gegenbauer_basis(n, 12);
    for (int i = 0; i <= 12; ++i) {
      const auto& p = basis[static_cast<std::size_t>(i)];
      CHECK(p(Rational(1)) == 1);
      CHECK(p.degree() == i);
      CHECK((i % 2 == 0 ? p.is_even() : p.is_odd()));
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(gegenbauer(1, 2), DomainError);
  CHECK_THROWS_AS(gegenbauer(3, -1), DomainError);
  CHECK_THROWS_AS(adjacent({3, 2, 0}, 1), DomainError);
  CHECK_THROWS_AS(adjacent({1, 1, 1}, 1), DomainError);
  CHECK_THROWS_AS(expand(t_pow(2), 1), DomainError);
}

TEST_CASE("floating-point values follow the exact polynomials") {
  for (int n = 2; n <= 8; ++n) {
    for (int i = 0; i <= 10; ++i) {
      for (double t : {-1.0, -0.7, 0.0, 0.3, 0.9, 1.0}) {
        CHECK(gegenbauer_value(n, i, t) == doctest::Approx(gegenbauer(n, i)(t)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("orthogonality under the (1 - t^2)^{(n-3)/2} weight") {
  for (int n = 3; n <= 8; ++n) {
    for (int i = 0; i <= 8; ++i) {
      const double nii = oracle::weighted_integral(n, [&](double t) {
        double v = gegenbauer_value(n, i, t);
        return v * v;
      });
      for (int j = 0; j < i; ++j) {
        const double njj = oracle::weighted_integral(n, [&](double t) {
          double v = gegenbauer_value(n, j, t);
          return v * v;
        });
        const double nij = oracle::weighted_integral(
            n, [&](double t) { return gegenbauer_value(n, i, t) * gegenbauer_value(n, j, t); });
        CAPTURE(n);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(std::abs(nij) <= 1e-9 * std::sqrt(nii * njj));
      }
    }
  }
}

TEST_CASE("adjacent polynomials") {
  CHECK(adjacent({3, 1, 1}, 2) == Polynomial{Rational(-1, 4), Rational(0), Rational(5, 4)});
  CHECK(adjacent({3, 0, 0}, 1) == t_pow(1));
  CHECK(adjacent({3, 1, 0}, 1)(Rational(1)) == 1);
  for (int n = 2; n <= 10; ++n) {
    for (int i = 0; i <= 10; ++i) {
      CHECK((adjacent({n, 1, 1}, i) - gegenbauer(n + 2, i)).is_zero());
      CHECK(adjacent({n, 0, 0}, i) == gegenbauer(n, i));
      CHECK(adjacent({n, 1, 0}, i)(Rational(1)) == 1);
      CHECK(adjacent({n, 0, 1}, i)(Rational(1)) == 1);
    }
  }
}

TEST_CASE("adjacent (1,0) polynomials are orthogonal under (1-t)(1-t^2)^{(n-3)/2}") {
  for (int n = 3; n <= 7; ++n) {
    for (int i = 0; i <= 5; ++i) {
      auto pi = adjacent({n, 1, 0}, i).to_doubles();
      for (int j = 0; j < i; ++j) {
        auto pj = adjacent({n, 1, 0}, j).to_doubles();
        auto horner = [](const std::vector<double>& c, double t) {
          double acc = 0.0;
          for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
          return acc;
        };
        double ip = oracle::weighted_integral(n, [&](double t) { return (1 - t) * horner(pi, t) * horner(pj, t); });
        CHECK(std::abs(ip) <= 1e-10);
      }
    }
  }
}

TEST_CASE("expansion examples") {
  auto basis_element = expand(gegenbauer(4, 3), 4);
  CHECK(basis_element.coeffs() == std::vector<Rational>{0, 0, 0, 1});

  auto sq = expand(t_pow(2), 3);
  CHECK(sq.coeff(0) == Rational(1, 3));
  CHECK(sq.coeff(1) == 0);
  CHECK(sq.coeff(2) == Rational(2, 3));
  // Numeric cross-check of f_0 and f_2 by weighted inner products.
  CHECK(oracle::numeric_mean(3, [](double t) { return t * t; }) == doctest::Approx(1.0 / 3).epsilon(1e-12));
  const double num = oracle::weighted_integral(3, [](double t) { return t * t * gegenbauer_value(3, 2, t); });
  const double den = oracle::weighted_integral(3, [](double t) { return std::pow(gegenbauer_value(3, 2, t), 2); });
  CHECK(num / den == doctest::Approx(2.0 / 3).epsilon(1e-12));

  auto quartic = expand(t_pow(4), 3);
  CHECK(quartic.coeff(0) == Rational(1, 5));
  CHECK(quartic.coeff(2) == Rational(4, 7));
  CHECK(quartic.coeff(4) == Rational(8, 35));
}

TEST_CASE("f_0 equals the normalized weighted mean") {
  std::mt19937_64 rng(3);
  for (int n = 3; n <= 7; ++n) {
    Polynomial f = oracle::random_polynomial(rng, 9);
    const double numeric = oracle::numeric_mean(n, [&](double t) { return f(t); });
    CHECK(to_double(expand(f, n).coeff(0)) == doctest::Approx(numeric).epsilon(1e-11));
  }
}

TEST_CASE("expand and reconstruct round-trip exactly") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 9; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      Polynomial f = oracle::random_polynomial(rng, 4 * trial + 4);
      auto ex = expand(f, n);
      CHECK(ex.to_polynomial() == f);
      CHECK(expand(ex.to_polynomial(), n) == ex);
      CHECK(ex.value_at_one() == f(Rational(1)));
    }
  }
  CHECK(expand(Polynomial{}, 3).to_polynomial().is_zero());
}

TEST_CASE("evaluation examples") {
  Polynomial p = gegenbauer(5, 2);
  CHECK(p(Rational(1)) == 1);
  CHECK(p(Rational(0)) == Rational(-1, 4));
  CHECK(t_pow(1)(Rational(1, 2)) == Rational(1, 2));
  CHECK(p(0.0) == -0.25);
}
