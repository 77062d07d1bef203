#include "kkbounds/certificates.hpp"
#include "kkbounds/roots.hpp"
#include "kkbounds/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace kkbounds;

namespace {

GegenbauerExpansion universal_poly(int n, int k) {
  Polynomial p = gegenbauer(n + 2, k);
  return expand(p * p, n);
}

// t^4 + 1/5
Polynomial quartic_potential() { return Polynomial{Rational(1, 5), 0, 0, 0, 1}; }

}  // namespace

TEST_CASE("cone examples") {
  auto f = universal_poly(3, 2);
  auto m = check_cone(f, Cone::M, 2);
  CHECK(m.member());
  CHECK(m.pointwise.method == "exact");

  auto p1 = GegenbauerExpansion(3, {0, 1});
  auto fm = check_cone(p1, Cone::F, 1);
  CHECK_FALSE(fm.member());
  CHECK(fm.signs.front().index == 0);
  CHECK_FALSE(fm.signs.front().satisfied);

  auto one_plus = GegenbauerExpansion(3, {1, 0, 1});
  auto mm = check_cone(one_plus, Cone::M, 1);
  CHECK(mm.member());
  // min of 1 + (3t^2 - 1)/2 on [-1, 1] is 1/2.
  CHECK(check_nonnegative(one_plus.to_polynomial() - Polynomial::constant(Rational(1, 2)), -1, 1).holds);
  CHECK_FALSE(check_nonnegative(one_plus.to_polynomial() - Polynomial::constant(Rational(51, 100)), -1, 1).holds);
}

TEST_CASE("sign conditions cover odd indices and the tail beyond 2k") {
  GegenbauerExpansion f(3, {1, -1, 5, 2, 7, -3, 1});
  auto c = check_cone(f, Cone::F, 2);
  std::vector<int> indices;
  for (const auto& e : c.signs) indices.push_back(e.index);
  CHECK(indices == std::vector<int>{0, 1, 3, 5, 6});
  CHECK(c.signs[1].satisfied);        // f_1 = -1 <= 0
  CHECK_FALSE(c.signs[2].satisfied);  // f_3 = 2
  CHECK(c.signs[3].satisfied);        // f_5 = -3
  CHECK_FALSE(c.signs[4].satisfied);  // f_6 = 1
  CHECK_FALSE(c.member());

  auto g = check_cone(f, Cone::G, 2);
  CHECK_FALSE(g.signs[1].satisfied);
  CHECK(g.signs[2].satisfied);
}

TEST_CASE("even polynomials of degree <= 2k satisfy F and G sign conditions") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 1 + trial % 4;
    const int n = 2 + trial % 6;
    std::vector<Rational> c(static_cast<std::size_t>(2 * k) + 1);
    for (std::size_t i = 0; i < c.size(); i += 2) c[i] = oracle::random_rational(rng);
    c[0] = abs(c[0]) + 1;
    GegenbauerExpansion f = expand(Polynomial(c), n);
    CHECK(check_cone(f, Cone::F, k).member());
    CHECK(check_cone(f, Cone::G, k).member());
  }
}

TEST_CASE("cone argument validation") {
  auto f = universal_poly(3, 1);
  auto h = Potential::riesz(1.0);
  CHECK_THROWS_AS(check_cone(f, Cone::L, 1), DomainError);
  CHECK_THROWS_AS(check_cone(f, Cone::M, 1, &h), DomainError);
  CHECK_THROWS_AS(check_cone(f, Cone::M, 0), DomainError);
}

TEST_CASE("cardinality bounds") {
  auto cert = cardinality_bound(universal_poly(3, 2), 2);
  CHECK(cert.value == 6);
  CHECK(cert.recompute() == cert.value);

  for (int n = 2; n <= 6; ++n) {
    CHECK(cardinality_bound(GegenbauerExpansion(n, {1, 0, 1}), 1).value == 2);
  }
  CHECK(cardinality_bound(GegenbauerExpansion(3, {1}), 1).value == 1);

  try {
    cardinality_bound(GegenbauerExpansion(3, {0, 1}), 1);
    FAIL("expected a cone violation");
  } catch (const ConeViolationError& e) {
    CHECK_FALSE(e.membership().member());
  }
  // Nonnegativity failure: 1 + 2 P_1 is negative at t = -1.
  CHECK_THROWS_AS(cardinality_bound(GegenbauerExpansion(3, {1, -2}), 1), ConeViolationError);
}

TEST_CASE("energy bounds") {
  const auto h = Potential::polynomial(quartic_potential());
  const auto f = expand(quartic_potential(), 3);
  CHECK(f.coeff(0) == Rational(2, 5));
  CHECK(f.value_at_one() == Rational(6, 5));

  auto lower = energy_lower_bound(f, 2, 6, h);
  auto upper = energy_upper_bound(f, 2, 6, h);
  CHECK(lower.value == Rational(36, 5));
  CHECK(upper.value == Rational(36, 5));
  CHECK(energy(construct(Construction::icosahedron_half, 3), h) == doctest::Approx(7.2).epsilon(1e-12));

  // Constant minorant / majorant of the Riesz s=1 potential (min 1/2 at t=-1).
  auto riesz = Potential::riesz(1.0);
  auto c = GegenbauerExpansion(3, {Rational(2, 5)});
  auto low = energy_lower_bound(c, 1, 5, riesz);
  CHECK(low.value == Rational(5 * 4 * 2, 5));
  CHECK(low.membership.pointwise.method == "grid");
  CHECK_THROWS_AS(energy_upper_bound(c, 1, 5, riesz), ConeViolationError);

  auto g = Potential::gaussian(1.0);  // h <= 1 on [-1, 1]
  auto above = energy_upper_bound(GegenbauerExpansion(3, {Rational(11, 10)}), 1, 4, g);
  CHECK(above.value == Rational(4 * 3 * 11, 10));

  // f above h somewhere breaks the lower-bound cone.
  CHECK_THROWS_AS(energy_lower_bound(GegenbauerExpansion(3, {Rational(1, 2)}), 1, 4, g), ConeViolationError);
  CHECK_THROWS_AS(energy_lower_bound(f, 2, 1, h), DomainError);
  auto below = expand(quartic_potential() - Polynomial::constant(Rational(1, 100)), 3);
  CHECK_THROWS_AS(energy_upper_bound(below, 2, 6, h), ConeViolationError);
}

TEST_CASE("grid method is conservative near tangency") {
  auto g = Potential::gaussian(1.0);  // min exp(-2) at t = -1
  const double hmin = std::exp(-2.0);
  auto touching = GegenbauerExpansion(3, {from_double(hmin)});
  // The derivative margin refuses a constant that touches h at t = -1.
  CHECK_FALSE(check_cone(touching, Cone::L, 1, &g).member());
  auto safe = GegenbauerExpansion(3, {from_double(0.99 * hmin)});
  CHECK(check_cone(safe, Cone::L, 1, &g).member());
}

TEST_CASE("the identity holds on random codes and polynomials") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    auto code = oracle::random_code(rng, 2 + trial % 4, 5 + trial % 20);
    auto f = expand(oracle::random_polynomial(rng, 8), code.dimension());
    auto [lhs, rhs] = verify_identity(code, f);
    const double size = static_cast<double>(code.size());
    CHECK(std::abs(lhs - rhs) <= 1e-9 * size * size * f.coefficient_norm());
  }
  auto code = construct(Construction::icosahedron_half, 3);
  auto one = verify_identity(code, GegenbauerExpansion(3, {1}));
  CHECK(one.lhs == doctest::Approx(36));
  CHECK(one.rhs == doctest::Approx(36));

  auto f = universal_poly(3, 2);
  auto sides = verify_identity(code, f);
  CHECK(sides.lhs == doctest::Approx(6 * to_double(f.value_at_one())).epsilon(1e-12));
  CHECK(sides.rhs == doctest::Approx(36 * to_double(f.coeff(0))).epsilon(1e-12));
  CHECK_THROWS_AS(verify_identity(code, GegenbauerExpansion(4, {1})), DomainError);
}

TEST_CASE("equality diagnostics") {
  auto ico_half = construct(Construction::icosahedron_half, 3);
  CHECK(equality_diagnostics(ico_half, universal_poly(3, 2), 2).clean());

  auto t_squared = expand(Polynomial::monomial(2), 3);
  CHECK(equality_diagnostics(construct(Construction::orthonormal_basis, 3), t_squared, 1).clean());

  SphericalCode pair(3, std::vector<std::vector<double>>{{1, 0, 0}, {-1, 0, 0}});
  auto report = equality_diagnostics(pair, t_squared, 1);
  REQUIRE(report.inner_products.size() == 1);
  CHECK(report.inner_products[0].inner_product == -1.0);
  CHECK(report.inner_products[0].value == doctest::Approx(1.0));

  // A polynomial with f_3 != 0 against a code with M_3 != 0.
  SphericalCode random(3, std::vector<std::vector<double>>{{1, 0, 0}, {0.6, 0.8, 0}, {0, 0.6, 0.8}});
  auto odd = equality_diagnostics(random, GegenbauerExpansion(3, {1, 0, 0, -1}), 1);
  REQUIRE_FALSE(odd.moments.empty());
  CHECK(odd.moments[0].index == 3);
}
