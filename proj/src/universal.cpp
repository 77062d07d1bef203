#include "kkbounds/universal.hpp"

#include "kkbounds/errors.hpp"

#include <cmath>
#include <string>

namespace kkbounds {

Integer dgs_bound(int n, int m) {
  if (n < 2) throw DomainError("dimension must be >= 2, got " + std::to_string(n));
  if (m < 1) throw DomainError("design strength must be >= 1, got " + std::to_string(m));
  if (m % 2 == 1) {
    const int k = (m + 1) / 2;
    return 2 * binomial(n + k - 2, k - 1);
  }
  const int k = m / 2;
  return binomial(n + k - 1, k) + binomial(n + k - 2, k - 1);
}

Polynomial dgs_polynomial(int n, int m) {
  if (n < 2) throw DomainError("dimension must be >= 2, got " + std::to_string(n));
  if (m < 1) throw DomainError("design strength must be >= 1, got " + std::to_string(m));
  if (m % 2 == 1) {
    const int k = (m + 1) / 2;
    Polynomial p = adjacent({n, 1, 1}, k - 1);
    return Polynomial{Rational(1), Rational(1)} * p * p;
  }
  Polynomial p = adjacent({n, 1, 0}, m / 2);
  return p * p;
}

UniversalBoundResult universal_bound(int n, int k) {
  if (n < 2) throw DomainError("dimension must be >= 2, got " + std::to_string(n));
  if (k < 1) throw DomainError("k must be >= 1, got " + std::to_string(k));

  const Polynomial p = gegenbauer(n + 2, k);
  const GegenbauerExpansion f = expand(p * p, n);

  UniversalBoundResult result;
  result.n = n;
  result.k = k;
  result.bound = binomial(n + k - 1, k);
  result.dgs_reference = dgs_bound(n, 2 * k + 1);
  result.polynomial = f;
  result.attaining_inner_products = gegenbauer_zeros(n, k);

  auto fail = [&](const std::string& what) {
    throw InternalConsistencyError("universal bound (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                   "): " + what);
  };
  if (f.coeff(0) <= 0) fail("f_0 is not positive");
  if (f.value_at_one() / f.coeff(0) != Rational(result.bound)) fail("f(1)/f_0 differs from C(n+k-1,k)");
  if (2 * result.bound != result.dgs_reference) fail("bound is not half of D(n,2k+1)");
  for (int i = 1; i <= f.degree(); i += 2) {
    if (f.coeff(i) != 0) fail("odd Gegenbauer coefficient " + std::to_string(i) + " is nonzero");
  }
  if (expand(dgs_polynomial(n, 2 * k + 1), n).coeff(0) != f.coeff(0)) fail("f_0 differs from that of d_{2k+1}");
  return result;
}

std::string status_name(TightnessStatus s) {
  switch (s) {
    case TightnessStatus::attained_known: return "attained_known";
    case TightnessStatus::open_case: return "open_case";
    case TightnessStatus::impossible: return "impossible";
    case TightnessStatus::not_classified: return "not_classified";
  }
  return "?";
}

std::string clause_name(TightnessClause c) {
  switch (c) {
    case TightnessClause::none: return "none";
    case TightnessClause::i: return "i";
    case TightnessClause::ii: return "ii";
    case TightnessClause::iii: return "iii";
    case TightnessClause::iv: return "iv";
    case TightnessClause::circle: return "circle";
  }
  return "?";
}

namespace {

// Returns r with r * r == x, or -1.
long long exact_sqrt(long long x) {
  if (x < 0) return -1;
  auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(x))));
  for (long long c = std::max(0LL, r - 1); c <= r + 1; ++c) {
    if (c * c == x) return c;
  }
  return -1;
}

}  // namespace

TightnessVerdict tightness(int n, int k) {
  if (n < 2) throw DomainError("dimension must be >= 2, got " + std::to_string(n));
  if (k < 1) throw DomainError("k must be >= 1, got " + std::to_string(k));

  TightnessVerdict v;
  v.n = n;
  v.k = k;
  if (k == 2 && n >= 3) v.forbidden_cardinality = binomial(n + 1, 2) + 1;

  if (k == 1) {
    v.status = TightnessStatus::attained_known;
    v.clause = TightnessClause::i;
    return v;
  }
  if (n == 2) {
    v.status = TightnessStatus::attained_known;
    v.clause = TightnessClause::circle;
    return v;
  }
  if (k == 2) {
    const long long u = exact_sqrt(static_cast<long long>(n) + 2);
    if (n == 3 || (u > 0 && u % 2 == 1)) {
      v.clause = TightnessClause::ii;
      v.status = (n == 3 || u == 3 || u == 5) ? TightnessStatus::attained_known : TightnessStatus::open_case;
      return v;
    }
  }
  if (k == 3 && (n + 4) % 3 == 0) {
    const long long vv = exact_sqrt((static_cast<long long>(n) + 4) / 3);
    if (vv >= 2) {
      v.clause = TightnessClause::iii;
      v.status = (vv == 2 || vv == 3) ? TightnessStatus::attained_known : TightnessStatus::open_case;
      return v;
    }
  }
  if (k == 5 && n == 24) {
    v.status = TightnessStatus::attained_known;
    v.clause = TightnessClause::iv;
    return v;
  }
  v.status = TightnessStatus::impossible;
  v.clause = TightnessClause::none;
  return v;
}

}  // namespace kkbounds
