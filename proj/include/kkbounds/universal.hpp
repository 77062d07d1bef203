#pragma once

#include "kkbounds/gegenbauer.hpp"
#include "kkbounds/quadrature.hpp"
#include "kkbounds/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kkbounds {

/// Delsarte-Goethals-Seidel lower bound D(n, m) on the size of a spherical m-design:
///   m = 2k-1:  2 C(n+k-2, k-1)
///   m = 2k:    C(n+k-1, k) + C(n+k-2, k-1)
Integer dgs_bound(int n, int m);

/// (t + 1) (P_{k-1}^{1,1})^2 for m = 2k-1, (P_k^{1,0})^2 for m = 2k.
Polynomial dgs_polynomial(int n, int m);

struct UniversalBoundResult {
  int n = 2;
  int k = 1;
  Integer bound;
  GegenbauerExpansion polynomial{2, {}};
  std::vector<QuadratureNode> attaining_inner_products;
  Integer dgs_reference;
};

/// M(n,k) >= C(n+k-1, k) via f = (P_k^{(n+2)})^2. Every exact identity behind
/// the bound (f(1)/f_0, half of D(n,2k+1), matching f_0 with d_{2k+1}, zero odd
/// coefficients) is asserted; a failure throws InternalConsistencyError.
UniversalBoundResult universal_bound(int n, int k);

enum class TightnessStatus { attained_known, open_case, impossible, not_classified };

/// i..iv are the classification clauses for n >= 3; circle covers n = 2,
/// where the halved regular (2k+2)-gon attains the bound for every k.
enum class TightnessClause { none, i, ii, iii, iv, circle };

std::string status_name(TightnessStatus s);
std::string clause_name(TightnessClause c);

struct TightnessVerdict {
  int n = 2;
  int k = 1;
  TightnessStatus status = TightnessStatus::impossible;
  TightnessClause clause = TightnessClause::none;
  // For k = 2, n >= 3: no (2,2)-design has C(n+1, 2) + 1 points.
  std::optional<Integer> forbidden_cardinality;
};

TightnessVerdict tightness(int n, int k);

}  // namespace kkbounds
