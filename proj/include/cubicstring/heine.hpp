#pragma once

#include <span>
#include <string>
#include <vector>

#include "cubicstring/rational.hpp"

namespace cubicstring {

/// Signed discrete measure sum w_k delta(x - x_k) with distinct positive support.
struct DiscreteMeasure {
  std::vector<Rational> points;
  std::vector<Rational> weights;

  std::size_t size() const { return points.size(); }
};

/// Throws Error(IndexOutOfRange) on a length mismatch and
/// Error(OrderingViolated) unless the support is strictly increasing.
void validate(const DiscreteMeasure &mu);

/// Vandermonde-type products over a tuple: prod_{i<j} (x_i - x_j) and
/// prod_{i<j} (x_i + x_j). Both are 1 for fewer than two entries.
Rational vandermonde(std::span<const Rational> x);
Rational pair_sum_product(std::span<const Rational> x);

/// u_k, v_k, t_k: (1/k!) sum over ordered k-tuples of support indices of
/// Delta^2 / Gamma times 1, x_1...x_k or 1/(x_1...x_k), weighted by the
/// product of the weights.
struct UVT {
  Rational u, v, t;
};
/// t_k needs a nonzero support: throws Error(ZeroSupportPoint) when k >= 1
/// and some point is zero.
UVT brute_uvt(const DiscreteMeasure &mu, int k);

/// One checked identity. Non-gating rows are informational and do not
/// affect all_pass().
struct IdentityRow {
  std::string identity;
  int k = 0;
  Rational lhs, rhs;
  bool pass = false;
  bool gating = true;
};

struct IdentityReport {
  std::vector<IdentityRow> rows;

  bool all_pass() const;
  /// Throws Error(IdentityViolated) naming the first failing gating row.
  void require_pass() const;
  void append(const IdentityReport &other);
};

/// D_k, D'_k, D''_k against u and v for 1 <= k <= k_max, plus the sign
/// pattern D_k > 0, D'_k < 0 when every weight is negative.
IdentityReport verify_heine(const DiscreteMeasure &mu, int k_max);

/// B_k and C_k: the 2k-fold subset sums and the 2x2 forms in t, u, v, for
/// 1 <= k <= k_max, and B_k = 0 at k = size + 1.
IdentityReport verify_BC(const DiscreteMeasure &mu, int k_max);

/// E = det[int x^i / (x + lambda_j) dmu] against the (n-1)-fold sum. The
/// identity holds with the factor x_1...x_{n-1} in the integrand; the row
/// without it is reported as non-gating.
IdentityReport verify_cauchy(const DiscreteMeasure &mu,
                             const std::vector<Rational> &lambdas);

/// Every check above on one measure, with lambdas = support.
IdentityReport verify_all(const DiscreteMeasure &mu, int k_max);

} // namespace cubicstring
