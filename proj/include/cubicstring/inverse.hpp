#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cubicstring/laurent.hpp"
#include "cubicstring/linalg.hpp"
#include "cubicstring/polynomial.hpp"
#include "cubicstring/rational.hpp"
#include "cubicstring/string_model.hpp"

namespace cubicstring {

/// Inverse-problem input: eigenvalues 0 < lambda_1 < ... < lambda_{n-1},
/// residues b_k < 0 of W, and the total mass M > 0.
struct SpectralData {
  std::vector<Rational> lambdas;
  std::vector<Rational> b;
  Rational M{1};

  std::size_t n() const { return lambdas.size() + 1; }

  friend bool operator==(const SpectralData &, const SpectralData &) = default;
};

/// Throws Error(InvalidSpectralData).
void validate(const SpectralData &sd);

/// Moments of the residue measure mu = sum b_k delta(lambda - lambda_k):
/// beta_j = int x^j dmu, I_ij = int int x^i y^j / (x + y) dmu(x) dmu(y), and
/// the residues c_k of Z. The support is kept for the projection formulas.
struct BimomentTable {
  std::vector<Rational> points;
  std::vector<Rational> weights;
  std::vector<Rational> beta; ///< beta_0 .. beta_max
  RationalMatrix I;           ///< (max+1) x (max+1), symmetric
  std::vector<Rational> c;    ///< c_k = -sum_j b_j b_k / (lambda_j + lambda_k)

  int max_order() const { return static_cast<int>(beta.size()) - 1; }
};

BimomentTable bimoments(std::span<const Rational> points,
                        std::span<const Rational> weights, int max_order);
BimomentTable bimoments(const SpectralData &sd, int max_order);

/// Hankel-like determinants of the bimoment matrix, indexed by size k
/// (A[k] is k x k). Entry 0 of every sequence is 1, except D_prime[0] and
/// D_double_prime[0], which are undefined and stored as 0.
struct DeterminantFamily {
  std::vector<Rational> A;              ///< I with I_00 + 1/(2M), rows/cols 0..k-1
  std::vector<Rational> B;              ///< I rows/cols 0..k-1
  std::vector<Rational> C;              ///< I rows/cols 1..k
  std::vector<Rational> D;              ///< I rows 1..k, cols 0..k-1
  std::vector<Rational> D_prime;        ///< beta column, then I cols 0..k-2
  std::vector<Rational> D_double_prime; ///< beta column, then I cols 1..k-1
};

/// Requires bt.max_order() >= k_max.
DeterminantFamily determinant_family(const BimomentTable &bt, const Rational &M,
                                     int k_max);

enum class ApproximantKind { I, II, III };

/// Common-denominator approximant (Q, P, Phat) to (W, Z). Kind III has
/// degrees (k, k-1, k-1) and Q(0) = 1; kind II the same degrees with
/// Q(0) = 0, P(0) = 1; kind I degrees (k+1, k, k) with Q(0) = P(0) = 0 and
/// Phat(0) = 1. The position in the interleaved sequence is 3k, 3k+1, 3k+2.
struct Approximant {
  ApproximantKind kind = ApproximantKind::III;
  int k = 0;
  RationalPolynomial Q, P, Phat;
  int seq_index = 0;
};

/// Pi_{>=0} of Q times the Cauchy transform of the measure:
/// sum_k w_k (Q(z) - Q(x_k)) / (z - x_k).
RationalPolynomial measure_projection(const RationalPolynomial &Q,
                                      std::span<const Rational> points,
                                      std::span<const Rational> weights);

/// 1 <= k; the k x k system has determinant D_k. Throws Error(SingularMatrix)
/// past the valid range and Error(IndexOutOfRange) for k < 1 or a table that
/// is too small.
Approximant solve_type3(const BimomentTable &bt, const Rational &M, int k);
Approximant solve_type2(const BimomentTable &bt, const Rational &M, int k);
/// 0 <= k; the (k+1) x (k+1) system has determinant A_{k+1}.
Approximant solve_type1(const BimomentTable &bt, const Rational &M, int k);

/// W and Z as exact rational functions (numerator, denominator).
std::pair<RationalPolynomial, RationalPolynomial>
weyl_W(const SpectralData &sd);
std::pair<RationalPolynomial, RationalPolynomial>
weyl_Z(const SpectralData &sd);

/// Truncated expansions at infinity of W, Z, W*(z) = -W(-z), Z*(z) = Z(-z).
struct WeylSeries {
  RationalLaurent W, Z, W_star, Z_star;
};
WeylSeries weyl_series(const SpectralData &sd, int low_cutoff);

/// Order conditions of the approximation problem that produced `a`,
/// evaluated in truncated Laurent arithmetic with cutoff -(k+3).
struct OrderCheck {
  bool approximation_Z = false; ///< Q Z - Phat = O(1/z)
  bool approximation_W = false; ///< Q W - P = O(1/z) (III) or O(1) (I, II)
  bool symmetry = false;        ///< Phat + P W* + Q Z* = O(z^-(k+1))
  bool ok() const { return approximation_Z && approximation_W && symmetry; }
};
OrderCheck check_orders(const Approximant &a, const SpectralData &sd);

/// Degree and normalization invariants of the approximant's kind.
bool satisfies_normalization(const Approximant &a);

/// Type I at k = n - 1. Checks Q = -2 M z prod (1 - z/lambda_j) and that
/// P/Q = W, Phat/Q = Z exactly; throws Error(IdentityViolated).
Approximant last_step(const SpectralData &sd);

/// Solutions of the four-term recurrence driven by the string data, indexed
/// by j + 1 for j = -1 .. 3n - 1.
struct RecurrenceSequences {
  std::vector<RationalPolynomial> Phat, Q, P;

  const RationalPolynomial &Q_at(int j) const {
    return Q[static_cast<std::size_t>(j + 1)];
  }
  const RationalPolynomial &P_at(int j) const {
    return P[static_cast<std::size_t>(j + 1)];
  }
  const RationalPolynomial &Phat_at(int j) const {
    return Phat[static_cast<std::size_t>(j + 1)];
  }
};
RecurrenceSequences recurrence_sequences(const CubicString &s);
RecurrenceSequences recurrence_sequences(const SpectralData &sd);

/// Closed-form cross-checks evaluated alongside the reconstruction.
struct RecoveryAudit {
  DeterminantFamily determinants;
  /// per k = 0 .. n-1, the value for m_{n-k}
  std::vector<Rational> m_leading;   ///< -[Q_{3k+2}] / (2 [Q_{3k}])
  std::vector<Rational> m_printed;   ///< C_k D_k / (2 A_{k+1} A_k)
  std::vector<Rational> m_cramer;    ///< D_k^2 / (2 A_{k+1} A_k)
  /// per k = 1 .. n-1 (index k-1), the value for l_{n-k}
  std::vector<Rational> l_leading;   ///< 2 [Q_{3k}] / [Q_{3k+1}]
  std::vector<Rational> l_determinant; ///< -2 A_k / D'_k

  bool l_agrees() const { return l_leading == l_determinant; }
  bool m_cramer_agrees() const { return m_leading == m_cramer; }
  bool m_printed_agrees() const { return m_leading == m_printed; }
};

struct Recovery {
  CubicString string;
  RecoveryAudit audit;
  std::vector<Approximant> type1; ///< k = 0 .. n-1
  std::vector<Approximant> type2; ///< k = 1 .. n-1
  std::vector<Approximant> type3; ///< k = 1 .. n-1
};

/// Reconstructs the string (anchor x_n = 0) from the leading coefficients of
/// the approximants. Throws Error(InvalidSpectralData), Error(SingularMatrix)
/// or Error(NonPositiveRecovery).
Recovery recover_with_audit(const SpectralData &sd);
CubicString recover(const SpectralData &sd);

} // namespace cubicstring
