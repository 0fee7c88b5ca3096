#pragma once

#include <array>
#include <span>
#include <vector>

#include "cubicstring/linalg.hpp"
#include "cubicstring/polynomial.hpp"
#include "cubicstring/rational.hpp"
#include "cubicstring/string_model.hpp"
#include "cubicstring/sturm.hpp"

namespace cubicstring {

/// Bit width used for residue enclosures; CUBICSTRING_PRECISION_BITS
/// overrides the default of 256.
int default_precision_bits();

/// 3x3 matrix of polynomials acting on (phi, phi_x, phi_xx).
class PolyMatrix3 {
public:
  static PolyMatrix3 identity();

  RationalPolynomial &operator()(int r, int c) { return e_[index(r, c)]; }
  const RationalPolynomial &operator()(int r, int c) const {
    return e_[index(r, c)];
  }

  PolyMatrix3 transpose() const;
  /// Entry-wise p(z) -> p(-z).
  PolyMatrix3 reflected() const;
  RationalPolynomial determinant() const;

  friend PolyMatrix3 operator*(const PolyMatrix3 &a, const PolyMatrix3 &b);
  friend bool operator==(const PolyMatrix3 &, const PolyMatrix3 &) = default;

private:
  static int index(int r, int c) { return r * 3 + c; }
  std::array<RationalPolynomial, 9> e_;
};

/// Jump across a mass: identity with -2 m z in entry (3,1).
PolyMatrix3 jump_matrix(const Rational &mass);
/// Free propagation across a gap l: [[1, l, l^2/2], [0, 1, l], [0, 0, 1]].
PolyMatrix3 free_matrix(const Rational &gap);

/// Product of the first `steps` factors of G_n L_{n-1} G_{n-1} ... L_1 G_1.
struct TransitionMatrix {
  PolyMatrix3 entries;
  int steps = 0;

  const RationalPolynomial &operator()(int r, int c) const {
    return entries(r, c);
  }
};

/// Throws Error(StepsOutOfRange) unless 1 <= steps <= 2n - 1.
TransitionMatrix transition(const CubicString &s, int steps);

/// Boundary data of the right-most wave function plus the spectrum and the
/// residues of W = B/A and Z = C/A. Eigenvalues and residues are enclosures;
/// they are degenerate intervals whenever the value is known exactly.
struct WeylData {
  RationalPolynomial A, B, C;
  std::vector<Interval> lambdas; ///< positive eigenvalues, increasing
  std::vector<Interval> b_res;
  std::vector<Interval> c_res;
  int precision_bits = 0; ///< enclosure width 2^-bits for inexact entries

  bool all_exact() const;
  std::vector<Rational> exact_lambdas() const;
  std::vector<Rational> exact_b() const;
};

/// (C, B, A) = S(z) (1, 0, 0)^t.
WeylData abc(const CubicString &s);

/// Checks S(-z)^t J S(z) J = I exactly; throws Error(IdentityViolated).
void check_automorphism(const CubicString &s);
bool satisfies_automorphism(const PolyMatrix3 &m);

/// Sturm isolation of the n - 1 positive roots of A(z)/z; rational roots are
/// detected and returned exactly. z = 0 is never listed.
WeylData spectrum(const CubicString &s,
                  const Rational &width = default_isolation_width());

/// Fills b_k = B(lambda_k)/A'(lambda_k) and c_k = C(lambda_k)/A'(lambda_k),
/// refining inexact eigenvalues until every b_k has a certified sign.
/// Checks b_k < 0 and the relation c_k = -sum_j b_j b_k / (lambda_j + lambda_k).
/// Throws Error(PrecisionExhausted) or Error(IdentityViolated).
WeylData residues(WeylData w, int precision_bits = default_precision_bits());

struct OscillatoryPair {
  RationalMatrix M; ///< symmetric tridiagonal, from the masses
  RationalMatrix L; ///< lower triangular, from the gaps
};

/// Throws Error(TooSmall) for n < 2.
OscillatoryPair oscillatory_matrices(const CubicString &s);

/// Reciprocals of the eigenvalues of M^{-1} L in double precision (Hessenberg
/// QR), ascending. This is the independent float route to the spectrum.
std::vector<double> oscillatory_spectrum(const CubicString &s);

/// Weighted path matrix of the planar network with `order` rows: each row i
/// runs source -> (l_i) -> a_i -> b_i -> (l_i) -> sink, and each a_i (i > 1)
/// has unit edges up to a_{i-1} and diagonally to b_{i-1}.
RationalMatrix path_matrix(int order, std::span<const Rational> gaps);

/// Exhaustive minor check. Throws Error(SizeCapExceeded) above `cap`.
bool is_totally_nonnegative(const RationalMatrix &m, int cap = 6);

} // namespace cubicstring
