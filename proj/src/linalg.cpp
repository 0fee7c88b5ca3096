#include "cubicstring/linalg.hpp"

#include <utility>
#include <vector>

#include <boost/integer/common_factor_rt.hpp>

#include "cubicstring/error.hpp"

namespace cubicstring {

namespace {

using IntegerMatrix = Matrix<Integer>;

Integer lcm(const Integer &a, const Integer &b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

// Scales each row of m (and the matching entry of rhs, if any) by the lcm of
// its denominators. Returns the product of the scale factors.
Rational clear_denominators(const RationalMatrix &m, const RationalVector *rhs,
                            IntegerMatrix &out) {
  const Eigen::Index cols = m.cols() + (rhs ? 1 : 0);
  out.resize(m.rows(), cols);
  Rational scale(1);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      l = lcm(l, denominator(m(i, j)));
    if (rhs)
      l = lcm(l, denominator((*rhs)(i)));
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = numerator(m(i, j)) * (l / denominator(m(i, j)));
    if (rhs)
      out(i, m.cols()) = numerator((*rhs)(i)) * (l / denominator((*rhs)(i)));
    scale *= Rational(l);
  }
  return scale;
}

// In-place Bareiss elimination on the leading n x n block of a (extra
// columns are carried along). Returns the determinant of that block; a
// zero return leaves `a` partially reduced.
Integer bareiss(IntegerMatrix &a, Eigen::Index n) {
  Integer prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && a(pivot, k) == 0)
      ++pivot;
    if (pivot == n)
      return 0;
    if (pivot != k) {
      a.row(pivot).swap(a.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < a.cols(); ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? prev : Integer(-prev);
}

} // namespace

Rational det_exact(const RationalMatrix &m) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::NonSquare, "det_exact");
  if (m.rows() == 0)
    return Rational(1);
  IntegerMatrix a;
  const Rational scale = clear_denominators(m, nullptr, a);
  return Rational(bareiss(a, a.rows())) / scale;
}

RationalVector solve_exact(const RationalMatrix &m, const RationalVector &rhs) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::NonSquare, "solve_exact");
  if (rhs.size() != m.rows())
    throw Error(ErrorKind::NonSquare, "solve_exact: rhs length mismatch");
  const Eigen::Index n = m.rows();
  IntegerMatrix a;
  clear_denominators(m, &rhs, a);
  if (n > 0 && bareiss(a, n) == 0)
    throw Error(ErrorKind::SingularMatrix, "solve_exact");
  RationalVector x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Rational acc(a(i, n));
    for (Eigen::Index j = i + 1; j < n; ++j)
      acc -= Rational(a(i, j)) * x(j);
    x(i) = acc / Rational(a(i, i));
  }
  if (m * x != rhs)
    throw Error(ErrorKind::IdentityViolated,
                "solve_exact: back-substitution check failed");
  return x;
}

} // namespace cubicstring
