#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "cubicstring/rational.hpp"

namespace cubicstring {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// Exact determinant. Rows are cleared of denominators and the resulting
/// integer matrix is reduced with Bareiss' fraction-free elimination.
/// Throws Error(NonSquare).
Rational det_exact(const RationalMatrix &m);

/// Exact solution of m x = rhs by fraction-free elimination followed by
/// rational back-substitution; the result is checked against m x == rhs.
/// Throws Error(NonSquare) or Error(SingularMatrix).
RationalVector solve_exact(const RationalMatrix &m, const RationalVector &rhs);

} // namespace cubicstring
