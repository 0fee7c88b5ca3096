#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cubicstring/rational.hpp"

namespace cubicstring {

/// Point masses m_1..m_n at x_1 < ... < x_n, stored as masses, the gaps
/// l_k = x_{k+1} - x_k, and the anchor x_n. The measure is 2 sum m_k delta(x - x_k).
struct CubicString {
  std::vector<Rational> masses;
  std::vector<Rational> gaps;
  Rational anchor{0};

  std::size_t size() const { return masses.size(); }

  friend bool operator==(const CubicString &, const CubicString &) = default;
};

template <class Scalar> struct ConservedQuantities {
  Scalar M{0};
  Scalar M_plus{0};
  std::vector<Scalar> M_higher; ///< M_1 .. M_n, M_higher[0] == M

  friend bool operator==(const ConservedQuantities &,
                         const ConservedQuantities &) = default;
};

using ConservedSet = ConservedQuantities<Rational>;

/// Throws Error(EmptyString | NonPositiveMass | NonPositiveGap).
void validate(const CubicString &s);

std::vector<Rational> positions(const CubicString &s);

/// M, M_+ and the M_k of the isospectral flow, evaluated from positions and
/// masses. M_k sums prod m_i prod (x_{i_j} - x_{i_{j+1}})^2 over k-subsets;
/// the sum is accumulated by the last chosen index so the cost is O(n^2 k).
template <class Scalar>
ConservedQuantities<Scalar> conserved_quantities(std::span<const Scalar> x,
                                                 std::span<const Scalar> m) {
  const std::size_t n = m.size();
  ConservedQuantities<Scalar> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.M += m[i];
    out.M_plus += m[i] * x[i];
  }
  // ending[j] = sum over subsets of the current size whose largest index is j
  std::vector<Scalar> ending(m.begin(), m.end());
  for (std::size_t k = 1; k <= n; ++k) {
    Scalar total(0);
    for (const auto &e : ending)
      total += e;
    out.M_higher.push_back(total);
    if (k == n)
      break;
    std::vector<Scalar> next(n, Scalar(0));
    for (std::size_t j = 0; j < n; ++j) {
      Scalar acc(0);
      for (std::size_t i = 0; i < j; ++i) {
        const Scalar d = x[i] - x[j];
        acc += ending[i] * d * d;
      }
      next[j] = acc * m[j];
    }
    ending = std::move(next);
  }
  return out;
}

ConservedSet conserved(const CubicString &s);

} // namespace cubicstring
