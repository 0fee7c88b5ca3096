#pragma once

#include <optional>
#include <vector>

#include "cubicstring/polynomial.hpp"
#include "cubicstring/rational.hpp"

namespace cubicstring {

/// 2^-64
Rational default_isolation_width();

/// Sturm chain p, p', -rem(p, p'), ...
std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial &p);

/// Sign variations of the chain at x, zeros dropped. For squarefree p the
/// number of roots in (a, b] is variations(a) - variations(b).
int sign_variations(const std::vector<RationalPolynomial> &chain,
                    const Rational &x);

/// Cauchy bound: every real root r satisfies |r| < bound.
Rational root_bound(const RationalPolynomial &p);

/// Isolates every real root of p in (range.lo, range.hi]. Each returned
/// interval holds exactly one root, has width <= width, and is either
/// degenerate (the root itself) or has p(lo) p(hi) < 0. Intervals are sorted.
/// Throws Error(NotSquarefree) when gcd(p, p') is not constant.
std::vector<Interval> sturm_isolate(const RationalPolynomial &p,
                                    const Interval &range,
                                    const Rational &width);

/// Bisects an isolating interval of a simple root down to width.
Interval refine_root(const RationalPolynomial &p, Interval iv,
                     const Rational &width);

/// Searches the isolating interval for a rational root by walking the
/// simplest rationals it contains. Returns the root only when p(r) == 0.
std::optional<Rational> exact_rational_root(const RationalPolynomial &p,
                                            const Interval &iv,
                                            int max_steps = 64);

/// Enclosure of p over iv by interval Horner evaluation.
Interval eval_enclosure(const RationalPolynomial &p, const Interval &iv);

} // namespace cubicstring
