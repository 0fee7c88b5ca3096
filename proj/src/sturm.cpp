#include "cubicstring/sturm.hpp"

#include <algorithm>

#include <boost/multiprecision/number.hpp>

#include "cubicstring/error.hpp"

namespace cubicstring {

namespace {

int sign_of(const Rational &x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

struct Pending {
  Rational lo, hi;
  int count;
};

// Simplest rational in the open interval (lo, hi), 0 <= lo < hi.
Rational simplest_inside_positive(const Rational &lo, const Rational &hi) {
  const Integer fl = numerator(lo) / denominator(lo);
  const Rational next(fl + 1);
  if (next < hi)
    return next;
  const Rational base(fl);
  if (lo == base) {
    // need base + 1/t with t > 1/(hi - base)
    const Rational bound = 1 / (hi - base);
    return base + 1 / Rational(numerator(bound) / denominator(bound) + 1);
  }
  return base + 1 / simplest_inside_positive(1 / (hi - base), 1 / (lo - base));
}

Rational simplest_inside(const Rational &lo, const Rational &hi) {
  if (lo < 0 && hi > 0)
    return Rational(0);
  if (hi <= 0)
    return -simplest_inside_positive(-hi, -lo);
  return simplest_inside_positive(lo, hi);
}

} // namespace

Rational default_isolation_width() { return pow2(-64); }

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial &p) {
  std::vector<RationalPolynomial> chain{p};
  if (p.degree() < 1)
    return chain;
  chain.push_back(p.derivative());
  while (chain.back().degree() > 0) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero())
      break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_variations(const std::vector<RationalPolynomial> &chain,
                    const Rational &x) {
  int variations = 0;
  int last = 0;
  for (const auto &q : chain) {
    const int s = sign_of(q(x));
    if (s == 0)
      continue;
    if (last != 0 && s != last)
      ++variations;
    last = s;
  }
  return variations;
}

Rational root_bound(const RationalPolynomial &p) {
  Rational m(0);
  const Rational lead = abs(p.leading());
  for (int j = 0; j < p.degree(); ++j)
    m = std::max(m, Rational(abs(p.coeff(j))) / lead);
  return m + 1;
}

Interval eval_enclosure(const RationalPolynomial &p, const Interval &iv) {
  return p(iv);
}

std::vector<Interval> sturm_isolate(const RationalPolynomial &p,
                                    const Interval &range,
                                    const Rational &width) {
  if (p.is_zero())
    throw Error(ErrorKind::NotSquarefree, "zero polynomial");
  if (!is_squarefree(p))
    throw Error(ErrorKind::NotSquarefree, "gcd(p, p') is not constant");
  std::vector<Interval> roots;
  if (p.degree() < 1)
    return roots;
  const auto chain = sturm_chain(p);
  std::vector<Pending> work{
      {range.lo, range.hi,
       sign_variations(chain, range.lo) - sign_variations(chain, range.hi)}};
  while (!work.empty()) {
    Pending cur = work.back();
    work.pop_back();
    if (cur.count <= 0)
      continue;
    if (cur.count == 1) {
      roots.push_back(refine_root(p, Interval(cur.lo, cur.hi), width));
      continue;
    }
    // Split at a point that is not itself a root.
    Rational mid = (cur.lo + cur.hi) / 2;
    Rational nudge = (cur.hi - cur.lo) / 8;
    while (p(mid) == 0) {
      mid += nudge;
      nudge /= 2;
    }
    const int left = sign_variations(chain, cur.lo) - sign_variations(chain, mid);
    work.push_back({mid, cur.hi, cur.count - left});
    work.push_back({cur.lo, mid, left});
  }
  std::sort(roots.begin(), roots.end(),
            [](const Interval &a, const Interval &b) { return a.lo < b.lo; });
  return roots;
}

Interval refine_root(const RationalPolynomial &p, Interval iv,
                     const Rational &width) {
  if (iv.is_exact())
    return iv;
  if (p(iv.hi) == 0)
    return Interval(iv.hi);
  if (p(iv.lo) == 0) {
    // The root at lo is outside (lo, hi]; move lo by Sturm bisection first.
    const auto chain = sturm_chain(p);
    const int vhi = sign_variations(chain, iv.hi);
    while (p(iv.lo) == 0) {
      Rational mid = iv.mid();
      if (p(mid) == 0)
        return Interval(mid);
      if (sign_variations(chain, mid) - vhi == 1)
        iv.lo = mid;
      else
        iv.hi = mid;
    }
  }
  int slo = sign_of(p(iv.lo));
  while (iv.width() > width) {
    const Rational mid = iv.mid();
    const int s = sign_of(p(mid));
    if (s == 0)
      return Interval(mid);
    if (s == slo)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
  return iv;
}

std::optional<Rational> exact_rational_root(const RationalPolynomial &p,
                                            const Interval &iv,
                                            int max_steps) {
  if (iv.is_exact())
    return p(iv.lo) == 0 ? std::optional<Rational>(iv.lo) : std::nullopt;
  Rational lo = iv.lo, hi = iv.hi;
  if (p(hi) == 0)
    return hi;
  if (p(lo) == 0)
    return std::nullopt; // lo is not part of (lo, hi]
  const int shi = sign_of(p(hi));
  for (int step = 0; step < max_steps; ++step) {
    const Rational r = simplest_inside(lo, hi);
    const int s = sign_of(p(r));
    if (s == 0)
      return r;
    if (s == shi)
      hi = r;
    else
      lo = r;
  }
  return std::nullopt;
}

} // namespace cubicstring
