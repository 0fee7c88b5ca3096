#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "cubicstring/error.hpp"
#include "cubicstring/polynomial.hpp"

namespace cubicstring {

/// Truncated Laurent series around z = infinity: finitely many positive
/// powers, and every exponent below low_cutoff() is unknown (truncated, not
/// zero). A series with low_cutoff() == kExact is known exactly.
template <class Scalar> class LaurentSeries {
public:
  static constexpr int kExact = std::numeric_limits<int>::min() / 4;

  LaurentSeries() = default;
  explicit LaurentSeries(int low_cutoff) : cut_(low_cutoff) {}

  /// A polynomial viewed as an exact series.
  explicit LaurentSeries(const Polynomial<Scalar> &p) {
    for (int j = 0; j <= p.degree(); ++j)
      set(j, p.coeff(j));
  }

  int low_cutoff() const { return cut_; }
  bool is_exact() const { return cut_ == kExact; }
  const std::map<int, Scalar> &terms() const { return c_; }

  Scalar coeff(int e) const {
    if (e < cut_)
      throw Error(ErrorKind::PrecisionExhausted,
                  "coefficient below the truncation order");
    auto it = c_.find(e);
    return it == c_.end() ? Scalar(0) : it->second;
  }

  void set(int e, const Scalar &v) {
    if (e < cut_)
      return;
    if (v == Scalar(0))
      c_.erase(e);
    else
      c_[e] = v;
  }

  /// Highest exponent that may be nonzero.
  int top() const {
    if (!c_.empty())
      return c_.rbegin()->first;
    return is_exact() ? kExact : cut_ - 1;
  }

  /// True when every known coefficient with exponent >= from is zero.
  bool vanishes_from(int from) const {
    return std::all_of(c_.begin(), c_.end(),
                       [from](const auto &t) { return t.first < from; });
  }

  /// True when the series is O(z^order): every coefficient of exponent
  /// > order is zero. Requires order >= low_cutoff() - 1 to be decidable.
  bool is_big_o(int order) const {
    if (order + 1 < cut_)
      throw Error(ErrorKind::PrecisionExhausted,
                  "order check below the truncation order");
    return vanishes_from(order + 1);
  }

  /// Pi_{>=0}: the polynomial part.
  Polynomial<Scalar> nonnegative_part() const {
    if (cut_ > 0)
      throw Error(ErrorKind::PrecisionExhausted, "polynomial part truncated");
    std::vector<Scalar> v(static_cast<std::size_t>(std::max(top(), -1) + 1),
                          Scalar(0));
    for (const auto &[e, a] : c_)
      if (e >= 0)
        v[static_cast<std::size_t>(e)] = a;
    return Polynomial<Scalar>(std::move(v));
  }

  /// Pi_{<0}
  LaurentSeries negative_part() const {
    LaurentSeries r(cut_);
    for (const auto &[e, a] : c_)
      if (e < 0)
        r.c_[e] = a;
    return r;
  }

  /// Pi^l: the coefficient of z^{-l}.
  Scalar projection(int l) const { return coeff(-l); }

  LaurentSeries truncated(int low_cutoff) const {
    LaurentSeries r(std::max(low_cutoff, cut_));
    for (const auto &[e, a] : c_)
      if (e >= r.cut_)
        r.c_[e] = a;
    return r;
  }

  friend LaurentSeries operator+(const LaurentSeries &a,
                                 const LaurentSeries &b) {
    LaurentSeries r(std::max(a.cut_, b.cut_));
    for (const auto &[e, v] : a.c_)
      r.set(e, v);
    for (const auto &[e, v] : b.c_)
      if (e >= r.cut_)
        r.set(e, r.coeff(e) + v);
    return r;
  }
  friend LaurentSeries operator-(const LaurentSeries &a) {
    LaurentSeries r(a.cut_);
    for (const auto &[e, v] : a.c_)
      r.c_[e] = -v;
    return r;
  }
  friend LaurentSeries operator-(const LaurentSeries &a,
                                 const LaurentSeries &b) {
    return a + (-b);
  }
  friend LaurentSeries operator*(const LaurentSeries &a, const Scalar &s) {
    LaurentSeries r(a.cut_);
    for (const auto &[e, v] : a.c_)
      r.set(e, v * s);
    return r;
  }

  /// Product; known exactly down to the weaker of (cut_a + top_b) and
  /// (cut_b + top_a).
  friend LaurentSeries operator*(const LaurentSeries &a,
                                 const LaurentSeries &b) {
    int cut = kExact;
    if (!a.is_exact() && !b.is_zero_exact())
      cut = std::max(cut, a.cut_ + b.top());
    if (!b.is_exact() && !a.is_zero_exact())
      cut = std::max(cut, b.cut_ + a.top());
    if (a.is_zero_exact() || b.is_zero_exact())
      cut = kExact;
    LaurentSeries r(cut);
    for (const auto &[ea, va] : a.c_)
      for (const auto &[eb, vb] : b.c_)
        if (ea + eb >= cut)
          r.set(ea + eb, r.coeff(ea + eb) + va * vb);
    return r;
  }

  friend LaurentSeries operator*(const Polynomial<Scalar> &p,
                                 const LaurentSeries &s) {
    return LaurentSeries(p) * s;
  }

  /// f(-z)
  LaurentSeries reflected() const {
    LaurentSeries r(cut_);
    for (const auto &[e, v] : c_)
      r.c_[e] = (e % 2 == 0) ? v : Scalar(-v);
    return r;
  }

private:
  bool is_zero_exact() const { return is_exact() && c_.empty(); }

  std::map<int, Scalar> c_;
  int cut_ = kExact;
};

using RationalLaurent = LaurentSeries<Rational>;

/// Expansion of num/den in descending powers of z, keeping exponents
/// >= low_cutoff.
template <class Scalar>
LaurentSeries<Scalar> laurent_of_rational(const Polynomial<Scalar> &num,
                                          const Polynomial<Scalar> &den,
                                          int low_cutoff) {
  if (den.is_zero())
    throw Error(ErrorKind::ZeroDenominator, "laurent_of_rational");
  LaurentSeries<Scalar> out(low_cutoff);
  if (num.is_zero())
    return out;
  const int d = den.degree();
  const Scalar lead = den.leading();
  // remainder indexed by exponent
  std::map<int, Scalar> rem;
  for (int j = 0; j <= num.degree(); ++j)
    if (num.coeff(j) != Scalar(0))
      rem[j] = num.coeff(j);
  for (int e = num.degree() - d; e >= low_cutoff; --e) {
    auto it = rem.find(e + d);
    if (it == rem.end())
      continue;
    const Scalar q = it->second / lead;
    out.set(e, q);
    for (int j = 0; j <= d; ++j) {
      const Scalar c = den.coeff(j);
      if (c == Scalar(0))
        continue;
      Scalar &slot = rem[e + j];
      slot -= q * c;
      if (slot == Scalar(0))
        rem.erase(e + j);
    }
  }
  return out;
}

/// 1/(z - lambda) = z^-1 + lambda z^-2 + ... down to low_cutoff.
template <class Scalar>
LaurentSeries<Scalar> geometric_series(const Scalar &lambda, int low_cutoff) {
  LaurentSeries<Scalar> out(low_cutoff);
  Scalar p(1);
  for (int e = -1; e >= low_cutoff; --e) {
    out.set(e, p);
    p *= lambda;
  }
  return out;
}

} // namespace cubicstring
