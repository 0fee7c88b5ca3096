#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace cubicstring {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Parses "p/q", "p" or "-p/q" in base 10 and returns the canonical value.
/// Throws Error(Parse) on anything else, including q == 0.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q == 1.
std::string format_rational(const Rational &r);

double to_double(const Rational &r);

/// Exact value of a finite double.
Rational from_double(double x);

/// 2^e for any integer e.
Rational pow2(int e);

/// Fixed-point decimal rendering with `digits` significant digits.
std::string to_decimal(const Rational &r, int digits);

/// The rational with smallest denominator (then smallest |numerator|) in the
/// closed interval [lo, hi]. Requires lo <= hi.
Rational simplest_between(const Rational &lo, const Rational &hi);

/// Closed rational interval [lo, hi]. A degenerate interval is an exact value.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  explicit Interval(const Rational &x) : lo(x), hi(x) {}
  Interval(const Rational &l, const Rational &h) : lo(l), hi(h) {}

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational &x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  /// +1 / -1 when the whole interval is strictly positive / negative, else 0.
  int certified_sign() const { return lo > 0 ? 1 : (hi < 0 ? -1 : 0); }
  bool overlaps(const Interval &o) const { return lo <= o.hi && o.lo <= hi; }
};

Interval operator+(const Interval &a, const Interval &b);
Interval operator-(const Interval &a, const Interval &b);
Interval operator*(const Interval &a, const Interval &b);
/// Throws Error(ZeroDenominator) when b contains zero.
Interval operator/(const Interval &a, const Interval &b);

} // namespace cubicstring
