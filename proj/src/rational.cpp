#include "cubicstring/rational.hpp"

#include <algorithm>
#include <cmath>
#include <regex>

#include "cubicstring/error.hpp"

namespace cubicstring {

namespace {

Integer floor_div(const Integer &a, const Integer &b) {
  // b > 0
  Integer q = a / b;
  if (a < 0 && q * b != a)
    q -= 1;
  return q;
}

Rational floor_of(const Rational &r) {
  return Rational(floor_div(numerator(r), denominator(r)));
}

Integer pow10(unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i)
    r *= 10;
  return r;
}

// Simplest rational in [lo, hi] with 0 < lo <= hi.
Rational simplest_positive(const Rational &lo, const Rational &hi) {
  const Rational fl = floor_of(lo);
  if (fl == lo)
    return lo;
  if (fl + 1 <= hi)
    return fl + 1;
  return fl + 1 / simplest_positive(1 / (hi - fl), 1 / (lo - fl));
}

} // namespace

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(^(-?[0-9]+)(/([0-9]+))?$)");
  const std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, pattern))
    throw Error(ErrorKind::Parse, "not a rational literal: '" + s + "'");
  const Integer num(m[1].str());
  const Integer den = m[3].matched ? Integer(m[3].str()) : Integer(1);
  if (den == 0)
    throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  return Rational(num, den); // canonicalizes
}

std::string format_rational(const Rational &r) {
  if (denominator(r) == 1)
    return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational &r) { return r.convert_to<double>(); }

Rational from_double(double x) {
  if (!std::isfinite(x))
    throw Error(ErrorKind::Parse, "non-finite double");
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  // mant * 2^53 is an exact integer
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  return Rational(Integer(scaled)) * pow2(exp - 53);
}

Rational pow2(int e) {
  Integer p = 1;
  p <<= static_cast<unsigned>(e < 0 ? -e : e);
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

std::string to_decimal(const Rational &r, int digits) {
  if (r == 0)
    return "0";
  digits = std::max(digits, 1);
  const bool negative = r < 0;
  const Rational a = negative ? Rational(-r) : r;
  // Decimal exponent e with 10^e <= a < 10^(e+1).
  long e = static_cast<long>(numerator(a).str().size()) -
           static_cast<long>(denominator(a).str().size());
  auto scaled = [](const Rational &x, long p) {
    return p >= 0 ? x * Rational(pow10(static_cast<unsigned>(p)))
                  : x / Rational(pow10(static_cast<unsigned>(-p)));
  };
  while (scaled(a, -e) >= 10)
    ++e;
  while (scaled(a, -e) < 1)
    --e;
  const Rational s = scaled(a, digits - 1 - e);
  Integer n = floor_div(numerator(s), denominator(s));
  if (s - Rational(n) >= Rational(1, 2))
    n += 1;
  if (n == pow10(static_cast<unsigned>(digits))) {
    n = pow10(static_cast<unsigned>(digits - 1));
    ++e;
  }
  std::string ds = n.str();
  std::string out = negative ? "-" : "";
  out += ds.substr(0, 1);
  if (ds.size() > 1)
    out += "." + ds.substr(1);
  out += (e < 0 ? "e-" : "e+");
  const long ae = e < 0 ? -e : e;
  if (ae < 10)
    out += "0";
  out += std::to_string(ae);
  return out;
}

Rational simplest_between(const Rational &lo, const Rational &hi) {
  if (lo > hi)
    throw Error(ErrorKind::IndexOutOfRange, "simplest_between: empty interval");
  if (lo <= 0 && hi >= 0)
    return Rational(0);
  if (hi < 0)
    return -simplest_positive(-hi, -lo);
  return simplest_positive(lo, hi);
}

Interval operator+(const Interval &a, const Interval &b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

Interval operator-(const Interval &a, const Interval &b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

Interval operator*(const Interval &a, const Interval &b) {
  if (a.is_exact() && b.is_exact())
    return Interval(a.lo * b.lo);
  const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator/(const Interval &a, const Interval &b) {
  if (b.contains_zero())
    throw Error(ErrorKind::ZeroDenominator, "interval divisor contains zero");
  return a * Interval(1 / b.hi, 1 / b.lo);
}

} // namespace cubicstring
