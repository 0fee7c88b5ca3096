#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "cubicstring/error.hpp"
#include "cubicstring/rational.hpp"

namespace cubicstring {

/// Dense univariate polynomial. Coefficient j multiplies z^j; the stored
/// coefficient list never ends in a zero, so the zero polynomial is empty and
/// has degree -1.
template <class Scalar> class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Scalar &a) { return Polynomial({a}); }
  /// a z^k
  static Polynomial monomial(const Scalar &a, int k) {
    std::vector<Scalar> c(static_cast<std::size_t>(k) + 1, Scalar(0));
    c.back() = a;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar> &coefficients() const { return c_; }

  /// Coefficient of z^j; zero outside the stored range.
  Scalar coeff(int j) const {
    return (j < 0 || j > degree()) ? Scalar(0)
                                   : c_[static_cast<std::size_t>(j)];
  }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

  /// Horner evaluation; the argument may be any type closed under + and *
  /// with Scalar (Scalar itself, or an enclosure type).
  template <class Arg> Arg operator()(const Arg &x) const {
    Arg acc(Scalar(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + Arg(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1)
      return {};
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j)
      d[j - 1] = c_[j] * Scalar(static_cast<long>(j));
    return Polynomial(std::move(d));
  }

  /// p(-z)
  Polynomial reflected() const {
    std::vector<Scalar> d = c_;
    for (std::size_t j = 1; j < d.size(); j += 2)
      d[j] = -d[j];
    return Polynomial(std::move(d));
  }

  Polynomial &operator+=(const Polynomial &o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      c_[j] += o.c_[j];
    trim();
    return *this;
  }
  Polynomial &operator-=(const Polynomial &o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      c_[j] -= o.c_[j];
    trim();
    return *this;
  }
  Polynomial &operator*=(const Scalar &a) {
    for (auto &x : c_)
      x *= a;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial &b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) {
    return a -= b;
  }
  friend Polynomial operator-(Polynomial a) {
    for (auto &x : a.c_)
      x = -x;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Scalar &s) { return a *= s; }
  friend Polynomial operator*(const Scalar &s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }

  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Polynomial &a, const Polynomial &b) {
    return !(a == b);
  }

  friend std::ostream &operator<<(std::ostream &os, const Polynomial &p) {
    if (p.is_zero())
      return os << "0";
    bool first = true;
    for (int j = 0; j <= p.degree(); ++j) {
      const Scalar &a = p.c_[static_cast<std::size_t>(j)];
      if (a == Scalar(0))
        continue;
      if (!first)
        os << " + ";
      first = false;
      os << "(" << a << ")";
      if (j >= 1)
        os << "z";
      if (j >= 2)
        os << "^" << j;
    }
    return os;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0))
      c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using RationalPolynomial = Polynomial<Rational>;

/// The polynomial z.
template <class Scalar> Polynomial<Scalar> z_poly() {
  return Polynomial<Scalar>::monomial(Scalar(1), 1);
}

/// Euclidean division over a field: a = q b + r with deg r < deg b.
template <class Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>>
divmod(const Polynomial<Scalar> &a, const Polynomial<Scalar> &b) {
  if (b.is_zero())
    throw Error(ErrorKind::ZeroDenominator, "polynomial division by zero");
  std::vector<Scalar> r = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db)
    return {Polynomial<Scalar>{}, a};
  std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - db) + 1,
                        Scalar(0));
  const Scalar lead = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Scalar t = r[static_cast<std::size_t>(k + db)] / lead;
    q[static_cast<std::size_t>(k)] = t;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k + j)] -= t * b.coeff(j);
  }
  r.resize(static_cast<std::size_t>(db));
  return {Polynomial<Scalar>(std::move(q)), Polynomial<Scalar>(std::move(r))};
}

/// (p(z) - p(x)) / (z - x), by synthetic division.
template <class Scalar>
Polynomial<Scalar> difference_quotient(const Polynomial<Scalar> &p,
                                       const Scalar &x) {
  if (p.degree() < 1)
    return {};
  const auto &c = p.coefficients();
  std::vector<Scalar> q(c.size() - 1, Scalar(0));
  Scalar acc(0);
  for (std::size_t j = c.size() - 1; j >= 1; --j) {
    acc = acc * x + c[j];
    q[j - 1] = acc;
  }
  return Polynomial<Scalar>(std::move(q));
}

/// Monic gcd (zero when both inputs are zero).
template <class Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero())
    a *= Scalar(1) / a.leading();
  return a;
}

template <class Scalar> bool is_squarefree(const Polynomial<Scalar> &p) {
  if (p.degree() < 1)
    return true;
  return gcd(p, p.derivative()).degree() == 0;
}

} // namespace cubicstring
