#include "cubicstring/forward.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "cubicstring/error.hpp"

namespace cubicstring {

int default_precision_bits() {
  if (const char *env = std::getenv("CUBICSTRING_PRECISION_BITS")) {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 16 && v <= 1 << 16)
      return static_cast<int>(v);
  }
  return 256;
}

// ---- PolyMatrix3 ----------------------------------------------------------

PolyMatrix3 PolyMatrix3::identity() {
  PolyMatrix3 m;
  for (int i = 0; i < 3; ++i)
    m(i, i) = RationalPolynomial::constant(Rational(1));
  return m;
}

PolyMatrix3 PolyMatrix3::transpose() const {
  PolyMatrix3 t;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

PolyMatrix3 PolyMatrix3::reflected() const {
  PolyMatrix3 t;
  for (int i = 0; i < 9; ++i)
    t.e_[i] = e_[i].reflected();
  return t;
}

RationalPolynomial PolyMatrix3::determinant() const {
  const auto &m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

PolyMatrix3 operator*(const PolyMatrix3 &a, const PolyMatrix3 &b) {
  PolyMatrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      RationalPolynomial acc;
      for (int k = 0; k < 3; ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero())
          acc += a(i, k) * b(k, j);
      r(i, j) = std::move(acc);
    }
  return r;
}

PolyMatrix3 jump_matrix(const Rational &mass) {
  PolyMatrix3 g = PolyMatrix3::identity();
  g(2, 0) = RationalPolynomial::monomial(Rational(-2) * mass, 1);
  return g;
}

PolyMatrix3 free_matrix(const Rational &gap) {
  PolyMatrix3 l = PolyMatrix3::identity();
  l(0, 1) = RationalPolynomial::constant(gap);
  l(0, 2) = RationalPolynomial::constant(gap * gap / 2);
  l(1, 2) = RationalPolynomial::constant(gap);
  return l;
}

// ---- transition / abc ----------------------------------------------------

TransitionMatrix transition(const CubicString &s, int steps) {
  validate(s);
  const int n = static_cast<int>(s.size());
  if (steps < 1 || steps > 2 * n - 1)
    throw Error(ErrorKind::StepsOutOfRange,
                "steps = " + std::to_string(steps) + " for n = " +
                    std::to_string(n));
  PolyMatrix3 acc = PolyMatrix3::identity();
  // factor f (1-based): odd -> G_{n-(f-1)/2}, even -> L_{n-f/2}
  for (int f = 1; f <= steps; ++f) {
    if (f % 2 == 1)
      acc = acc * jump_matrix(s.masses[static_cast<std::size_t>(n - 1 - (f - 1) / 2)]);
    else
      acc = acc * free_matrix(s.gaps[static_cast<std::size_t>(n - 1 - f / 2)]);
  }
  return {std::move(acc), steps};
}

WeylData abc(const CubicString &s) {
  const auto S = transition(s, 2 * static_cast<int>(s.size()) - 1);
  WeylData w;
  w.C = S(0, 0);
  w.B = S(1, 0);
  w.A = S(2, 0);
  return w;
}

bool satisfies_automorphism(const PolyMatrix3 &m) {
  PolyMatrix3 J;
  J(0, 2) = RationalPolynomial::constant(Rational(1));
  J(1, 1) = RationalPolynomial::constant(Rational(-1));
  J(2, 0) = RationalPolynomial::constant(Rational(1));
  return m.reflected().transpose() * J * m * J == PolyMatrix3::identity();
}

void check_automorphism(const CubicString &s) {
  const auto S = transition(s, 2 * static_cast<int>(s.size()) - 1);
  if (!satisfies_automorphism(S.entries))
    throw Error(ErrorKind::IdentityViolated, "S(-z)^t J S(z) J != I");
}

// ---- spectrum / residues -------------------------------------------------

bool WeylData::all_exact() const {
  auto exact = [](const Interval &i) { return i.is_exact(); };
  return std::all_of(lambdas.begin(), lambdas.end(), exact) &&
         std::all_of(b_res.begin(), b_res.end(), exact) &&
         std::all_of(c_res.begin(), c_res.end(), exact);
}

std::vector<Rational> WeylData::exact_lambdas() const {
  std::vector<Rational> out;
  for (const auto &l : lambdas) {
    if (!l.is_exact())
      throw Error(ErrorKind::PrecisionExhausted, "eigenvalue is not rational");
    out.push_back(l.lo);
  }
  return out;
}

std::vector<Rational> WeylData::exact_b() const {
  std::vector<Rational> out;
  for (const auto &b : b_res) {
    if (!b.is_exact())
      throw Error(ErrorKind::PrecisionExhausted, "residue is not rational");
    out.push_back(b.lo);
  }
  return out;
}

WeylData spectrum(const CubicString &s, const Rational &width) {
  WeylData w = abc(s);
  const auto reduced = divmod(w.A, z_poly<Rational>()).first; // A(z)/z
  const auto roots =
      sturm_isolate(reduced, Interval(Rational(0), root_bound(reduced)), width);
  for (const auto &iv : roots) {
    if (iv.lo < 0)
      throw Error(ErrorKind::IdentityViolated, "negative eigenvalue");
    if (auto r = exact_rational_root(reduced, iv))
      w.lambdas.emplace_back(*r);
    else
      w.lambdas.push_back(iv);
  }
  if (w.lambdas.size() + 1 != s.size())
    throw Error(ErrorKind::IdentityViolated,
                "expected " + std::to_string(s.size() - 1) +
                    " positive eigenvalues, found " +
                    std::to_string(w.lambdas.size()));
  return w;
}

WeylData residues(WeylData w, int precision_bits) {
  const auto dA = w.A.derivative();
  const auto reduced = divmod(w.A, z_poly<Rational>()).first;
  const int max_bits = precision_bits + 1024;
  w.b_res.clear();
  w.c_res.clear();
  w.precision_bits = precision_bits;
  for (auto &lam : w.lambdas) {
    if (lam.is_exact()) {
      const Rational d = dA(lam.lo);
      w.b_res.emplace_back(w.B(lam.lo) / d);
      w.c_res.emplace_back(w.C(lam.lo) / d);
      continue;
    }
    int bits = precision_bits;
    for (;;) {
      lam = refine_root(reduced, lam, pow2(-bits));
      if (lam.is_exact()) {
        const Rational d = dA(lam.lo);
        w.b_res.emplace_back(w.B(lam.lo) / d);
        w.c_res.emplace_back(w.C(lam.lo) / d);
        break;
      }
      const Interval d = eval_enclosure(dA, lam);
      if (!d.contains_zero()) {
        const Interval b = eval_enclosure(w.B, lam) / d;
        const Interval c = eval_enclosure(w.C, lam) / d;
        if (b.certified_sign() != 0 && c.certified_sign() != 0) {
          w.b_res.push_back(b);
          w.c_res.push_back(c);
          break;
        }
      }
      if (bits >= max_bits)
        throw Error(ErrorKind::PrecisionExhausted,
                    "residue sign not certified at " + std::to_string(bits) +
                        " bits");
      bits *= 2;
    }
  }
  // sign of b_k, and c_k against the b-relation
  for (std::size_t k = 0; k < w.b_res.size(); ++k) {
    if (w.b_res[k].certified_sign() >= 0)
      throw Error(ErrorKind::IdentityViolated,
                  "residue b_" + std::to_string(k + 1) + " is not negative");
    Interval rel(Rational(0));
    for (std::size_t j = 0; j < w.b_res.size(); ++j)
      rel = rel - w.b_res[j] * w.b_res[k] / (w.lambdas[j] + w.lambdas[k]);
    const bool ok = w.c_res[k].is_exact() && rel.is_exact()
                        ? w.c_res[k].lo == rel.lo
                        : w.c_res[k].overlaps(rel);
    if (!ok)
      throw Error(ErrorKind::IdentityViolated,
                  "c_" + std::to_string(k + 1) + " violates the b-c relation");
  }
  return w;
}

// ---- oscillatory matrices ------------------------------------------------

OscillatoryPair oscillatory_matrices(const CubicString &s) {
  validate(s);
  const auto n = static_cast<Eigen::Index>(s.size());
  if (n < 2)
    throw Error(ErrorKind::TooSmall, "oscillatory matrices need n >= 2");
  const Eigen::Index d = n - 1;
  OscillatoryPair out{RationalMatrix::Zero(d, d), RationalMatrix::Zero(d, d)};
  auto inv_mass = [&](Eigen::Index k) { // 1-based
    return Rational(1) / s.masses[static_cast<std::size_t>(k - 1)];
  };
  auto gap = [&](Eigen::Index k) { return s.gaps[static_cast<std::size_t>(k - 1)]; };
  for (Eigen::Index i = 1; i <= d; ++i) {
    out.M(i - 1, i - 1) = inv_mass(i) + inv_mass(i + 1);
    if (i > 1) {
      out.M(i - 1, i - 2) = -inv_mass(i);
      out.M(i - 2, i - 1) = -inv_mass(i);
    }
    out.L(i - 1, i - 1) = gap(i) * gap(i);
    for (Eigen::Index j = 1; j < i; ++j)
      out.L(i - 1, j - 1) = Rational(2) * gap(i) * gap(j);
  }
  return out;
}

std::vector<double> oscillatory_spectrum(const CubicString &s) {
  const auto pair = oscillatory_matrices(s);
  const Eigen::MatrixXd M = pair.M.unaryExpr([](const Rational &r) { return to_double(r); });
  const Eigen::MatrixXd L = pair.L.unaryExpr([](const Rational &r) { return to_double(r); });
  const Eigen::MatrixXd K = M.partialPivLu().solve(L);
  const Eigen::EigenSolver<Eigen::MatrixXd> es(K, false);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    out.push_back(1.0 / es.eigenvalues()(i).real());
  std::sort(out.begin(), out.end());
  return out;
}

// ---- planar network ------------------------------------------------------

namespace {

struct Network {
  struct Edge {
    int to;
    Rational weight;
  };
  std::vector<std::vector<Edge>> out;
  std::vector<int> sources, sinks;

  int add_node() {
    out.emplace_back();
    return static_cast<int>(out.size()) - 1;
  }
  void add_edge(int from, int to, const Rational &w) {
    out[static_cast<std::size_t>(from)].push_back({to, w});
  }

  // Sum of weights over all directed paths from `from` to `to`.
  Rational path_sum(int from, int to) const {
    if (from == to)
      return Rational(1);
    Rational total(0);
    for (const auto &e : out[static_cast<std::size_t>(from)])
      total += e.weight * path_sum(e.to, to);
    return total;
  }
};

} // namespace

RationalMatrix path_matrix(int order, std::span<const Rational> gaps) {
  if (order < 1 || gaps.size() < static_cast<std::size_t>(order))
    throw Error(ErrorKind::IndexOutOfRange, "path_matrix");
  Network net;
  std::vector<std::array<int, 4>> row(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    auto &r = row[static_cast<std::size_t>(i)];
    for (int c = 0; c < 4; ++c)
      r[static_cast<std::size_t>(c)] = net.add_node();
    const Rational &l = gaps[static_cast<std::size_t>(i)];
    net.add_edge(r[0], r[1], l);
    net.add_edge(r[1], r[2], Rational(1));
    net.add_edge(r[2], r[3], l);
    if (i > 0) {
      const auto &up = row[static_cast<std::size_t>(i - 1)];
      net.add_edge(r[1], up[1], Rational(1));
      net.add_edge(r[1], up[2], Rational(1));
    }
    net.sources.push_back(r[0]);
    net.sinks.push_back(r[3]);
  }
  RationalMatrix P(order, order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      P(i, j) = net.path_sum(net.sources[static_cast<std::size_t>(i)],
                             net.sinks[static_cast<std::size_t>(j)]);
  return P;
}

bool is_totally_nonnegative(const RationalMatrix &m, int cap) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::NonSquare, "is_totally_nonnegative");
  if (m.rows() > cap)
    throw Error(ErrorKind::SizeCapExceeded,
                "size " + std::to_string(m.rows()) + " > cap " +
                    std::to_string(cap));
  const unsigned n = static_cast<unsigned>(m.rows());
  for (unsigned rows = 1; rows < (1u << n); ++rows)
    for (unsigned cols = 1; cols < (1u << n); ++cols) {
      if (std::popcount(rows) != std::popcount(cols))
        continue;
      const int k = std::popcount(rows);
      RationalMatrix sub(k, k);
      int si = 0;
      for (unsigned i = 0; i < n; ++i) {
        if (!(rows >> i & 1u))
          continue;
        int sj = 0;
        for (unsigned j = 0; j < n; ++j)
          if (cols >> j & 1u)
            sub(si, sj++) = m(i, j);
        ++si;
      }
      if (det_exact(sub) < 0)
        return false;
    }
  return true;
}

} // namespace cubicstring
