#include "cubicstring/heine.hpp"

#include <bit>
#include <functional>
#include <map>
#include <string>

#include "cubicstring/error.hpp"
#include "cubicstring/inverse.hpp"
#include "cubicstring/linalg.hpp"

namespace cubicstring {

namespace {

Rational factorial(int k) {
  Rational f(1);
  for (int i = 2; i <= k; ++i)
    f *= i;
  return f;
}

// Visits every ordered tuple of indices in [0, base) of length len in which
// no index occurs more than max_repeat times. Tuples that break the cap make
// the summand vanish (a repeated point kills the squared Vandermonde factor).
void for_each_tuple(int base, int len, int max_repeat,
                    const std::function<void(const std::vector<int> &)> &fn) {
  std::vector<int> tuple(static_cast<std::size_t>(len));
  std::vector<int> used(static_cast<std::size_t>(base), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == len) {
      fn(tuple);
      return;
    }
    for (int i = 0; i < base; ++i) {
      if (used[static_cast<std::size_t>(i)] == max_repeat)
        continue;
      ++used[static_cast<std::size_t>(i)];
      tuple[static_cast<std::size_t>(pos)] = i;
      rec(pos + 1);
      --used[static_cast<std::size_t>(i)];
    }
  };
  rec(0);
}

struct Gathered {
  std::vector<Rational> x;
  Rational weight{1};
  Rational x_product{1};
};

Gathered gather(const DiscreteMeasure &mu, const std::vector<int> &tuple) {
  Gathered g;
  for (int i : tuple) {
    const auto iu = static_cast<std::size_t>(i);
    g.x.push_back(mu.points[iu]);
    g.weight *= mu.weights[iu];
    g.x_product *= mu.points[iu];
  }
  return g;
}

IdentityRow row(std::string name, int k, Rational lhs, Rational rhs,
                bool gating = true) {
  const bool pass = lhs == rhs;
  return {std::move(name), k, std::move(lhs), std::move(rhs), pass, gating};
}

// Sum over ordered 2k-tuples of (1/Gamma) sum_I Delta_I^2 Delta_I'^2 Gamma_I Gamma_I'
// over k-subsets I of the positions, optionally times x_1...x_2k. The summand
// only depends on how often each support point occurs, so it is evaluated
// once per occurrence pattern and looked up for every ordered tuple.
Rational split_sum(const DiscreteMeasure &mu, int k, bool with_x) {
  const int len = 2 * k;
  const int base = static_cast<int>(mu.size());
  std::map<long, Rational> by_pattern;
  auto summand = [&](const std::vector<int> &tuple) {
    const Gathered g = gather(mu, tuple);
    Rational inner(0);
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      if (std::popcount(mask) != k)
        continue;
      std::vector<Rational> a, b;
      for (int p = 0; p < len; ++p)
        ((mask >> p) & 1u ? a : b).push_back(g.x[static_cast<std::size_t>(p)]);
      const Rational da = vandermonde(a), db = vandermonde(b);
      if (da == 0 || db == 0)
        continue;
      inner += da * da * db * db * pair_sum_product(a) * pair_sum_product(b);
    }
    if (inner == 0)
      return Rational(0);
    Rational term = inner / pair_sum_product(g.x) * g.weight;
    if (with_x)
      term *= g.x_product;
    return term;
  };
  Rational total(0);
  for_each_tuple(base, len, 2, [&](const std::vector<int> &tuple) {
    long code = 0;
    for (int i : tuple) {
      long place = 1;
      for (int e = 0; e < i; ++e)
        place *= 3;
      code += place;
    }
    auto it = by_pattern.find(code);
    if (it == by_pattern.end())
      it = by_pattern.emplace(code, summand(tuple)).first;
    total += it->second;
  });
  return total / factorial(len);
}

BimomentTable table_for(const DiscreteMeasure &mu, int order) {
  return bimoments(mu.points, mu.weights, order);
}

} // namespace

void validate(const DiscreteMeasure &mu) {
  if (mu.points.size() != mu.weights.size())
    throw Error(ErrorKind::IndexOutOfRange, "points/weights length mismatch");
  for (std::size_t i = 1; i < mu.points.size(); ++i)
    if (mu.points[i] <= mu.points[i - 1])
      throw Error(ErrorKind::OrderingViolated,
                  "support points must be strictly increasing");
}

Rational vandermonde(std::span<const Rational> x) {
  Rational p(1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      p *= x[i] - x[j];
  return p;
}

Rational pair_sum_product(std::span<const Rational> x) {
  Rational p(1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      p *= x[i] + x[j];
  return p;
}

UVT brute_uvt(const DiscreteMeasure &mu, int k) {
  validate(mu);
  if (k < 0)
    throw Error(ErrorKind::IndexOutOfRange, "negative tuple length");
  if (k == 0)
    return {Rational(1), Rational(1), Rational(1)};
  for (const auto &x : mu.points)
    if (x == 0)
      throw Error(ErrorKind::ZeroSupportPoint, "t_k needs a nonzero support");
  UVT s{Rational(0), Rational(0), Rational(0)};
  for_each_tuple(static_cast<int>(mu.size()), k, 1,
                 [&](const std::vector<int> &tuple) {
    const Gathered g = gather(mu, tuple);
    const Rational d = vandermonde(g.x);
    const Rational base = d * d / pair_sum_product(g.x) * g.weight;
    s.u += base;
    s.v += base * g.x_product;
    s.t += base / g.x_product;
  });
  const Rational f = factorial(k);
  return {s.u / f, s.v / f, s.t / f};
}

bool IdentityReport::all_pass() const {
  for (const auto &r : rows)
    if (r.gating && !r.pass)
      return false;
  return true;
}

void IdentityReport::require_pass() const {
  for (const auto &r : rows)
    if (r.gating && !r.pass)
      throw Error(ErrorKind::IdentityViolated,
                  r.identity + " fails at k = " + std::to_string(r.k) + ": " +
                      format_rational(r.lhs) + " vs " + format_rational(r.rhs));
}

void IdentityReport::append(const IdentityReport &other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

IdentityReport verify_heine(const DiscreteMeasure &mu, int k_max) {
  validate(mu);
  const auto bt = table_for(mu, k_max);
  const auto dets = determinant_family(bt, Rational(1), k_max);
  bool negative = !mu.weights.empty();
  for (const auto &w : mu.weights)
    negative = negative && w < 0;

  IdentityReport rep;
  std::vector<UVT> uvt;
  for (int k = 0; k <= k_max; ++k)
    uvt.push_back(brute_uvt(mu, k));
  for (int k = 1; k <= k_max; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const Rational &u = uvt[ku].u, &u1 = uvt[ku - 1].u, &v1 = uvt[ku - 1].v;
    rep.rows.push_back(row("D_k = u_k^2 / 2^k", k, dets.D[ku], u * u / pow2(k)));
    rep.rows.push_back(row("D'_k = u_k u_{k-1} / 2^{k-1}", k, dets.D_prime[ku],
                           u * u1 / pow2(k - 1)));
    rep.rows.push_back(row("D''_k = u_k v_{k-1} / 2^{k-1}", k,
                           dets.D_double_prime[ku], u * v1 / pow2(k - 1)));
    if (negative && k <= static_cast<int>(mu.size())) {
      IdentityRow pos{"D_k > 0", k, dets.D[ku], Rational(0), dets.D[ku] > 0};
      IdentityRow neg{"D'_k < 0", k, dets.D_prime[ku], Rational(0),
                      dets.D_prime[ku] < 0};
      rep.rows.push_back(pos);
      rep.rows.push_back(neg);
    }
  }
  return rep;
}

IdentityReport verify_BC(const DiscreteMeasure &mu, int k_max) {
  validate(mu);
  const int vanish_at = static_cast<int>(mu.size()) + 1;
  const int top = std::max(k_max, vanish_at);
  const auto bt = table_for(mu, top);
  const auto dets = determinant_family(bt, Rational(1), top);

  std::vector<UVT> uvt;
  for (int k = 0; k <= k_max + 1; ++k)
    uvt.push_back(brute_uvt(mu, k));
  IdentityReport rep;
  for (int k = 1; k <= k_max; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const auto &a = uvt[ku - 1], &b = uvt[ku], &c = uvt[ku + 1];
    rep.rows.push_back(row("B_k subset sum", k, dets.B[ku], split_sum(mu, k, false)));
    rep.rows.push_back(row("B_k = (t_k u_k - u_{k-1} t_{k+1}) / 2^k", k,
                           dets.B[ku], (b.t * b.u - a.u * c.t) / pow2(k)));
    rep.rows.push_back(row("C_k subset sum", k, dets.C[ku], split_sum(mu, k, true)));
    rep.rows.push_back(row("C_k = (u_k v_k - v_{k-1} u_{k+1}) / 2^k", k,
                           dets.C[ku], (b.u * b.v - a.v * c.u) / pow2(k)));
  }
  rep.rows.push_back(row("B_k = 0 beyond the support", vanish_at,
                         dets.B[static_cast<std::size_t>(vanish_at)], Rational(0)));
  return rep;
}

IdentityReport verify_cauchy(const DiscreteMeasure &mu,
                             const std::vector<Rational> &lambdas) {
  validate(mu);
  const int n = static_cast<int>(lambdas.size());
  IdentityReport rep;
  if (n == 0)
    return rep;
  RationalMatrix E(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational s(0);
      for (std::size_t p = 0; p < mu.size(); ++p) {
        Rational xp(1);
        for (int e = 0; e <= i; ++e)
          xp *= mu.points[p];
        s += mu.weights[p] * xp / (mu.points[p] + lambdas[static_cast<std::size_t>(j)]);
      }
      E(i, j) = s;
    }
  const Rational lhs = det_exact(E);

  std::vector<Rational> reversed(lambdas.rbegin(), lambdas.rend());
  const Rational prefactor = vandermonde(reversed) / factorial(n);
  Rational with_x(0), without_x(0);
  for_each_tuple(static_cast<int>(mu.size()), n, 1,
                 [&](const std::vector<int> &tuple) {
    const Gathered g = gather(mu, tuple);
    const Rational d = vandermonde(g.x);
    Rational den(1);
    for (const auto &x : g.x)
      for (const auto &l : lambdas)
        den *= x + l;
    const Rational term = d * d / den * g.weight;
    with_x += term * g.x_product;
    without_x += term;
  });
  rep.rows.push_back(row("E cauchy-type", n, lhs, prefactor * with_x));
  rep.rows.push_back(row("E cauchy-type without x-product", n, lhs,
                         prefactor * without_x, false));
  rep.rows.push_back({"E != 0", n, lhs, Rational(0), lhs != 0, true});
  return rep;
}

IdentityReport verify_all(const DiscreteMeasure &mu, int k_max) {
  IdentityReport rep = verify_heine(mu, k_max);
  rep.append(verify_BC(mu, k_max));
  rep.append(verify_cauchy(mu, mu.points));
  return rep;
}

} // namespace cubicstring
