#include "cubicstring/inverse.hpp"

#include <string>

#include "cubicstring/error.hpp"

namespace cubicstring {

namespace {

Rational half_inverse_mass(const Rational &M) { return Rational(1) / (2 * M); }

void require_order(const BimomentTable &bt, int order, const char *what) {
  if (bt.max_order() < order)
    throw Error(ErrorKind::IndexOutOfRange,
                std::string(what) + ": bimoment table too small (need order " +
                    std::to_string(order) + ")");
}

// The measure nu = -1/(2M) delta(0) + sum c_k delta(lambda - lambda_k).
RationalPolynomial nu_projection(const BimomentTable &bt, const Rational &M,
                                 const RationalPolynomial &Q) {
  std::vector<Rational> pts{Rational(0)};
  std::vector<Rational> wts{-half_inverse_mass(M)};
  pts.insert(pts.end(), bt.points.begin(), bt.points.end());
  wts.insert(wts.end(), bt.c.begin(), bt.c.end());
  return measure_projection(Q, pts, wts);
}

RationalPolynomial from_solution(const RationalVector &q, const Rational &q0) {
  std::vector<Rational> c{q0};
  for (Eigen::Index j = 0; j < q.size(); ++j)
    c.push_back(q(j));
  return RationalPolynomial(std::move(c));
}

// prod_{j != skip} (z - x_j); skip < 0 keeps every factor.
RationalPolynomial node_product(std::span<const Rational> x, long skip) {
  RationalPolynomial p = RationalPolynomial::constant(Rational(1));
  for (std::size_t j = 0; j < x.size(); ++j)
    if (static_cast<long>(j) != skip)
      p *= RationalPolynomial{Rational(-x[j]), Rational(1)};
  return p;
}

} // namespace

void validate(const SpectralData &sd) {
  if (sd.lambdas.size() != sd.b.size())
    throw Error(ErrorKind::InvalidSpectralData,
                "eigenvalue and residue counts differ");
  if (sd.M <= 0)
    throw Error(ErrorKind::InvalidSpectralData, "total mass must be positive");
  for (std::size_t k = 0; k < sd.lambdas.size(); ++k) {
    if (sd.lambdas[k] <= (k == 0 ? Rational(0) : sd.lambdas[k - 1]))
      throw Error(ErrorKind::InvalidSpectralData,
                  "eigenvalues must be positive and strictly increasing");
    if (sd.b[k] >= 0)
      throw Error(ErrorKind::InvalidSpectralData,
                  "residue b_" + std::to_string(k + 1) + " must be negative");
  }
}

// ---- bimoments -----------------------------------------------------------

BimomentTable bimoments(std::span<const Rational> points,
                        std::span<const Rational> weights, int max_order) {
  if (points.size() != weights.size())
    throw Error(ErrorKind::IndexOutOfRange, "points/weights length mismatch");
  if (max_order < 0)
    throw Error(ErrorKind::IndexOutOfRange, "negative bimoment order");
  const auto s = static_cast<Eigen::Index>(points.size());
  const Eigen::Index orders = max_order + 1;
  BimomentTable bt;
  bt.points.assign(points.begin(), points.end());
  bt.weights.assign(weights.begin(), weights.end());

  // V(a, i) = w_a x_a^i, H(a, b) = 1/(x_a + x_b); then I = V^t H V.
  RationalMatrix V(s, orders);
  RationalMatrix H(s, s);
  for (Eigen::Index a = 0; a < s; ++a) {
    Rational p = weights[static_cast<std::size_t>(a)];
    for (Eigen::Index i = 0; i < orders; ++i) {
      V(a, i) = p;
      p *= points[static_cast<std::size_t>(a)];
    }
    for (Eigen::Index b = 0; b < s; ++b) {
      const Rational den = points[static_cast<std::size_t>(a)] +
                           points[static_cast<std::size_t>(b)];
      if (den == 0)
        throw Error(ErrorKind::ZeroDenominator, "x_a + x_b = 0 in bimoments");
      H(a, b) = 1 / den;
    }
  }
  bt.I = V.transpose() * H * V;
  bt.beta.resize(static_cast<std::size_t>(orders));
  for (Eigen::Index i = 0; i < orders; ++i)
    bt.beta[static_cast<std::size_t>(i)] = s == 0 ? Rational(0) : Rational(V.col(i).sum());
  RationalVector w(s);
  for (Eigen::Index a = 0; a < s; ++a)
    w(a) = weights[static_cast<std::size_t>(a)];
  const RationalVector Hw = H * w;
  for (Eigen::Index k = 0; k < s; ++k)
    bt.c.push_back(-w(k) * Hw(k));
  return bt;
}

BimomentTable bimoments(const SpectralData &sd, int max_order) {
  validate(sd);
  return bimoments(sd.lambdas, sd.b, max_order);
}

DeterminantFamily determinant_family(const BimomentTable &bt,
                                     const Rational &M, int k_max) {
  require_order(bt, k_max, "determinant_family");
  DeterminantFamily f;
  const RationalMatrix &I = bt.I;
  for (int k = 0; k <= k_max; ++k) {
    if (k == 0) {
      for (auto *seq : {&f.A, &f.B, &f.C, &f.D})
        seq->push_back(Rational(1));
      f.D_prime.push_back(Rational(0));
      f.D_double_prime.push_back(Rational(0));
      continue;
    }
    RationalMatrix a = I.topLeftCorner(k, k);
    a(0, 0) += half_inverse_mass(M);
    f.A.push_back(det_exact(a));
    f.B.push_back(det_exact(I.topLeftCorner(k, k)));
    f.C.push_back(det_exact(I.block(1, 1, k, k)));
    f.D.push_back(det_exact(I.block(1, 0, k, k)));
    RationalMatrix dp(k, k), dpp(k, k);
    for (int r = 0; r < k; ++r) {
      dp(r, 0) = bt.beta[static_cast<std::size_t>(r)];
      dpp(r, 0) = bt.beta[static_cast<std::size_t>(r)];
    }
    if (k > 1) {
      dp.rightCols(k - 1) = I.block(1, 0, k, k - 1);
      dpp.rightCols(k - 1) = I.block(1, 1, k, k - 1);
    }
    f.D_prime.push_back(det_exact(dp));
    f.D_double_prime.push_back(det_exact(dpp));
  }
  return f;
}

// ---- approximation problems ----------------------------------------------

RationalPolynomial measure_projection(const RationalPolynomial &Q,
                                      std::span<const Rational> points,
                                      std::span<const Rational> weights) {
  RationalPolynomial out;
  for (std::size_t k = 0; k < points.size(); ++k)
    out += difference_quotient(Q, points[k]) * weights[k];
  return out;
}

Approximant solve_type3(const BimomentTable &bt, const Rational &M, int k) {
  if (k < 1)
    throw Error(ErrorKind::IndexOutOfRange, "type III needs k >= 1");
  require_order(bt, k, "solve_type3");
  RationalMatrix sys = bt.I.block(0, 1, k, k);
  RationalVector rhs = -bt.I.block(0, 0, k, 1);
  rhs(0) -= half_inverse_mass(M);
  const auto q = solve_exact(sys, rhs);
  Approximant a{ApproximantKind::III, k, from_solution(q, Rational(1)), {}, {},
                3 * k};
  a.P = measure_projection(a.Q, bt.points, bt.weights);
  a.Phat = nu_projection(bt, M, a.Q);
  return a;
}

Approximant solve_type2(const BimomentTable &bt, const Rational &M, int k) {
  if (k < 1)
    throw Error(ErrorKind::IndexOutOfRange, "type II needs k >= 1");
  require_order(bt, k, "solve_type2");
  RationalMatrix sys = bt.I.block(1, 0, k, k);
  RationalVector rhs(k);
  for (int l = 0; l < k; ++l)
    rhs(l) = bt.beta[static_cast<std::size_t>(l)];
  const auto q = solve_exact(sys, rhs);
  Approximant a{ApproximantKind::II, k, from_solution(q, Rational(0)), {}, {},
                3 * k + 1};
  const auto proj = measure_projection(a.Q, bt.points, bt.weights);
  a.P = proj + RationalPolynomial::constant(Rational(1) - proj.coeff(0));
  a.Phat = nu_projection(bt, M, a.Q);
  return a;
}

Approximant solve_type1(const BimomentTable &bt, const Rational &M, int k) {
  if (k < 0)
    throw Error(ErrorKind::IndexOutOfRange, "type I needs k >= 0");
  require_order(bt, k, "solve_type1");
  RationalMatrix sys = bt.I.topLeftCorner(k + 1, k + 1);
  sys(0, 0) += half_inverse_mass(M);
  RationalVector rhs = RationalVector::Zero(k + 1);
  rhs(0) = -1;
  const auto q = solve_exact(sys, rhs);
  Approximant a{ApproximantKind::I, k, from_solution(q, Rational(0)), {}, {},
                3 * k + 2};
  const auto proj = measure_projection(a.Q, bt.points, bt.weights);
  a.P = proj - RationalPolynomial::constant(proj.coeff(0));
  a.Phat = nu_projection(bt, M, a.Q);
  return a;
}

// ---- Weyl functions ------------------------------------------------------

std::pair<RationalPolynomial, RationalPolynomial>
weyl_W(const SpectralData &sd) {
  RationalPolynomial num;
  for (std::size_t k = 0; k < sd.lambdas.size(); ++k)
    num += node_product(sd.lambdas, static_cast<long>(k)) * sd.b[k];
  return {num, node_product(sd.lambdas, -1)};
}

std::pair<RationalPolynomial, RationalPolynomial>
weyl_Z(const SpectralData &sd) {
  const auto c = bimoments(sd, 0).c;
  const auto den = node_product(sd.lambdas, -1);
  RationalPolynomial sum;
  for (std::size_t k = 0; k < sd.lambdas.size(); ++k)
    sum += node_product(sd.lambdas, static_cast<long>(k)) * c[k];
  const auto z = z_poly<Rational>();
  return {z * sum - den * half_inverse_mass(sd.M), z * den};
}

WeylSeries weyl_series(const SpectralData &sd, int low_cutoff) {
  const auto c = bimoments(sd, 0).c;
  WeylSeries s{RationalLaurent(low_cutoff), RationalLaurent(low_cutoff), {}, {}};
  s.Z = geometric_series(Rational(0), low_cutoff) * Rational(-half_inverse_mass(sd.M));
  for (std::size_t k = 0; k < sd.lambdas.size(); ++k) {
    const auto g = geometric_series(sd.lambdas[k], low_cutoff);
    s.W = s.W + g * sd.b[k];
    s.Z = s.Z + g * c[k];
  }
  s.W_star = -s.W.reflected();
  s.Z_star = s.Z.reflected();
  return s;
}

OrderCheck check_orders(const Approximant &a, const SpectralData &sd) {
  const int cut = -(a.k + 3);
  // deep enough that products with polynomials of degree <= k+1 are exact to `cut`
  const auto s = weyl_series(sd, cut - (a.k + 2));
  const RationalLaurent Q(a.Q), P(a.P), Phat(a.Phat);
  const auto rz = (Q * s.Z - Phat).truncated(cut);
  const auto rw = (Q * s.W - P).truncated(cut);
  const auto sym = (Phat + P * s.W_star + Q * s.Z_star).truncated(cut);
  OrderCheck out;
  out.approximation_Z = rz.is_big_o(-1);
  out.approximation_W = rw.is_big_o(a.kind == ApproximantKind::III ? -1 : 0);
  out.symmetry = sym.is_big_o(-(a.k + 1));
  return out;
}

bool satisfies_normalization(const Approximant &a) {
  const int k = a.k;
  switch (a.kind) {
  case ApproximantKind::III:
    return a.Q.degree() == k && a.P.degree() <= k - 1 &&
           a.Phat.degree() <= k - 1 && a.Q.coeff(0) == 1 &&
           a.seq_index == 3 * k;
  case ApproximantKind::II:
    return a.Q.degree() == k && a.P.degree() <= k - 1 &&
           a.Phat.degree() <= k - 1 && a.Q.coeff(0) == 0 &&
           a.P.coeff(0) == 1 && a.seq_index == 3 * k + 1;
  case ApproximantKind::I:
    return a.Q.degree() == k + 1 && a.P.degree() <= k && a.Phat.degree() <= k &&
           a.Q.coeff(0) == 0 && a.P.coeff(0) == 0 && a.Phat.coeff(0) == 1 &&
           a.seq_index == 3 * k + 2;
  }
  return false;
}

Approximant last_step(const SpectralData &sd) {
  const int k = static_cast<int>(sd.n()) - 1;
  const auto bt = bimoments(sd, k);
  Approximant a = solve_type1(bt, sd.M, k);
  RationalPolynomial expected =
      RationalPolynomial::monomial(Rational(-2) * sd.M, 1);
  for (const auto &lam : sd.lambdas)
    expected *= RationalPolynomial{Rational(1), Rational(-1) / lam};
  if (a.Q != expected)
    throw Error(ErrorKind::IdentityViolated,
                "last type-I denominator is not -2Mz prod(1 - z/lambda_j)");
  const auto [wn, wd] = weyl_W(sd);
  const auto [zn, zd] = weyl_Z(sd);
  if (a.P * wd != a.Q * wn || a.Phat * zd != a.Q * zn)
    throw Error(ErrorKind::IdentityViolated,
                "last type-I approximant is not exact");
  return a;
}

// ---- recurrence ----------------------------------------------------------

RecurrenceSequences recurrence_sequences(const CubicString &s) {
  validate(s);
  const int n = static_cast<int>(s.size());
  auto mass = [&](int i) { return s.masses[static_cast<std::size_t>(i - 1)]; };
  auto gap = [&](int i) { return s.gaps[static_cast<std::size_t>(i - 1)]; };
  const auto z = z_poly<Rational>();
  auto run = [&](int init) {
    // X[j + 1] holds X_j, j = -1 .. 3n - 1
    std::vector<RationalPolynomial> X(static_cast<std::size_t>(3 * n + 1));
    X[static_cast<std::size_t>(init)] =
        RationalPolynomial::constant(Rational(1));
    auto at = [&](int j) -> RationalPolynomial & {
      return X[static_cast<std::size_t>(j + 1)];
    };
    for (int k = 0; k <= n - 1; ++k) {
      if (k >= 1) {
        const Rational l = gap(n - k);
        at(3 * k) = at(3 * k - 1) * (l * l / 2) + at(3 * k - 2) * l +
                    at(3 * k - 3);
        at(3 * k + 1) = at(3 * k - 1) * l + at(3 * k - 2);
      }
      at(3 * k + 2) = z * at(3 * k) * (Rational(-2) * mass(n - k)) + at(3 * k - 1);
    }
    return X;
  };
  return {run(0), run(1), run(2)};
}

RecurrenceSequences recurrence_sequences(const SpectralData &sd) {
  return recurrence_sequences(recover(sd));
}

// ---- recovery ------------------------------------------------------------

Recovery recover_with_audit(const SpectralData &sd) {
  validate(sd);
  const int n = static_cast<int>(sd.n());
  const auto bt = bimoments(sd, n);
  Recovery r;
  r.audit.determinants = determinant_family(bt, sd.M, n);
  const auto &dets = r.audit.determinants;

  for (int k = 0; k <= n - 1; ++k)
    r.type1.push_back(solve_type1(bt, sd.M, k));
  for (int k = 1; k <= n - 1; ++k) {
    r.type2.push_back(solve_type2(bt, sd.M, k));
    r.type3.push_back(solve_type3(bt, sd.M, k));
  }
  auto lead3 = [&](int k) {
    return k == 0 ? Rational(1)
                  : r.type3[static_cast<std::size_t>(k - 1)].Q.coeff(k);
  };

  r.string.masses.resize(static_cast<std::size_t>(n));
  r.string.gaps.resize(static_cast<std::size_t>(n - 1));
  r.string.anchor = 0;
  for (int k = 0; k <= n - 1; ++k) {
    const Rational m =
        -r.type1[static_cast<std::size_t>(k)].Q.coeff(k + 1) / (2 * lead3(k));
    if (m <= 0)
      throw Error(ErrorKind::NonPositiveRecovery,
                  "m_" + std::to_string(n - k) + " = " + format_rational(m));
    r.string.masses[static_cast<std::size_t>(n - k - 1)] = m;
    const auto ku = static_cast<std::size_t>(k);
    r.audit.m_leading.push_back(m);
    const Rational denom = 2 * dets.A[ku + 1] * dets.A[ku];
    r.audit.m_printed.push_back(dets.C[ku] * dets.D[ku] / denom);
    r.audit.m_cramer.push_back(dets.D[ku] * dets.D[ku] / denom);
  }
  for (int k = 1; k <= n - 1; ++k) {
    const Rational l =
        2 * lead3(k) / r.type2[static_cast<std::size_t>(k - 1)].Q.coeff(k);
    if (l <= 0)
      throw Error(ErrorKind::NonPositiveRecovery,
                  "l_" + std::to_string(n - k) + " = " + format_rational(l));
    r.string.gaps[static_cast<std::size_t>(n - k - 1)] = l;
    const auto ku = static_cast<std::size_t>(k);
    r.audit.l_leading.push_back(l);
    r.audit.l_determinant.push_back(-2 * dets.A[ku] / dets.D_prime[ku]);
  }
  return r;
}

CubicString recover(const SpectralData &sd) {
  return recover_with_audit(sd).string;
}

} // namespace cubicstring
