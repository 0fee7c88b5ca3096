#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "cubicstring/cli.hpp"
#include "cubicstring/error.hpp"
#include "cubicstring/forward.hpp"
#include "cubicstring/inverse.hpp"
#include "support.hpp"

using namespace cubicstring;
using testing_support::R;

namespace {

const SpectralData kTwo{{R(2)}, {R(-1)}, R(2)};

RationalPolynomial poly(std::initializer_list<Rational> c) {
  return RationalPolynomial(std::vector<Rational>(c));
}

ErrorKind kind_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Parse;
}

// (Q, P, Phat) read off column `col` of the partial transition product.
struct Column {
  RationalPolynomial Q, P, Phat;
};
Column column(const TransitionMatrix &a, int col) {
  return {a(2, col), a(1, col), a(0, col)};
}

} // namespace

TEST_CASE("n = 2 bimoments") {
  const auto bt = bimoments(kTwo, 2);
  for (int i = 0; i <= 2; ++i) {
    CHECK(bt.beta[static_cast<std::size_t>(i)] == -pow2(i));
    for (int j = 0; j <= 2; ++j)
      CHECK(bt.I(i, j) == pow2(i + j) / 4);
  }
  CHECK(bt.c == std::vector<Rational>{R(-1, 4)});
}

TEST_CASE("n = 2 approximants by hand") {
  const auto bt = bimoments(kTwo, 1);
  const auto t3 = solve_type3(bt, kTwo.M, 1);
  CHECK(t3.Q == poly({R(1), R(-1)}));
  CHECK(t3.P == poly({R(1)}));
  CHECK(t3.Phat == poly({R(1, 2)}));
  const auto t2 = solve_type2(bt, kTwo.M, 1);
  CHECK(t2.Q == poly({R(0), R(-2)}));
  CHECK(t2.P == poly({R(1)}));
  CHECK(t2.Phat == poly({R(1)}));
  const auto t1 = solve_type1(bt, kTwo.M, 1);
  CHECK(t1.Q == poly({R(0), R(-4), R(2)}));
  CHECK(t1.P == poly({R(0), R(-2)}));
  CHECK(t1.Phat == poly({R(1), R(-1)}));
  const auto t0 = solve_type1(bt, kTwo.M, 0);
  CHECK(t0.Q == poly({R(0), R(-2)}));
  CHECK(t0.P.is_zero());
  CHECK(t0.Phat == poly({R(1)}));
}

TEST_CASE("n = 2 recovery and determinant audit") {
  const auto r = recover_with_audit(kTwo);
  CHECK(r.string.masses == std::vector<Rational>{R(1), R(1)});
  CHECK(r.string.gaps == std::vector<Rational>{R(1)});
  CHECK(r.string.anchor == 0);
  const auto &d = r.audit.determinants;
  CHECK(d.A[1] == R(1, 2));
  CHECK(d.A[2] == R(1, 4));
  CHECK(d.D[1] == R(1, 2));
  CHECK(d.D_prime[1] == R(-1));
  CHECK(r.audit.l_agrees());
  CHECK(r.audit.m_cramer_agrees());
  // the C_k D_k variant gives 2 for m_1
  CHECK(r.audit.m_printed[1] == R(2));
  CHECK(!r.audit.m_printed_agrees());
}

TEST_CASE("Weyl functions in closed form") {
  const auto [wn, wd] = weyl_W(kTwo);
  CHECK(wn == poly({R(-1)}));
  CHECK(wd == poly({R(-2), R(1)}));
  const auto [zn, zd] = weyl_Z(kTwo);
  // Z = -1/(4z) - 1/(4(z - 2)) = (1 - z) / (2 z (z - 2)) after clearing
  CHECK(zn * poly({R(0), R(-4), R(2)}) == poly({R(1), R(-1)}) * zd);
}

TEST_CASE("spectral data validation") {
  CHECK(kind_of([] { validate(SpectralData{{R(2), R(1)}, {R(-1), R(-1)}, R(1)}); }) ==
        ErrorKind::InvalidSpectralData);
  CHECK(kind_of([] { validate(SpectralData{{R(1)}, {R(0)}, R(1)}); }) ==
        ErrorKind::InvalidSpectralData);
  CHECK(kind_of([] { validate(SpectralData{{R(1)}, {R(-1)}, R(0)}); }) ==
        ErrorKind::InvalidSpectralData);
  CHECK(kind_of([] { validate(SpectralData{{R(0)}, {R(-1)}, R(1)}); }) ==
        ErrorKind::InvalidSpectralData);
  CHECK(kind_of([] { validate(SpectralData{{R(1)}, {}, R(1)}); }) ==
        ErrorKind::InvalidSpectralData);
  CHECK_NOTHROW(validate(SpectralData{{}, {}, R(3)}));
}

TEST_CASE("solver ranges") {
  const auto bt = bimoments(kTwo, 2);
  CHECK(kind_of([&] { (void)solve_type3(bt, kTwo.M, 0); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([&] { (void)solve_type2(bt, kTwo.M, 0); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([&] { (void)solve_type1(bt, kTwo.M, -1); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([&] { (void)solve_type3(bt, kTwo.M, 3); }) == ErrorKind::IndexOutOfRange);
  // beyond k = n - 1 the moment systems lose rank
  CHECK(kind_of([&] { (void)solve_type3(bt, kTwo.M, 2); }) == ErrorKind::SingularMatrix);
  CHECK(kind_of([&] { (void)solve_type2(bt, kTwo.M, 2); }) == ErrorKind::SingularMatrix);
}

TEST_CASE("n = 1 recovers a single mass") {
  const SpectralData sd{{}, {}, R(7, 3)};
  const auto s = recover(sd);
  CHECK(s.masses == std::vector<Rational>{R(7, 3)});
  CHECK(s.gaps.empty());
  const auto a = last_step(sd);
  CHECK(a.Q == poly({R(0), R(-14, 3)}));
}

TEST_CASE("approximants on random spectral data") {
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const SpectralData sd = random_spectral(n, seed);
      CAPTURE(n);
      CAPTURE(seed);
      const auto rec = recover_with_audit(sd);
      const auto seq = recurrence_sequences(rec.string);
      const auto &dets = rec.audit.determinants;

      for (int k = 1; k <= n - 1; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        CHECK(dets.A[ku] > 0);
        CHECK(dets.D[ku] > 0);
        CHECK(dets.D_prime[ku] < 0);
      }

      auto check_one = [&](const Approximant &a, int col) {
        CAPTURE(a.k);
        CAPTURE(col);
        CHECK(satisfies_normalization(a));
        const auto oc = check_orders(a, sd);
        CHECK(oc.approximation_Z);
        CHECK(oc.approximation_W);
        CHECK(oc.symmetry);
        const Column c = column(transition(rec.string, 2 * a.k + 1), col);
        CHECK(a.Q == c.Q);
        CHECK(a.P == c.P);
        CHECK(a.Phat == c.Phat);
        CHECK(a.Q == seq.Q_at(a.seq_index));
        CHECK(a.P == seq.P_at(a.seq_index));
        CHECK(a.Phat == seq.Phat_at(a.seq_index));
      };
      for (const auto &a : rec.type1)
        check_one(a, 0);
      for (const auto &a : rec.type2)
        check_one(a, 1);
      for (const auto &a : rec.type3)
        check_one(a, 2);

      // Cramer: the top coefficient of the type I denominator
      for (int k = 0; k <= n - 1; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        const Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1);
        CHECK(rec.type1[ku].Q.coeff(k + 1) == sign * dets.D[ku] / dets.A[ku + 1]);
      }

      CHECK(rec.audit.l_agrees());
      CHECK(rec.audit.m_cramer_agrees());
      CHECK_NOTHROW(last_step(sd));
    }
}

TEST_CASE("projections agree with series truncation") {
  const SpectralData sd = random_spectral(4, 12);
  const auto bt = bimoments(sd, 3);
  const auto ws = weyl_series(sd, -20);
  for (int k = 1; k <= 3; ++k) {
    const auto a = solve_type3(bt, sd.M, k);
    CHECK(a.P == (a.Q * ws.W).nonnegative_part());
    CHECK(a.Phat == (a.Q * ws.Z).nonnegative_part());
  }
}

TEST_CASE("order checks reject a perturbed approximant") {
  const SpectralData sd = random_spectral(4, 3);
  auto a = solve_type3(bimoments(sd, 2), sd.M, 2);
  CHECK(check_orders(a, sd).ok());
  a.Q += RationalPolynomial::monomial(R(1, 1000), 2);
  CHECK(!check_orders(a, sd).ok());
}

TEST_CASE("string-first roundtrip up to translation") {
  for (int n = 1; n <= 5; ++n) {
    const CubicString s0 = recover(random_spectral(n, 50 + static_cast<std::uint64_t>(n)));
    CubicString shifted = s0;
    shifted.anchor = R(11, 4);
    const auto w = residues(spectrum(shifted));
    REQUIRE(w.all_exact());
    const SpectralData sd{w.exact_lambdas(), w.exact_b(), conserved(shifted).M};
    CHECK(recover(sd) == s0);
  }
}

TEST_CASE("spectral-first roundtrip is exact") {
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const SpectralData sd = random_spectral(n, seed + 200);
      const auto s = recover(sd);
      const auto w = residues(spectrum(s));
      REQUIRE(w.all_exact());
      CHECK(w.exact_lambdas() == sd.lambdas);
      CHECK(w.exact_b() == sd.b);
      CHECK(conserved(s).M == sd.M);
    }
}
