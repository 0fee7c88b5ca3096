#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cubicstring/cli.hpp"
#include "cubicstring/error.hpp"
#include "cubicstring/forward.hpp"
#include "cubicstring/inverse.hpp"
#include "support.hpp"

using namespace cubicstring;
using testing_support::R;

namespace {

const CubicString kTwo{{R(1), R(1)}, {R(1)}, R(0)};

RationalPolynomial poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c)
    v.emplace_back(x);
  return RationalPolynomial(std::move(v));
}

// Strings whose spectrum is rational, produced by recovering random data.
CubicString exact_string(int n, std::uint64_t seed) {
  return recover(random_spectral(n, seed));
}

} // namespace

TEST_CASE("n = 2 transition matrix by hand") {
  const auto S = transition(kTwo, 3);
  CHECK(S(2, 0) == poly({0, -4, 2}));
  CHECK(S(2, 1) == poly({0, -2}));
  CHECK(S(2, 2) == poly({1, -1}));
  const auto w = abc(kTwo);
  CHECK(w.A == poly({0, -4, 2}));
  CHECK(w.B == poly({0, -2}));
  CHECK(w.C == poly({1, -1}));
}

TEST_CASE("single step is the last jump") {
  const CubicString s{{R(2), R(3, 2)}, {R(1, 3)}, R(0)};
  const auto a1 = transition(s, 1);
  CHECK(a1(2, 0) == RationalPolynomial{R(0), R(-3)});
  CHECK(a1(2, 1).is_zero());
  CHECK(a1(2, 2) == poly({1}));
  CHECK_THROWS_AS(transition(s, 0), Error);
  CHECK_THROWS_AS(transition(s, 4), Error);
}

TEST_CASE("n = 1") {
  const CubicString s{{R(3, 2)}, {}, R(0)};
  const auto w = residues(spectrum(s));
  CHECK(w.A == RationalPolynomial{R(0), R(-3)});
  CHECK(w.B.is_zero());
  CHECK(w.C == poly({1}));
  CHECK(w.lambdas.empty());
  CHECK_NOTHROW(check_automorphism(s));
  CHECK_THROWS_AS(oscillatory_matrices(s), Error);
}

TEST_CASE("n = 2 spectrum and residues are exact") {
  const auto w = residues(spectrum(kTwo));
  REQUIRE(w.all_exact());
  CHECK(w.exact_lambdas() == std::vector<Rational>{R(2)});
  CHECK(w.exact_b() == std::vector<Rational>{R(-1)});
  CHECK(w.c_res[0].lo == R(-1, 4));
}

TEST_CASE("transition matrices are unimodular with the expected degrees") {
  for (int n = 1; n <= 6; ++n) {
    const CubicString s = random_string(n, 40 + static_cast<std::uint64_t>(n));
    for (int steps = 1; steps <= 2 * n - 1; ++steps) {
      const auto a = transition(s, steps);
      CHECK(a.entries.determinant() == poly({1}));
      if (steps % 2 == 0)
        continue;
      const int k = (steps - 1) / 2;
      const int expected[3][3] = {
          {k, k - 1, k - 1}, {k, k - 1, k - 1}, {k + 1, k, k}};
      // a single jump matrix is the identity plus one entry; the pattern starts at k = 1
      for (int r = 0; r < 3 && k >= 1; ++r)
        for (int c = 0; c < 3; ++c) {
          CAPTURE(r);
          CAPTURE(c);
          CHECK(a(r, c).degree() == expected[r][c]);
        }
      // values at z = 0
      Rational gap_sum(0);
      for (int j = n - k; j <= n - 1; ++j)
        gap_sum += s.gaps[static_cast<std::size_t>(j - 1)];
      CHECK(a(0, 0).coeff(0) == 1);
      CHECK(a(1, 1).coeff(0) == 1);
      CHECK(a(2, 2).coeff(0) == 1);
      CHECK(a(0, 1).coeff(0) == gap_sum);
      CHECK(a(2, 0).coeff(0) == 0);
      CHECK(a(2, 1).coeff(0) == 0);
      // lowest and highest coefficients of the (3,1) entry
      Rational tail(0);
      for (int i = n - k; i <= n; ++i)
        tail += s.masses[static_cast<std::size_t>(i - 1)];
      CHECK(a(2, 0).coeff(1) == -2 * tail);
      Rational lead = s.masses[static_cast<std::size_t>(n - k - 1)];
      for (int i = n - k + 1; i <= n; ++i) {
        const Rational l = s.gaps[static_cast<std::size_t>(i - 2)];
        lead *= s.masses[static_cast<std::size_t>(i - 1)] * l * l / 2;
      }
      for (int j = 0; j <= k; ++j)
        lead *= -2;
      CHECK(a(2, 0).leading() == lead);
    }
  }
}

TEST_CASE("automorphism and Weyl relation hold exactly") {
  for (int n = 1; n <= 8; ++n)
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const CubicString s = random_string(n, seed * 31 + static_cast<std::uint64_t>(n));
      CHECK_NOTHROW(check_automorphism(s));
      const auto w = abc(s);
      const auto rel = w.A.reflected() * w.C - w.B.reflected() * w.B +
                       w.C.reflected() * w.A;
      CHECK(rel.is_zero());
    }
}

TEST_CASE("boundary data at small z") {
  for (int n = 1; n <= 6; ++n) {
    CubicString s = random_string(n, 77 + static_cast<std::uint64_t>(n));
    s.anchor = R(3, 7);
    const auto w = abc(s);
    const auto c = conserved(s);
    const auto x = positions(s);
    CHECK(w.A.coeff(0) == 0);
    CHECK(w.B.coeff(0) == 0);
    CHECK(w.C.coeff(0) == 1);
    CHECK(w.A.degree() == n);
    CHECK(w.B.coeff(1) == 2 * (c.M_plus - c.M * s.anchor));
    Rational spread(0);
    for (std::size_t k = 0; k < x.size(); ++k)
      spread += s.masses[k] * (s.anchor - x[k]) * (s.anchor - x[k]);
    CHECK(w.C.coeff(1) == -spread);
    // A(z) = 2 sum (-z)^k M_k
    for (int k = 1; k <= n; ++k) {
      const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
      CHECK(w.A.coeff(k) == 2 * sign * c.M_higher[static_cast<std::size_t>(k - 1)]);
    }
  }
}

TEST_CASE("spectrum of random strings: positive, simple, negative residues") {
  for (int n = 2; n <= 6; ++n) {
    const CubicString s = random_string(n, 5 + static_cast<std::uint64_t>(n));
    const auto w = residues(spectrum(s));
    REQUIRE(w.lambdas.size() == static_cast<std::size_t>(n - 1));
    for (std::size_t k = 0; k < w.lambdas.size(); ++k) {
      CHECK(w.lambdas[k].lo > 0);
      if (k > 0)
        CHECK(w.lambdas[k].lo > w.lambdas[k - 1].hi);
      CHECK(w.b_res[k].certified_sign() == -1);
    }
    const auto osc = oscillatory_spectrum(s);
    REQUIRE(osc.size() == w.lambdas.size());
    for (std::size_t k = 0; k < osc.size(); ++k) {
      const double lam = to_double(w.lambdas[k].mid());
      CHECK(std::abs(osc[k] - lam) <= 1e-9 * lam);
    }
  }
}

TEST_CASE("three equal masses") {
  const CubicString s{{R(1), R(1), R(1)}, {R(1), R(1)}, R(0)};
  const auto w = residues(spectrum(s));
  REQUIRE(w.lambdas.size() == 2);
  const auto osc = oscillatory_spectrum(s);
  for (std::size_t k = 0; k < 2; ++k)
    CHECK(std::abs(osc[k] / to_double(w.lambdas[k].mid()) - 1) < 1e-9);
}

TEST_CASE("residue relation on exact spectra") {
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto w = residues(spectrum(exact_string(n, seed)));
      REQUIRE(w.all_exact());
      const auto lam = w.exact_lambdas();
      const auto b = w.exact_b();
      for (std::size_t k = 0; k < lam.size(); ++k) {
        Rational c(0);
        for (std::size_t j = 0; j < lam.size(); ++j)
          c -= b[j] * b[k] / (lam[j] + lam[k]);
        CHECK(w.c_res[k].is_exact());
        CHECK(w.c_res[k].lo == c);
        CHECK(w.B(lam[k]) == b[k] * w.A.derivative()(lam[k]));
      }
    }
}

TEST_CASE("oscillatory pair") {
  const auto p2 = oscillatory_matrices(kTwo);
  CHECK(p2.M(0, 0) == 2);
  CHECK(p2.L(0, 0) == 1);
  for (int n = 2; n <= 7; ++n) {
    const CubicString s = random_string(n, 100 + static_cast<std::uint64_t>(n));
    const auto p = oscillatory_matrices(s);
    Rational sum(0), prod(1);
    for (const auto &m : s.masses) {
      sum += m;
      prod *= m;
    }
    CHECK(det_exact(p.M) == sum / prod);
    for (int i = 0; i < n - 1; ++i)
      for (int j = 0; j < n - 1; ++j) {
        const Rational li = s.gaps[static_cast<std::size_t>(i)];
        const Rational lj = s.gaps[static_cast<std::size_t>(j)];
        const Rational expect = i == j ? li * li : (i > j ? 2 * li * lj : Rational(0));
        CHECK(p.L(i, j) == expect);
      }
  }
}

TEST_CASE("path matrix of the planar network") {
  const std::vector<Rational> gaps{R(2), R(3), R(1, 2), R(5, 3), R(4), R(1, 7)};
  CHECK(path_matrix(1, gaps)(0, 0) == R(4));
  const auto two = path_matrix(2, gaps);
  CHECK(two(0, 0) == R(4));
  CHECK(two(0, 1) == 0);
  CHECK(two(1, 0) == R(12));
  CHECK(two(1, 1) == R(9));
  for (int order = 1; order <= 6; ++order) {
    CubicString s;
    s.masses.assign(static_cast<std::size_t>(order + 1), R(1));
    s.gaps.assign(gaps.begin(), gaps.begin() + order);
    CHECK(path_matrix(order, gaps) == oscillatory_matrices(s).L);
  }
}

TEST_CASE("total nonnegativity") {
  RationalMatrix bad(2, 2);
  bad << R(1), R(2), R(3), R(1);
  CHECK(!is_totally_nonnegative(bad));
  CHECK(is_totally_nonnegative(RationalMatrix::Identity(4, 4)));
  // every entry and 2x2 minor is >= 0 but the determinant is -1
  RationalMatrix sneaky(3, 3);
  sneaky << R(1), R(1), R(0), R(1), R(1), R(1), R(0), R(1), R(1);
  CHECK(!is_totally_nonnegative(sneaky));
  for (int order = 1; order <= 5; ++order) {
    const CubicString s = random_string(order + 1, 9 + static_cast<std::uint64_t>(order));
    CHECK(is_totally_nonnegative(path_matrix(order, s.gaps)));
  }
  CHECK_THROWS_AS(is_totally_nonnegative(RationalMatrix::Identity(7, 7)), Error);
}
