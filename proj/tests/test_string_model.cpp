#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "cubicstring/cli.hpp"
#include "cubicstring/error.hpp"
#include "cubicstring/string_model.hpp"
#include "support.hpp"

using namespace cubicstring;
using testing_support::R;

namespace {

ErrorKind kind_of(const CubicString &s) {
  try {
    validate(s);
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("validate accepted an invalid string");
  return ErrorKind::Parse;
}

// Direct sum over increasing index tuples.
Rational subset_sum(const std::vector<Rational> &x, const std::vector<Rational> &m,
                    int k) {
  const int n = static_cast<int>(m.size());
  Rational total(0);
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == k) {
      Rational term(1);
      for (int j = 0; j < k; ++j) {
        term *= m[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
        if (j + 1 < k) {
          const Rational d = x[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])] -
                             x[static_cast<std::size_t>(idx[static_cast<std::size_t>(j + 1)])];
          term *= d * d;
        }
      }
      total += term;
      return;
    }
    for (int i = from; i < n; ++i) {
      idx[static_cast<std::size_t>(pos)] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return total;
}

} // namespace

TEST_CASE("validation") {
  CHECK(kind_of(CubicString{}) == ErrorKind::EmptyString);
  CHECK(kind_of({{R(1), R(0)}, {R(1)}, R(0)}) == ErrorKind::NonPositiveMass);
  CHECK(kind_of({{R(1), R(1)}, {R(-1)}, R(0)}) == ErrorKind::NonPositiveGap);
  CHECK(kind_of({{R(1), R(1)}, {}, R(0)}) == ErrorKind::IndexOutOfRange);
  CHECK_NOTHROW(validate(CubicString{{R(5)}, {}, R(3)}));
}

TEST_CASE("positions are anchored at the right end") {
  const CubicString s{{R(1), R(2), R(3)}, {R(1, 2), R(2)}, R(7)};
  const auto x = positions(s);
  REQUIRE(x.size() == 3);
  CHECK(x[0] == R(9, 2));
  CHECK(x[1] == R(5));
  CHECK(x[2] == R(7));
}

TEST_CASE("n = 2 worked example") {
  const CubicString s{{R(1), R(1)}, {R(1)}, R(0)};
  const auto c = conserved(s);
  CHECK(c.M == 2);
  CHECK(c.M_plus == -1);
  REQUIRE(c.M_higher.size() == 2);
  CHECK(c.M_higher[0] == 2);
  CHECK(c.M_higher[1] == 1);
}

TEST_CASE("conserved quantities match the subset sums") {
  for (int n = 1; n <= 7; ++n)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      CubicString s = random_string(n, seed);
      s.anchor = R(static_cast<long>(seed), 3);
      const auto x = positions(s);
      const auto c = conserved(s);
      REQUIRE(c.M_higher.size() == static_cast<std::size_t>(n));
      Rational M(0), Mp(0);
      for (int i = 0; i < n; ++i) {
        M += s.masses[static_cast<std::size_t>(i)];
        Mp += s.masses[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
      }
      CHECK(c.M == M);
      CHECK(c.M_plus == Mp);
      for (int k = 1; k <= n; ++k)
        CHECK(c.M_higher[static_cast<std::size_t>(k - 1)] == subset_sum(x, s.masses, k));
    }
}

TEST_CASE("M_k are translation invariant, M_+ shifts by M") {
  CubicString s = random_string(5, 3);
  const auto c0 = conserved(s);
  s.anchor += R(5, 2);
  const auto c1 = conserved(s);
  CHECK(c1.M_higher == c0.M_higher);
  CHECK(c1.M_plus == c0.M_plus + c0.M * R(5, 2));
}

TEST_CASE("float and exact evaluation agree") {
  const CubicString s = random_string(4, 9);
  const auto x = positions(s);
  std::vector<double> xd, md;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xd.push_back(to_double(x[i]));
    md.push_back(to_double(s.masses[i]));
  }
  const auto cd = conserved_quantities<double>(xd, md);
  const auto ce = conserved(s);
  for (std::size_t k = 0; k < cd.M_higher.size(); ++k)
    CHECK(cd.M_higher[k] == doctest::Approx(to_double(ce.M_higher[k])).epsilon(1e-13));
}
