#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <functional>

#include "cubicstring/cli.hpp"
#include "cubicstring/error.hpp"
#include "cubicstring/heine.hpp"
#include "support.hpp"

using namespace cubicstring;
using testing_support::R;

namespace {

const DiscreteMeasure kOnePoint{{R(2)}, {R(-1)}};

// u_k over increasing index subsets, which equals the ordered-tuple sum / k!.
Rational u_by_subsets(const DiscreteMeasure &mu, int k) {
  const int n = static_cast<int>(mu.size());
  Rational total(0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k)
      continue;
    std::vector<Rational> x;
    Rational w(1);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) {
        x.push_back(mu.points[static_cast<std::size_t>(i)]);
        w *= mu.weights[static_cast<std::size_t>(i)];
      }
    const Rational d = vandermonde(x);
    total += d * d / pair_sum_product(x) * w;
  }
  return total;
}

const IdentityRow &find_row(const IdentityReport &r, const std::string &name, int k) {
  for (const auto &row : r.rows)
    if (row.identity == name && row.k == k)
      return row;
  FAIL("row not found: " << name);
  return r.rows.front();
}

} // namespace

TEST_CASE("u, v, t on small measures") {
  const auto z = brute_uvt(kOnePoint, 0);
  CHECK(z.u == 1);
  CHECK(z.v == 1);
  CHECK(z.t == 1);
  const auto one = brute_uvt(kOnePoint, 1);
  CHECK(one.u == -1);
  CHECK(one.v == -2);
  CHECK(one.t == R(-1, 2));
  const auto two = brute_uvt(kOnePoint, 2);
  CHECK(two.u == 0);
  CHECK(two.v == 0);
  CHECK(two.t == 0);
  try {
    (void)brute_uvt(DiscreteMeasure{{R(0), R(1)}, {R(-1), R(-1)}}, 1);
    FAIL("zero support accepted");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::ZeroSupportPoint);
  }
}

TEST_CASE("ordered tuples agree with subsets") {
  for (int support = 1; support <= 4; ++support) {
    const auto mu = random_measure(support, static_cast<std::uint64_t>(support) * 3);
    for (int k = 0; k <= support + 1; ++k)
      CHECK(brute_uvt(mu, k).u == u_by_subsets(mu, k));
  }
}

TEST_CASE("measure validation") {
  CHECK_THROWS_AS(validate(DiscreteMeasure{{R(2), R(1)}, {R(-1), R(-1)}}), Error);
  CHECK_THROWS_AS(validate(DiscreteMeasure{{R(1)}, {}}), Error);
}

TEST_CASE("n = 2 worked example") {
  const auto h = verify_heine(kOnePoint, 1);
  const auto &d1 = find_row(h, "D_k = u_k^2 / 2^k", 1);
  CHECK(d1.lhs == R(1, 2));
  CHECK(d1.pass);
  CHECK(find_row(h, "D'_k = u_k u_{k-1} / 2^{k-1}", 1).lhs == R(-1));

  const auto bc = verify_BC(kOnePoint, 1);
  CHECK(find_row(bc, "B_k subset sum", 1).lhs == R(1, 4));
  CHECK(find_row(bc, "B_k = (t_k u_k - u_{k-1} t_{k+1}) / 2^k", 1).rhs == R(1, 4));
  CHECK(find_row(bc, "C_k = (u_k v_k - v_{k-1} u_{k+1}) / 2^k", 1).rhs == R(1));
  const auto &vanish = find_row(bc, "B_k = 0 beyond the support", 2);
  CHECK(vanish.lhs == 0);
  CHECK(vanish.pass);
  CHECK(bc.all_pass());

  const auto c = verify_cauchy(kOnePoint, kOnePoint.points);
  CHECK(find_row(c, "E cauchy-type", 1).lhs == R(-1, 2));
  CHECK(find_row(c, "E cauchy-type", 1).pass);
  const auto &printed = find_row(c, "E cauchy-type without x-product", 1);
  CHECK(printed.rhs == R(-1, 4));
  CHECK(!printed.pass);
  CHECK(!printed.gating);
  CHECK(c.all_pass());
}

TEST_CASE("random measures pass every identity") {
  for (int support = 1; support <= 4; ++support)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      CAPTURE(support);
      CAPTURE(seed);
      const auto rep = verify_all(random_measure(support, seed), 4);
      CHECK(rep.all_pass());
      CHECK_NOTHROW(rep.require_pass());
    }
}

TEST_CASE("signed weights: identities hold, positivity is not asserted") {
  const DiscreteMeasure mu{{R(1), R(5, 2), R(4)}, {R(2), R(-1, 3), R(3, 2)}};
  const auto rep = verify_all(mu, 3);
  CHECK(rep.all_pass());
  for (const auto &row : rep.rows)
    CHECK(row.identity != "D_k > 0");
}

TEST_CASE("a failing gating row is reported") {
  IdentityReport rep = verify_heine(kOnePoint, 1);
  rep.rows.front().pass = false;
  CHECK(!rep.all_pass());
  try {
    rep.require_pass();
    FAIL("no error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::IdentityViolated);
  }
}
