#pragma once

#include <random>
#include <string_view>

#include "cubicstring/rational.hpp"

namespace testing_support {

using cubicstring::Rational;

inline Rational R(long p, long q = 1) { return Rational(p, q); }
inline Rational R(std::string_view s) { return cubicstring::parse_rational(s); }

inline Rational random_small(std::mt19937_64 &rng, int max_num = 9,
                             int max_den = 5) {
  std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
  const int p = num(rng);
  return Rational(p, den(rng));
}

} // namespace testing_support
