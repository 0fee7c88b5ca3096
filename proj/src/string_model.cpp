#include "cubicstring/string_model.hpp"

#include <string>

#include "cubicstring/error.hpp"

namespace cubicstring {

void validate(const CubicString &s) {
  if (s.masses.empty())
    throw Error(ErrorKind::EmptyString, "a string needs at least one mass");
  if (s.gaps.size() + 1 != s.masses.size())
    throw Error(ErrorKind::IndexOutOfRange,
                "expected " + std::to_string(s.masses.size() - 1) +
                    " gaps, got " + std::to_string(s.gaps.size()));
  for (std::size_t k = 0; k < s.masses.size(); ++k)
    if (s.masses[k] <= 0)
      throw Error(ErrorKind::NonPositiveMass,
                  "m_" + std::to_string(k + 1) + " = " +
                      format_rational(s.masses[k]));
  for (std::size_t k = 0; k < s.gaps.size(); ++k)
    if (s.gaps[k] <= 0)
      throw Error(ErrorKind::NonPositiveGap,
                  "l_" + std::to_string(k + 1) + " = " +
                      format_rational(s.gaps[k]));
}

std::vector<Rational> positions(const CubicString &s) {
  std::vector<Rational> x(s.masses.size());
  if (x.empty())
    return x;
  x.back() = s.anchor;
  for (std::size_t k = x.size() - 1; k-- > 0;)
    x[k] = x[k + 1] - s.gaps[k];
  return x;
}

ConservedSet conserved(const CubicString &s) {
  const auto x = positions(s);
  return conserved_quantities<Rational>(x, s.masses);
}

} // namespace cubicstring
