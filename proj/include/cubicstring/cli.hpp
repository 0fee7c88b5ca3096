#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cubicstring/heine.hpp"
#include "cubicstring/inverse.hpp"
#include "cubicstring/string_model.hpp"

namespace cubicstring {

enum class Command { Forward, Invert, Roundtrip, Evolve, Verify };

struct RunConfig {
  Command command = Command::Forward;
  std::string input;  ///< JSON file; forward, invert and evolve
  std::string output; ///< empty writes to the output stream
  std::uint64_t seed = 0;
  int n = 3;
  int precision_bits = 0; ///< 0 picks default_precision_bits()
  std::string suite = "heine";
  std::string method = "rk4";
  double dt = 1e-3;
  double t_end = 1.0;
  int samples = 10;
  int support = 3;
  int k_max = 3;
  bool report_determinants = false;
};

/// Exit code 0 on success, 1 on a validation failure or violated identity,
/// 2 on an I/O or parse error. Diagnostics go to `err`.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Small-height random data, deterministic in the seed.
SpectralData random_spectral(int n, std::uint64_t seed);
CubicString random_string(int n, std::uint64_t seed);
/// Increasing positive support and negative weights.
DiscreteMeasure random_measure(int support, std::uint64_t seed);

/// Recover, run the forward map on the result and compare with the input
/// exactly. Returns one line per discrepancy; empty means the roundtrip holds.
std::vector<std::string> roundtrip_mismatches(const SpectralData &sd);

} // namespace cubicstring
