#pragma once

#include <vector>

#include "cubicstring/inverse.hpp"
#include "cubicstring/string_model.hpp"

namespace cubicstring {

/// Piecewise-linear wave u(x, t) = sum m_k |x - x_k| at one instant.
struct WaveState {
  double time = 0;
  std::vector<double> positions; ///< strictly increasing
  std::vector<double> momenta;   ///< positive
};

/// Throws Error(OrderingViolated) for non-increasing positions, non-positive
/// momenta or mismatched lengths.
void validate(const WaveState &s);

struct WaveDerivative {
  std::vector<double> dx;
  std::vector<double> dm;
};

/// x_k' = sum_i m_i |x_k - x_i|, m_k' = 2 m_k sum_i m_i sgn(i - k).
WaveDerivative rhs(const WaveState &s);

struct TrajectorySample {
  WaveState state;
  ConservedQuantities<double> conserved;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
};

/// 0, t_end/N, 2 t_end/N, ..., t_end.
std::vector<double> sample_times(double t_end, int samples);

/// Classical RK4 with step at most dt between consecutive sample times,
/// checking the ordering guard after every step.
Trajectory integrate_rk4(const WaveState &s0, double dt,
                         const std::vector<double> &times);
Trajectory integrate_rk4(const WaveState &s0, double dt, double t_end,
                         int samples);

/// Exact string for a float state: every double is taken at its exact
/// binary value and the anchor is the right-most position.
CubicString to_string_model(const WaveState &s);
WaveState to_wave_state(const CubicString &s, double time);

struct SpectralTrajectory {
  Trajectory trajectory;
  std::vector<SpectralData> spectral; ///< evolved data at each sample
  std::vector<Interval> lambda_enclosures;
};

/// Isospectral route: eigenvalues and M stay fixed, b_k(t) = b_k(0) e^{M t},
/// the string is recovered exactly from the evolved data and translated so
/// that sum m_k x_k keeps its initial value. Throws Error(PrecisionExhausted)
/// when the residue signs cannot be certified at `precision_bits`.
SpectralTrajectory evolve_spectral(const WaveState &s0,
                                   const std::vector<double> &times,
                                   int precision_bits);

} // namespace cubicstring
