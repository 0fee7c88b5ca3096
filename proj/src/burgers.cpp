#include "cubicstring/burgers.hpp"

#include <cmath>
#include <string>

#include "cubicstring/error.hpp"
#include "cubicstring/forward.hpp"

namespace cubicstring {

namespace {

ConservedQuantities<double> float_conserved(const WaveState &s) {
  return conserved_quantities<double>(s.positions, s.momenta);
}

WaveState axpy(const WaveState &s, double h, const WaveDerivative &d) {
  WaveState r = s;
  for (std::size_t k = 0; k < s.positions.size(); ++k) {
    r.positions[k] += h * d.dx[k];
    r.momenta[k] += h * d.dm[k];
  }
  return r;
}

WaveState rk4_step(const WaveState &s, double h) {
  const auto k1 = rhs(s);
  const auto k2 = rhs(axpy(s, h / 2, k1));
  const auto k3 = rhs(axpy(s, h / 2, k2));
  const auto k4 = rhs(axpy(s, h, k3));
  WaveState r = s;
  for (std::size_t k = 0; k < s.positions.size(); ++k) {
    r.positions[k] +=
        h / 6 * (k1.dx[k] + 2 * k2.dx[k] + 2 * k3.dx[k] + k4.dx[k]);
    r.momenta[k] += h / 6 * (k1.dm[k] + 2 * k2.dm[k] + 2 * k3.dm[k] + k4.dm[k]);
  }
  r.time = s.time + h;
  return r;
}

} // namespace

void validate(const WaveState &s) {
  if (s.positions.size() != s.momenta.size() || s.positions.empty())
    throw Error(ErrorKind::OrderingViolated,
                "positions and momenta must be non-empty and of equal length");
  for (std::size_t k = 0; k < s.positions.size(); ++k) {
    if (!(s.momenta[k] > 0))
      throw Error(ErrorKind::OrderingViolated,
                  "momentum m_" + std::to_string(k + 1) + " is not positive");
    if (k > 0 && !(s.positions[k] > s.positions[k - 1]))
      throw Error(ErrorKind::OrderingViolated,
                  "positions collide at x_" + std::to_string(k + 1));
  }
}

WaveDerivative rhs(const WaveState &s) {
  validate(s);
  const std::size_t n = s.positions.size();
  WaveDerivative d{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  for (std::size_t k = 0; k < n; ++k) {
    double below = 0, above = 0;
    for (std::size_t i = 0; i < n; ++i) {
      d.dx[k] += s.momenta[i] * std::abs(s.positions[k] - s.positions[i]);
      if (i < k)
        below += s.momenta[i];
      else if (i > k)
        above += s.momenta[i];
    }
    d.dm[k] = 2 * s.momenta[k] * (above - below);
  }
  return d;
}

std::vector<double> sample_times(double t_end, int samples) {
  if (samples < 1 || !(t_end >= 0))
    throw Error(ErrorKind::IndexOutOfRange, "need samples >= 1 and t_end >= 0");
  std::vector<double> t;
  for (int i = 0; i <= samples; ++i)
    t.push_back(t_end * i / samples);
  return t;
}

Trajectory integrate_rk4(const WaveState &s0, double dt,
                         const std::vector<double> &times) {
  validate(s0);
  if (!(dt > 0))
    throw Error(ErrorKind::IndexOutOfRange, "dt must be positive");
  Trajectory traj;
  WaveState s = s0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (i > 0 && !(times[i] > times[i - 1]))
      throw Error(ErrorKind::IndexOutOfRange, "sample times must increase");
    const double span = times[i] - s.time;
    if (span < 0)
      throw Error(ErrorKind::IndexOutOfRange, "sample time before the start");
    if (span > 0) {
      const auto steps = static_cast<long>(std::ceil(span / dt - 1e-9));
      const double h = span / static_cast<double>(steps);
      const double start = s.time;
      for (long j = 1; j <= steps; ++j) {
        s = rk4_step(s, h);
        validate(s);
        s.time = start + h * static_cast<double>(j);
      }
      s.time = times[i];
    }
    traj.samples.push_back({s, float_conserved(s)});
  }
  return traj;
}

Trajectory integrate_rk4(const WaveState &s0, double dt, double t_end,
                         int samples) {
  return integrate_rk4(s0, dt, sample_times(t_end, samples));
}

CubicString to_string_model(const WaveState &s) {
  validate(s);
  CubicString out;
  for (double m : s.momenta)
    out.masses.push_back(from_double(m));
  for (std::size_t k = 1; k < s.positions.size(); ++k)
    out.gaps.push_back(from_double(s.positions[k]) -
                       from_double(s.positions[k - 1]));
  out.anchor = from_double(s.positions.back());
  return out;
}

WaveState to_wave_state(const CubicString &s, double time) {
  WaveState w;
  w.time = time;
  for (const auto &x : positions(s))
    w.positions.push_back(to_double(x));
  for (const auto &m : s.masses)
    w.momenta.push_back(to_double(m));
  return w;
}

SpectralTrajectory evolve_spectral(const WaveState &s0,
                                   const std::vector<double> &times,
                                   int precision_bits) {
  const CubicString s = to_string_model(s0);
  const auto w = residues(spectrum(s, pow2(-precision_bits)), precision_bits);
  const ConservedSet c0 = conserved(s);

  SpectralData base;
  base.M = c0.M;
  for (std::size_t k = 0; k < w.lambdas.size(); ++k) {
    base.lambdas.push_back(w.lambdas[k].mid());
    base.b.push_back(w.b_res[k].mid());
  }
  const double mass = to_double(c0.M);

  SpectralTrajectory out;
  out.lambda_enclosures = w.lambdas;
  for (double t : times) {
    SpectralData sd = base;
    const Rational scale = from_double(std::exp(mass * (t - s0.time)));
    for (auto &b : sd.b)
      b *= scale;
    CubicString r = recover(sd);
    // recovery puts x_n at 0; shift so that sum m_k x_k is unchanged
    Rational weighted(0);
    const auto rel = positions(r);
    for (std::size_t k = 0; k < rel.size(); ++k)
      weighted += r.masses[k] * rel[k];
    r.anchor = (c0.M_plus - weighted) / c0.M;
    const WaveState ws = to_wave_state(r, t);
    out.trajectory.samples.push_back({ws, float_conserved(ws)});
    out.spectral.push_back(std::move(sd));
  }
  return out;
}

} // namespace cubicstring
