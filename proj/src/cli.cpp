#include "cubicstring/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>

#include "cubicstring/error.hpp"
#include "cubicstring/forward.hpp"
#include "cubicstring/io.hpp"

namespace cubicstring {

namespace {

Rational small_positive(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> num(1, 6), den(1, 4);
  const int p = num(rng);
  return Rational(p, den(rng));
}

int bits_of(const RunConfig &c) {
  return c.precision_bits > 0 ? c.precision_bits : default_precision_bits();
}

void emit(const RunConfig &c, std::ostream &out, const std::string &text) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f || !(f << text))
    throw Error(ErrorKind::Parse, "cannot write " + c.output);
}

int run_forward(const RunConfig &c, std::ostream &out) {
  const CubicString s = string_from_json(read_json_file(c.input));
  validate(s);
  const int bits = bits_of(c);
  const auto w = residues(spectrum(s, pow2(-bits)), bits);
  emit(c, out, spectral_to_json(w, conserved(s).M).dump(2) + "\n");
  return 0;
}

int run_invert(const RunConfig &c, std::ostream &out) {
  const SpectralData sd = spectral_from_json(read_json_file(c.input));
  const Recovery r = recover_with_audit(sd);
  Json j = string_to_json(r.string);
  if (c.report_determinants)
    j["audit"] = audit_to_json(r.audit);
  emit(c, out, j.dump(2) + "\n");
  return 0;
}

int run_roundtrip(const RunConfig &c, std::ostream &out, std::ostream &err) {
  const SpectralData sd = random_spectral(c.n, c.seed);
  const auto bad = roundtrip_mismatches(sd);
  if (!bad.empty()) {
    err << "roundtrip failed for " << spectral_to_json(sd).dump() << '\n';
    for (const auto &line : bad)
      err << "  " << line << '\n';
    return 1;
  }
  emit(c, out, "exact roundtrip OK\n");
  return 0;
}

int run_evolve(const RunConfig &c, std::ostream &out) {
  const CubicString s = string_from_json(read_json_file(c.input));
  validate(s);
  const WaveState s0 = to_wave_state(s, 0.0);
  const auto times = sample_times(c.t_end, c.samples);
  Trajectory traj;
  if (c.method == "rk4")
    traj = integrate_rk4(s0, c.dt, times);
  else if (c.method == "spectral")
    traj = evolve_spectral(s0, times, bits_of(c)).trajectory;
  else
    throw Error(ErrorKind::Parse, "unknown method " + c.method);
  emit(c, out, trajectory_csv(traj));
  return 0;
}

int run_verify(const RunConfig &c, std::ostream &out, std::ostream &err) {
  if (c.suite != "heine")
    throw Error(ErrorKind::Parse, "unknown suite " + c.suite);
  const DiscreteMeasure mu = random_measure(c.support, c.seed);
  const IdentityReport rep = verify_all(mu, c.k_max);
  Json j;
  j["suite"] = c.suite;
  j["support"] = c.support;
  j["seed"] = c.seed;
  Json measure;
  Json pts = Json::array(), wts = Json::array();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    pts.push_back(rational_to_json(mu.points[i]));
    wts.push_back(rational_to_json(mu.weights[i]));
  }
  measure["points"] = pts;
  measure["weights"] = wts;
  j["measure"] = measure;
  j.update(report_to_json(rep));
  emit(c, out, j.dump(2) + "\n");
  if (!rep.all_pass()) {
    err << "identity check failed\n";
    return 1;
  }
  return 0;
}

} // namespace

SpectralData random_spectral(int n, std::uint64_t seed) {
  if (n < 1)
    throw Error(ErrorKind::IndexOutOfRange, "n must be at least 1");
  std::mt19937_64 rng(seed);
  SpectralData sd;
  Rational lambda(0);
  for (int k = 1; k < n; ++k) {
    lambda += small_positive(rng);
    sd.lambdas.push_back(lambda);
    sd.b.push_back(-small_positive(rng));
  }
  sd.M = small_positive(rng);
  return sd;
}

CubicString random_string(int n, std::uint64_t seed) {
  if (n < 1)
    throw Error(ErrorKind::IndexOutOfRange, "n must be at least 1");
  std::mt19937_64 rng(seed);
  CubicString s;
  for (int k = 0; k < n; ++k)
    s.masses.push_back(small_positive(rng));
  for (int k = 1; k < n; ++k)
    s.gaps.push_back(small_positive(rng));
  return s;
}

DiscreteMeasure random_measure(int support, std::uint64_t seed) {
  if (support < 1)
    throw Error(ErrorKind::IndexOutOfRange, "support must be at least 1");
  std::mt19937_64 rng(seed);
  DiscreteMeasure mu;
  Rational x(0);
  for (int k = 0; k < support; ++k) {
    x += small_positive(rng);
    mu.points.push_back(x);
    mu.weights.push_back(-small_positive(rng));
  }
  return mu;
}

std::vector<std::string> roundtrip_mismatches(const SpectralData &sd) {
  std::vector<std::string> bad;
  const CubicString s = recover(sd);
  const auto w = residues(spectrum(s));
  if (conserved(s).M != sd.M)
    bad.push_back("total mass " + format_rational(conserved(s).M));
  if (!w.all_exact()) {
    bad.push_back("spectrum of the recovered string is not exact");
    return bad;
  }
  if (w.exact_lambdas() != sd.lambdas)
    bad.push_back("eigenvalues differ");
  if (w.exact_b() != sd.b)
    bad.push_back("residues differ");
  RationalPolynomial expected =
      RationalPolynomial::monomial(Rational(-2) * sd.M, 1);
  for (const auto &lam : sd.lambdas)
    expected *= RationalPolynomial{Rational(1), Rational(-1) / lam};
  if (w.A != expected)
    bad.push_back("A(z) is not -2Mz prod(1 - z/lambda)");
  return bad;
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
  try {
    switch (config.command) {
    case Command::Forward:
      return run_forward(config, out);
    case Command::Invert:
      return run_invert(config, out);
    case Command::Roundtrip:
      return run_roundtrip(config, out, err);
    case Command::Evolve:
      return run_evolve(config, out);
    case Command::Verify:
      return run_verify(config, out, err);
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Parse ? 2 : 1;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

} // namespace cubicstring
