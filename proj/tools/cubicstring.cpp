#include <iostream>

#include <CLI11.hpp>

#include "cubicstring/cli.hpp"

int main(int argc, char **argv) {
  using cubicstring::Command;
  cubicstring::RunConfig cfg;
  CLI::App app{"Forward and inverse spectral maps of the discrete cubic string"};
  app.require_subcommand(1);

  auto *fwd = app.add_subcommand("forward", "string JSON -> spectral JSON");
  fwd->add_option("input", cfg.input, "string JSON file")->required();
  fwd->add_option("--precision-bits", cfg.precision_bits,
                  "enclosure width 2^-bits for irrational eigenvalues");

  auto *inv = app.add_subcommand("invert", "exact spectral JSON -> string JSON");
  inv->add_option("input", cfg.input, "spectral JSON file")->required();
  inv->add_flag("--report-determinants", cfg.report_determinants,
                "include the determinant family and recovery-formula audit");

  auto *rt = app.add_subcommand("roundtrip", "random spectral data -> string -> spectral data");
  rt->add_option("--n", cfg.n, "number of masses")->check(CLI::PositiveNumber);
  rt->add_option("--seed", cfg.seed);

  auto *ev = app.add_subcommand("evolve", "derivative Burgers evolution as CSV");
  ev->add_option("input", cfg.input, "initial string JSON file")->required();
  ev->add_option("--method", cfg.method)->check(CLI::IsMember({"rk4", "spectral"}));
  ev->add_option("--dt", cfg.dt)->check(CLI::PositiveNumber);
  ev->add_option("--t-end", cfg.t_end)->check(CLI::NonNegativeNumber);
  ev->add_option("--samples", cfg.samples)->check(CLI::PositiveNumber);
  ev->add_option("--precision-bits", cfg.precision_bits);

  auto *ver = app.add_subcommand("verify", "check determinant identities on a random measure");
  ver->add_option("--suite", cfg.suite)->check(CLI::IsMember({"heine"}));
  ver->add_option("--support", cfg.support)->check(CLI::Range(1, 6));
  ver->add_option("--k-max", cfg.k_max)->check(CLI::Range(1, 6));
  ver->add_option("--seed", cfg.seed);

  for (auto *sub : {fwd, inv, ev})
    sub->add_option("-o,--output", cfg.output, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (fwd->parsed())
    cfg.command = Command::Forward;
  else if (inv->parsed())
    cfg.command = Command::Invert;
  else if (rt->parsed())
    cfg.command = Command::Roundtrip;
  else if (ev->parsed())
    cfg.command = Command::Evolve;
  else
    cfg.command = Command::Verify;
  return cubicstring::run(cfg, std::cout, std::cerr);
}
