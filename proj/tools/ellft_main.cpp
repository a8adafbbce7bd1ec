// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ellft/errors.hpp"
#include "ellft/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "L-functions and analytic ranks of the curves y^2 + xy = x^3 - t^d "
      "over F_q(t)"};
  app.require_subcommand(1);

  ellft::RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--extra-coeffs", cfg.extra_coeffs,
                    "extra Euler-product coefficients checked past degree D")
        ->capture_default_str();
    sub->add_option("--tolerance", cfg.tolerance,
                    "numerical tolerance for the root-location check")
        ->capture_default_str();
    sub->add_option("--brumer-C", cfg.brumer_C,
                    "constant C in the secondary Brumer term")
        ->capture_default_str();
    sub->add_option("--threads", cfg.threads,
                    "worker threads (0: ELLFT_THREADS or hardware)")
        ->capture_default_str();
    sub->add_option("--format", cfg.format, "json, csv or text")
        ->capture_default_str();
    sub->add_option("--seed", cfg.seed,
                    "seed for randomized equal-degree splitting")
        ->capture_default_str();
    sub->add_option("--out", cfg.out_path, "also write the report here");
  };

  CLI::App* analyze =
      app.add_subcommand("analyze", "full report for one curve");
  analyze->add_option("--p", cfg.p, "characteristic (prime)")->required();
  analyze->add_option("--q", cfg.q, "constant field size (power of p)")
      ->required();
  analyze->add_option("--d", cfg.d, "exponent in y^2 + xy = x^3 - t^d")
      ->required();
  add_common(analyze);

  CLI::App* family = app.add_subcommand(
      "family", "sweep d over divisors of p^n + 1 up to --d-max");
  family->add_option("--p", cfg.p, "characteristic (prime)")->required();
  family->add_option("--q", cfg.q, "constant field size (power of p)")
      ->required();
  family->add_option("--d-max", cfg.d_max, "largest d included")->required();
  add_common(family);

  CLI::App* bounds =
      app.add_subcommand("bounds", "rank/bound comparison for one curve");
  bounds->add_option("--p", cfg.p, "characteristic (prime)")->required();
  bounds->add_option("--q", cfg.q, "constant field size (power of p)")
      ->required();
  bounds->add_option("--d", cfg.d, "exponent in y^2 + xy = x^3 - t^d")
      ->required();
  add_common(bounds);

  CLI::App* gauss = app.add_subcommand(
      "gauss", "Jacobi-sum purity suite over F_(p^2n) for order-d characters");
  gauss->add_option("--p", cfg.p, "characteristic (prime)")->required();
  gauss->add_option("--n", cfg.n, "half the extension exponent")->required();
  gauss->add_option("--d", cfg.d, "character order (divides p^n + 1)")
      ->required();
  add_common(gauss);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  for (CLI::App* sub : {analyze, family, bounds, gauss})
    if (sub->parsed()) cfg.subcommand = sub->get_name();

  try {
    const ellft::RunOutput out = ellft::run(cfg);
    std::cout << out.report;
    if (!cfg.out_path.empty()) {
      std::ofstream f(cfg.out_path, std::ios::binary);
      if (!f) {
        std::cerr << "cannot write " << cfg.out_path << "\n";
        return 2;
      }
      f << out.report;
    }
    return out.exit_code;
  } catch (const ellft::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
