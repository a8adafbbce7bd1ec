// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFT_REPORT_HPP_
#define ELLFT_REPORT_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ellft/rank_theory.hpp"

namespace ellft {

// Bad flag combinations; the CLI maps these to exit code 2.
struct UsageError : std::invalid_argument {
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

struct RunConfig {
  std::string subcommand;  // analyze | family | bounds | gauss
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t d = 0;
  std::int64_t d_max = 0;  // family sweep
  int n = 0;               // gauss
  int extra_coeffs = 1;
  double tolerance = 1e-9;
  double brumer_C = 2.0;
  int threads = 0;  // 0: ELLFT_THREADS env or hardware count
  std::string format = "text";
  std::uint64_t seed = kDefaultFactorSeed;
  std::string out_path;
};

struct RunOutput {
  std::string report;  // primary output stream payload
  int exit_code = 0;   // 0 all checks pass, 1 check failure, 2 usage
};

std::string render_report_json(const RankReport& r);
std::string render_report_text(const RankReport& r);
std::string csv_header();
std::string render_report_csv_row(const RankReport& r);

/// Dispatches on config.subcommand.  Usage problems throw UsageError.
RunOutput run(const RunConfig& config);

RunOutput run_analyze(const RunConfig& config);
RunOutput run_family(const RunConfig& config);
RunOutput run_bounds(const RunConfig& config);
RunOutput run_gauss(const RunConfig& config);

}  // namespace ellft

#endif  // ELLFT_REPORT_HPP_
