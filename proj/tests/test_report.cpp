// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "ellft/report.hpp"

using namespace ellft;
using json = nlohmann::json;

namespace {

RunConfig analyze_config(std::int64_t p, std::int64_t q, std::int64_t d) {
  RunConfig cfg;
  cfg.subcommand = "analyze";
  cfg.p = p;
  cfg.q = q;
  cfg.d = d;
  cfg.format = "json";
  return cfg;
}

}  // namespace

TEST_CASE("json schema keys and value conventions") {
  RunConfig cfg = analyze_config(2, 2, 3);
  const RunOutput out = run(cfg);
  CHECK(out.exit_code == 0);
  const json j = json::parse(out.report);

  for (const char* key :
       {"params", "conductor", "l_polynomial", "sign", "analytic_rank",
        "formula_rank", "leading", "bounds", "ratios", "checks"})
    CHECK(j.contains(key));

  CHECK(j["params"]["p"] == 2);
  CHECK(j["params"]["q"] == 2);
  CHECK(j["params"]["d"] == 3);

  // coefficients are decimal strings
  CHECK(j["l_polynomial"]["degree"] == 2);
  CHECK(j["l_polynomial"]["coeffs"] ==
        json::array({"1", "0", "-4"}));
  CHECK(j["leading"]["num"] == "2");
  CHECK(j["leading"]["den"] == "1");
  CHECK(j["sign"] == -1);

  // finite place: full coefficient list low-to-high; infinity: "inf"
  const auto& entries = j["conductor"]["entries"];
  REQUIRE(entries.size() == 2);
  CHECK(entries[0]["place"] == json::array({0, 1}));
  CHECK(entries[0]["kodaira"] == "I3");
  CHECK(entries[1]["place"] == "inf");
  CHECK(entries[1]["kodaira"] == "I0*");
  CHECK(entries[1]["f"] == 5);
  CHECK(j["conductor"]["degree"] == 6);

  for (const char* key : {"fe_ok", "rh_ok", "truncation_ok", "hasse_ok",
                          "rank_match", "bound_ok", "conductor_degree_match"})
    CHECK(j["checks"][key] == true);
}

TEST_CASE("identical configs render byte-identical output") {
  RunConfig cfg = analyze_config(3, 3, 4);
  cfg.seed = 7;
  const RunOutput a = run(cfg);
  const RunOutput b = run(cfg);
  CHECK(a.report == b.report);
  CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("csv has the documented column count") {
  RunConfig cfg = analyze_config(2, 2, 3);
  cfg.format = "csv";
  const RunOutput out = run(cfg);
  const std::string header = csv_header();
  const auto count_cols = [](const std::string& s) {
    return 1 + std::count(s.begin(), s.end(), ',');
  };
  CHECK(count_cols(header) == 24);
  const auto eol = out.report.find('\n');
  CHECK(out.report.substr(0, eol) == header);
  const auto row = out.report.substr(eol + 1);
  CHECK(count_cols(row.substr(0, row.find('\n'))) == count_cols(header));
}

TEST_CASE("family sweep covers exactly the family divisors") {
  RunConfig cfg;
  cfg.subcommand = "family";
  cfg.p = 2;
  cfg.q = 2;
  cfg.d_max = 5;
  cfg.format = "json";
  const RunOutput out = run(cfg);
  CHECK(out.exit_code == 0);
  const json arr = json::parse(out.report);
  // d = 1, 3, 5 divide some 2^n + 1; d = 2, 4 never do
  REQUIRE(arr.size() == 3);
  CHECK(arr[0]["params"]["d"] == 1);
  CHECK(arr[1]["params"]["d"] == 3);
  CHECK(arr[2]["params"]["d"] == 5);
  // d = 1: rank 0 with L of degree 0
  CHECK(arr[0]["analytic_rank"] == 0);
  CHECK(arr[0]["formula_rank"] == 0);
}

TEST_CASE("bounds subcommand emits the comparison block") {
  RunConfig cfg = analyze_config(5, 5, 6);
  cfg.subcommand = "bounds";
  const RunOutput out = run(cfg);
  CHECK(out.exit_code == 0);
  const json j = json::parse(out.report);
  CHECK(j["analytic_rank"] == 2);
  CHECK(j["bounds"]["geometric"] == 3);
  CHECK(j["ratios"].contains("brumer_main"));
  CHECK_FALSE(j.contains("checks"));
}

TEST_CASE("gauss subcommand") {
  RunConfig cfg;
  cfg.subcommand = "gauss";
  cfg.p = 3;
  cfg.n = 1;
  cfg.d = 4;
  cfg.format = "json";
  const RunOutput out = run(cfg);
  CHECK(out.exit_code == 0);
  const json j = json::parse(out.report);
  CHECK(j["all_pure"] == true);
  CHECK(j["params"]["field"] == 9);
  // 3 x 3 index pairs minus the 3 with i + j = 0 mod 4
  CHECK(j["pairs"].size() == 6);
}

TEST_CASE("usage errors") {
  RunConfig cfg = analyze_config(4, 4, 3);  // p not prime
  CHECK_THROWS_AS(run(cfg), UsageError);
  cfg = analyze_config(2, 6, 3);  // q not a power of p
  CHECK_THROWS_AS(run(cfg), UsageError);
  cfg = analyze_config(2, 2, 4);  // 4 never divides 2^n + 1
  CHECK_THROWS_AS(run(cfg), UsageError);
  cfg = analyze_config(2, 2, 3);
  cfg.format = "yaml";
  CHECK_THROWS_AS(run(cfg), UsageError);
  cfg = analyze_config(2, 2, 3);
  cfg.subcommand = "explore";
  CHECK_THROWS_AS(run(cfg), UsageError);
}
