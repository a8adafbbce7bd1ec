// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "ellft/report.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ellft/char_sums.hpp"
#include "ellft/errors.hpp"

namespace ellft {

namespace {

using json = nlohmann::ordered_json;

// Reports carry 12 significant digits; the round trip through a double
// keeps the serialized form byte-stable across runs.
double report_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

json place_to_json(const Place& v) {
  if (v.is_infinite()) return json("inf");
  json coeffs = json::array();
  for (int i = 0; i <= v.poly().degree(); ++i)
    coeffs.push_back(v.poly().coeff(i).to_integer());
  return coeffs;
}

json conductor_to_json(const RankReport& r) {
  json entries = json::array();
  for (const auto& rd : r.bad_places) {
    if (rd.f < 1) continue;
    entries.push_back(json{{"place", place_to_json(rd.place)},
                           {"degree", rd.place.degree()},
                           {"kodaira", kodaira_symbol(rd.type, rd.n)},
                           {"f", rd.f}});
  }
  return json{{"entries", entries}, {"degree", r.conductor.degree}};
}

json checks_to_json(const RankChecks& c) {
  return json{{"fe_ok", c.fe_ok},
              {"rh_ok", c.rh_ok},
              {"truncation_ok", c.truncation_ok},
              {"hasse_ok", c.hasse_ok},
              {"rank_match", c.rank_match},
              {"bound_ok", c.bound_ok},
              {"conductor_degree_match", c.conductor_degree_match}};
}

json report_to_json(const RankReport& r) {
  json coeffs = json::array();
  for (const auto& c : r.L.coeffs) coeffs.push_back(c.str());
  return json{
      {"params",
       json{{"p", r.params.p}, {"q", r.params.q}, {"d", r.params.d}}},
      {"conductor", conductor_to_json(r)},
      {"l_polynomial",
       json{{"q", r.L.q}, {"coeffs", coeffs}, {"degree", r.L.degree}}},
      {"sign", r.sign},
      {"analytic_rank", r.analytic_rank},
      {"formula_rank", r.formula_rank},
      {"leading",
       json{{"num", boost::multiprecision::numerator(r.leading).str()},
            {"den", boost::multiprecision::denominator(r.leading).str()}}},
      {"bounds", json{{"geometric", r.geom_bound},
                      {"brumer_main", report_double(r.brumer.main)},
                      {"brumer_full", report_double(r.brumer.full)},
                      {"C", report_double(r.brumer.C)}}},
      {"ratios", json{{"geom", report_double(r.ratio_geom)},
                      {"brumer_main", report_double(r.ratio_brumer_main)}}},
      {"checks", checks_to_json(r.checks)}};
}

}  // namespace

std::string render_report_json(const RankReport& r) {
  return report_to_json(r).dump(2) + "\n";
}

std::string render_report_text(const RankReport& r) {
  std::ostringstream os;
  os << "curve: y^2 + xy = x^3 - t^" << r.params.d << " over F_" << r.params.q
     << "(t)   [p = " << r.params.p << ", n = " << r.params.n_exp << "]\n";
  os << "conductor: degree " << r.conductor.degree << "\n";
  for (const auto& rd : r.bad_places) {
    if (rd.f < 1) continue;
    os << "  " << rd.place.to_string() << "  deg " << rd.place.degree()
       << "  " << kodaira_symbol(rd.type, rd.n) << "  f = " << rd.f;
    if (rd.multiplicative())
      os << (rd.split == SplitType::kSplit ? "  split" : "  non-split");
    os << "\n";
  }
  os << "L(T), T = q^(-s), degree " << r.L.degree << ":";
  for (const auto& c : r.L.coeffs) os << " " << c.str();
  os << "\n";
  os << "functional equation sign: "
     << (r.sign > 0 ? "+1" : r.sign < 0 ? "-1" : "none") << "\n";
  os << "analytic rank: " << r.analytic_rank
     << "   formula rank: " << r.formula_rank << "\n";
  os << "leading R(1/q): "
     << boost::multiprecision::numerator(r.leading).str() << "/"
     << boost::multiprecision::denominator(r.leading).str()
     << "   (times (ln q)^" << r.analytic_rank
     << " for the Taylor coefficient at s = 1)\n";
  os << "bounds: geometric " << r.geom_bound << ", Brumer main "
     << format_double(r.brumer.main) << ", Brumer full "
     << format_double(r.brumer.full) << " (C = " << format_double(r.brumer.C)
     << ")\n";
  os << "sharpness ratios: rank/geometric " << format_double(r.ratio_geom)
     << ", rank/brumer-main " << format_double(r.ratio_brumer_main) << "\n";
  const auto& c = r.checks;
  os << "checks: fe " << (c.fe_ok ? "ok" : "FAIL") << ", rh "
     << (c.rh_ok ? "ok" : "FAIL") << ", truncation "
     << (c.truncation_ok ? "ok" : "FAIL") << ", hasse "
     << (c.hasse_ok ? "ok" : "FAIL") << ", rank-match "
     << (c.rank_match ? "ok" : "FAIL") << ", bound "
     << (c.bound_ok ? "ok" : "FAIL") << ", conductor-degree "
     << (c.conductor_degree_match ? "ok" : "mismatch") << "\n";
  return os.str();
}

std::string csv_header() {
  return "p,q,d,n_exp,conductor_degree,l_degree,sign,analytic_rank,"
         "formula_rank,leading_num,leading_den,geometric_bound,brumer_main,"
         "brumer_full,brumer_C,ratio_geom,ratio_brumer_main,fe_ok,rh_ok,"
         "truncation_ok,hasse_ok,rank_match,bound_ok,conductor_degree_match";
}

std::string render_report_csv_row(const RankReport& r) {
  std::ostringstream os;
  const auto& c = r.checks;
  os << r.params.p << "," << r.params.q << "," << r.params.d << ","
     << r.params.n_exp << "," << r.conductor.degree << "," << r.L.degree
     << "," << r.sign << "," << r.analytic_rank << "," << r.formula_rank
     << "," << boost::multiprecision::numerator(r.leading).str() << ","
     << boost::multiprecision::denominator(r.leading).str() << ","
     << r.geom_bound << "," << format_double(r.brumer.main) << ","
     << format_double(r.brumer.full) << "," << format_double(r.brumer.C)
     << "," << format_double(r.ratio_geom) << ","
     << format_double(r.ratio_brumer_main) << "," << c.fe_ok << ","
     << c.rh_ok << "," << c.truncation_ok << "," << c.hasse_ok << ","
     << c.rank_match << "," << c.bound_ok << ","
     << c.conductor_degree_match;
  return os.str();
}

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw UsageError(message);
}

RankReport make_report(const RunConfig& cfg) {
  require(cfg.p >= 2, "analyze: --p must be a prime >= 2");
  require(cfg.q >= 2, "analyze: --q must be a power of p");
  require(cfg.d >= 1, "analyze: --d must be >= 1");
  require(cfg.extra_coeffs >= 0, "--extra-coeffs must be >= 0");
  require(cfg.tolerance > 0, "--tolerance must be > 0");
  const int n = infer_family_exponent(cfg.p, cfg.d);
  require(n >= 1, "analyze: --d must divide p^n + 1 for some n");
  FamilyParams fp;
  try {
    fp = make_family_params(cfg.p, n, cfg.d, cfg.q);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return rank_report(fp, cfg.extra_coeffs, cfg.tolerance, cfg.brumer_C,
                     cfg.threads, cfg.seed);
}

std::string render_by_format(const RunConfig& cfg,
                             const std::vector<RankReport>& reports,
                             bool always_array) {
  if (cfg.format == "json") {
    if (reports.size() == 1 && !always_array)
      return render_report_json(reports[0]);
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr.dump(2) + "\n";
  }
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << csv_header() << "\n";
    for (const auto& r : reports) os << render_report_csv_row(r) << "\n";
    return os.str();
  }
  require(cfg.format == "text", "--format must be json, csv or text");
  std::ostringstream os;
  for (size_t i = 0; i < reports.size(); ++i) {
    if (i) os << "\n";
    os << render_report_text(reports[i]);
  }
  return os.str();
}

}  // namespace

RunOutput run_analyze(const RunConfig& cfg) {
  const RankReport r = make_report(cfg);
  return RunOutput{render_by_format(cfg, {r}, false), r.passes() ? 0 : 1};
}

RunOutput run_bounds(const RunConfig& cfg) {
  const RankReport r = make_report(cfg);
  std::string payload;
  if (cfg.format == "json") {
    json out{
        {"params",
         json{{"p", r.params.p}, {"q", r.params.q}, {"d", r.params.d}}},
        {"conductor_degree", r.conductor.degree},
        {"analytic_rank", r.analytic_rank},
        {"formula_rank", r.formula_rank},
        {"bounds", json{{"geometric", r.geom_bound},
                        {"brumer_main", report_double(r.brumer.main)},
                        {"brumer_full", report_double(r.brumer.full)},
                        {"C", report_double(r.brumer.C)}}},
        {"ratios", json{{"geom", report_double(r.ratio_geom)},
                        {"brumer_main", report_double(r.ratio_brumer_main)}}}};
    payload = out.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "d = " << r.params.d << " over F_" << r.params.q
       << ": conductor degree " << r.conductor.degree << ", analytic rank "
       << r.analytic_rank << "\n";
    os << "  geometric bound " << r.geom_bound << "  (rank/bound = "
       << format_double(r.ratio_geom) << ")\n";
    os << "  Brumer main term " << format_double(r.brumer.main)
       << "  (rank/main = " << format_double(r.ratio_brumer_main) << ")\n";
    os << "  Brumer full bound " << format_double(r.brumer.full)
       << "  at C = " << format_double(r.brumer.C) << "\n";
    payload = os.str();
  }
  return RunOutput{payload, r.passes() ? 0 : 1};
}

RunOutput run_family(const RunConfig& cfg) {
  require(cfg.p >= 2, "family: --p must be a prime >= 2");
  require(cfg.q >= 2, "family: --q must be a power of p");
  require(cfg.d_max >= 1, "family: --d-max must be >= 1");
  std::vector<RankReport> reports;
  for (std::int64_t d = 1; d <= cfg.d_max; ++d) {
    if (infer_family_exponent(cfg.p, d) < 1) continue;
    RunConfig one = cfg;
    one.d = d;
    reports.push_back(make_report(one));
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passes();
  return RunOutput{render_by_format(cfg, reports, true), ok ? 0 : 1};
}

RunOutput run_gauss(const RunConfig& cfg) {
  require(cfg.p >= 2, "gauss: --p must be a prime >= 2");
  require(cfg.n >= 1, "gauss: --n must be >= 1");
  require(cfg.d >= 2, "gauss: --d must be >= 2");
  std::int64_t pn = 1;
  for (int i = 0; i < cfg.n; ++i) pn *= cfg.p;
  require((pn + 1) % cfg.d == 0, "gauss: --d must divide p^n + 1");

  const FiniteField& field = make_field(cfg.p, 2 * cfg.n);
  bool all_pure = true;
  json pairs = json::array();
  std::ostringstream text;
  for (std::int64_t i = 1; i < cfg.d; ++i) {
    for (std::int64_t j = 1; j < cfg.d; ++j) {
      if ((i + j) % cfg.d == 0) continue;
      const MultiplicativeCharacter chi1(field, cfg.d, i);
      const MultiplicativeCharacter chi2(field, cfg.d, j);
      const CyclotomicInt J = jacobi_sum_exact(chi1, chi2);
      const bool pure = purity_check(J, cfg.p, cfg.n);
      all_pure = all_pure && pure;
      pairs.push_back(json{{"i", i}, {"j", j}, {"pure", pure}});
      text << "chi_" << i << " x chi_" << j << ": "
           << (pure ? "pure" : "IMPURE") << "\n";
    }
  }
  std::string payload;
  if (cfg.format == "json") {
    json out{{"params",
              json{{"p", cfg.p}, {"n", cfg.n}, {"d", cfg.d},
                   {"field", field.size()}}},
             {"pairs", pairs},
             {"all_pure", all_pure}};
    payload = out.dump(2) + "\n";
  } else {
    text << (all_pure ? "all pure" : "IMPURE PAIRS FOUND") << "\n";
    payload = text.str();
  }
  return RunOutput{payload, all_pure ? 0 : 1};
}

RunOutput run(const RunConfig& cfg) {
  if (cfg.subcommand == "analyze") return run_analyze(cfg);
  if (cfg.subcommand == "family") return run_family(cfg);
  if (cfg.subcommand == "bounds") return run_bounds(cfg);
  if (cfg.subcommand == "gauss") return run_gauss(cfg);
  throw UsageError("unknown subcommand: " + cfg.subcommand);
}

}  // namespace ellft
