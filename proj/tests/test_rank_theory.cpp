// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ellft/rank_theory.hpp"

using namespace ellft;

TEST_CASE("family curve construction") {
  const FiniteField& f5 = make_field(5, 1);
  const Curve c = family_curve(f5, 6);
  CHECK(c.a1() == RationalFunction(Poly::from_ints(f5, {1})));
  CHECK(c.a2().is_zero());
  CHECK(c.a3().is_zero());
  CHECK(c.a4().is_zero());
  CHECK(c.a6() ==
        RationalFunction(Poly::constant(f5.from_int(-1)) *
                         Poly::monomial(f5, 6)));
  CHECK(is_nonisotrivial(c));

  // -1 = 1 in characteristic 2
  const FiniteField& f2 = make_field(2, 1);
  CHECK(family_curve(f2, 3).a6() ==
        RationalFunction(Poly::monomial(f2, 3)));
  CHECK(is_nonisotrivial(family_curve(f2, 3)));
}

TEST_CASE("theorem_rank pinned evaluations") {
  CHECK(theorem_rank(make_family_params(3, 1, 4, 9)) == 3);
  CHECK(theorem_rank(make_family_params(5, 1, 6, 5)) == 2);
  CHECK(theorem_rank(make_family_params(3, 2, 10, 3)) == 2);
  CHECK(theorem_rank(make_family_params(2, 1, 3, 2)) == 1);
  CHECK(theorem_rank(make_family_params(2, 2, 5, 2)) == 1);
  CHECK(theorem_rank(make_family_params(3, 1, 4, 3)) == 1);
  CHECK(theorem_rank(make_family_params(3, 2, 10, 9)) == 5);
  CHECK(theorem_rank(make_family_params(3, 2, 10, 81)) == 9);  // = d - 1
}

TEST_CASE("family params validation") {
  CHECK_THROWS_AS(make_family_params(4, 1, 5, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_family_params(3, 1, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_family_params(3, 1, 4, 6), std::invalid_argument);
  CHECK_THROWS_AS(make_family_params(3, 1, 4, 1), std::invalid_argument);
  CHECK(infer_family_exponent(3, 10) == 2);
  CHECK(infer_family_exponent(2, 5) == 2);
  CHECK(infer_family_exponent(3, 7) == 3);   // 3^3 + 1 = 28
  CHECK(infer_family_exponent(2, 8) == 0);   // 2^n + 1 is odd
  CHECK(infer_family_exponent(7, 1) == 1);
}

TEST_CASE("rank identities at d = p^n + 1 for all p^n <= 32") {
  for (const auto& [p, n] : std::vector<std::pair<std::int64_t, int>>{
           {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5},
           {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2},
           {7, 1}, {11, 1}, {13, 1}, {17, 1}, {19, 1},
           {23, 1}, {29, 1}, {31, 1}}) {
    std::int64_t pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    const std::int64_t d = pn + 1;
    const std::int64_t rank_p = theorem_rank(make_family_params(p, n, d, p));

    // Over F_p(t) the formula value is (p^n - 1)/(2n)-ish; for p = 11, 23
    // (p = 11 mod 12, n = 1) every o_e is 2 and only the 3-part correction
    // fires, which lands exactly one below (p - 1)/2.  The analytic ranks
    // computed from scratch at (11, 11, 6) and (11, 11, 4) pin the
    // correction terms, so these are the true ranks.
    if (n == 1 && p % 12 == 11) {
      CHECK(2 * rank_p == pn - 3);
    } else {
      CHECK(2 * n * rank_p >= pn - 1);
    }

    // over F_(p^2n)(t): rank = d - 1, or d - 3 when 6 | d
    std::int64_t q2n = 1;
    bool in_range = true;
    for (int i = 0; i < 2 * n; ++i) {
      q2n *= p;
      if (q2n > (std::int64_t{1} << 40)) in_range = false;
    }
    if (!in_range) continue;
    const std::int64_t rank_big =
        theorem_rank(make_family_params(p, n, d, q2n));
    CHECK(rank_big == (d % 6 == 0 ? d - 3 : d - 1));
  }
}

TEST_CASE("rank is monotone under constant-field extension") {
  // theorem_rank(q) <= theorem_rank(q^k): extensions of the same base
  for (const auto& [p, n, d] :
       std::vector<std::tuple<std::int64_t, int, std::int64_t>>{
           {2, 1, 3}, {2, 2, 5}, {3, 1, 4}, {5, 1, 6}, {3, 2, 10}}) {
    const std::int64_t base_rank =
        theorem_rank(make_family_params(p, n, d, p));
    std::int64_t qk = p;
    for (int k = 2; k <= 4; ++k) {
      qk *= p;
      CHECK(theorem_rank(make_family_params(p, n, d, qk)) >= base_rank);
    }
    // q^2 against q^4 = (q^2)^2
    const std::int64_t r2 = theorem_rank(make_family_params(p, n, d, p * p));
    const std::int64_t r4 =
        theorem_rank(make_family_params(p, n, d, p * p * p * p));
    CHECK(r4 >= r2);
  }
}

TEST_CASE("geometric bound") {
  CHECK(geometric_bound(7) == 3);
  CHECK(geometric_bound(4) == 0);
  CHECK_THROWS_AS(geometric_bound(3), std::invalid_argument);
}

TEST_CASE("brumer bound") {
  // main * 2 log_q(deg) identity, plus hand-checked magnitudes
  const BrumerBound a = brumer_bound(7, 5, 0.0);
  CHECK(std::abs(a.main * 2.0 * std::log(7.0) / std::log(5.0) - 3.0) < 1e-12);
  CHECK(a.main == doctest::Approx(1.2406).epsilon(1e-3));
  CHECK(a.full == a.main);

  const BrumerBound b = brumer_bound(13, 3, 0.0);
  CHECK(b.main == doctest::Approx(1.9274).epsilon(1e-3));

  const BrumerBound c = brumer_bound(13, 3, 2.0);
  const double logq = std::log(13.0) / std::log(3.0);
  CHECK(c.full - c.main == doctest::Approx(2.0 * 13.0 / (logq * logq)));

  // log_q(deg) shrinks as q grows, so the main term grows with q and the
  // arithmetic bound only improves on the geometric one for deg >> q
  CHECK(brumer_bound(9, 64, 0.0).main > brumer_bound(9, 4, 0.0).main);
  CHECK(brumer_bound(729, 3, 0.0).main <
        static_cast<double>(geometric_bound(729)));

  CHECK_THROWS_AS(brumer_bound(1, 5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(brumer_bound(7, 5, -1.0), std::invalid_argument);
}

TEST_CASE("rank_report end to end on small members") {
  {
    const RankReport r =
        rank_report(make_family_params(5, 1, 6, 5), 1, 1e-9, 2.0);
    CHECK(r.analytic_rank == 2);
    CHECK(r.formula_rank == 2);
    CHECK(r.geom_bound == 3);
    CHECK(r.conductor.degree == 7);
    CHECK(r.passes());
  }
  {
    const RankReport r =
        rank_report(make_family_params(2, 1, 3, 2), 1, 1e-9, 2.0);
    CHECK(r.analytic_rank == 1);
    CHECK(r.formula_rank == 1);
    CHECK(r.passes());
  }
  {
    // sharp geometric bound over F_9
    const RankReport r =
        rank_report(make_family_params(3, 1, 4, 9), 1, 1e-9, 2.0);
    CHECK(r.analytic_rank == 3);
    CHECK(r.geom_bound == 3);
    CHECK(r.ratio_geom == doctest::Approx(1.0));
    CHECK(r.passes());
  }
  {
    // the other sharp case at desk scale: d = 3 over F_4, rank d - 1 = 2
    const RankReport r =
        rank_report(make_family_params(2, 1, 3, 4), 1, 1e-9, 2.0);
    CHECK(r.analytic_rank == 2);
    CHECK(r.geom_bound == 2);
    CHECK(r.L.coeffs == std::vector<BigInt>{1, -8, 16});  // (1 - 4T)^2
    CHECK(r.passes());
  }
}

TEST_CASE("expected family conductor degree") {
  CHECK(expected_family_conductor_degree(6) == 7);
  CHECK(expected_family_conductor_degree(4) == 7);
  CHECK(expected_family_conductor_degree(3) == 6);
  CHECK(expected_family_conductor_degree(10) == 13);
  CHECK(expected_family_conductor_degree(12) == 13);
}
