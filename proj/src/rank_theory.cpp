// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "ellft/rank_theory.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ellft/errors.hpp"

namespace ellft {

namespace {

bool is_prime_int(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// exponent k with q = p^k, or 0 if q is not a power of p
int power_exponent(std::int64_t p, std::int64_t q) {
  int k = 0;
  while (q > 1 && q % p == 0) {
    q /= p;
    ++k;
  }
  return q == 1 ? k : 0;
}

}  // namespace

FamilyParams make_family_params(std::int64_t p, int n_exp, std::int64_t d,
                                std::int64_t q) {
  if (!is_prime_int(p))
    throw std::invalid_argument("family: p must be prime");
  if (n_exp < 1) throw std::invalid_argument("family: n must be >= 1");
  if (d < 1) throw std::invalid_argument("family: d must be >= 1");
  if (power_exponent(p, q) < 1)
    throw std::invalid_argument("family: q must be a positive power of p");
  // d | p^n + 1, checked mod d to avoid overflow
  std::int64_t pn = 1 % d;
  for (int i = 0; i < n_exp; ++i) pn = (pn * (p % d)) % d;
  if ((pn + 1) % d != 0)
    throw std::invalid_argument("family: d does not divide p^n + 1");
  return FamilyParams{p, n_exp, d, q};
}

int infer_family_exponent(std::int64_t p, std::int64_t d) {
  if (d == 1) return 1;
  std::int64_t cur = 1 % d;
  for (int n = 1; n <= 2 * static_cast<int>(d); ++n) {
    cur = (cur * (p % d)) % d;
    if ((cur + 1) % d == 0) return n;
  }
  return 0;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      result -= result / q;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::int64_t order_mod(std::int64_t q, std::int64_t e) {
  if (e < 1) throw std::invalid_argument("order_mod: modulus must be >= 1");
  if (e == 1) return 1;
  q %= e;
  if (q < 0) q += e;
  if (std::gcd(q, e) != 1)
    throw std::invalid_argument("order_mod: arguments are not coprime");
  std::int64_t cur = q % e, k = 1;
  while (cur != 1 % e) {
    cur = (cur * q) % e;
    ++k;
    if (k > e) throw ComputationError("order_mod: no order found");
  }
  return k;
}

Curve family_curve(const FiniteField& base, std::int64_t d) {
  if (d < 1) throw std::invalid_argument("family_curve: d must be >= 1");
  const RationalFunction zero{Poly(base)};
  const RationalFunction one{Poly::from_ints(base, {1})};
  const RationalFunction a6{Poly::constant(-base.one()) *
                            Poly::monomial(base, static_cast<int>(d))};
  return Curve(base, one, zero, zero, zero, a6);
}

std::int64_t theorem_rank(const FamilyParams& fp) {
  make_family_params(fp.p, fp.n_exp, fp.d, fp.q);  // re-validate
  std::int64_t rank = 0;
  for (std::int64_t e = 1; e <= fp.d; ++e) {
    if (fp.d % e != 0) continue;
    if (6 % e == 0) continue;  // only divisors of d that do not divide 6
    const std::int64_t phi = euler_phi(e);
    const std::int64_t o = order_mod(fp.q, e);
    if (phi % o != 0)
      throw ComputationError("theorem_rank: o_e(q) does not divide phi(e)");
    rank += phi / o;
  }
  if (fp.d % 2 == 0 && (fp.q - 1) % 4 == 0) rank += 1;
  if (fp.d % 3 == 0) rank += ((fp.q - 1) % 3 == 0) ? 2 : 1;
  return rank;
}

int geometric_bound(int deg_n) {
  if (deg_n < 4)
    throw std::invalid_argument("geometric_bound: conductor degree below 4");
  return deg_n - 4;
}

BrumerBound brumer_bound(int deg_n, std::int64_t q, double C) {
  if (deg_n <= 1)
    throw std::invalid_argument("brumer_bound: conductor degree must be >= 2");
  if (q < 2) throw std::invalid_argument("brumer_bound: q must be >= 2");
  if (C < 0) throw std::invalid_argument("brumer_bound: C must be >= 0");
  const double logq = std::log(static_cast<double>(deg_n)) /
                      std::log(static_cast<double>(q));
  BrumerBound b;
  b.C = C;
  b.main = static_cast<double>(deg_n - 4) / (2.0 * logq);
  b.full = b.main + C * static_cast<double>(deg_n) / (logq * logq);
  return b;
}

std::int64_t expected_family_conductor_degree(std::int64_t d) {
  return d % 6 == 0 ? d + 1 : d + 3;
}

bool RankReport::passes() const {
  bool ok = checks.fe_ok && checks.rh_ok && checks.truncation_ok &&
            checks.hasse_ok && checks.rank_match && checks.bound_ok;
  if (params.p >= 5) ok = ok && checks.conductor_degree_match;
  return ok;
}

RankReport rank_report(const FamilyParams& fp, int extra_coeffs, double tol,
                       double brumer_C, int threads, std::uint64_t seed) {
  const FamilyParams params = make_family_params(fp.p, fp.n_exp, fp.d, fp.q);
  const FiniteField& base =
      make_field(params.p, power_exponent(params.p, params.q));
  const Curve curve = family_curve(base, params.d);

  LSeriesResult ls = l_series(curve, extra_coeffs, threads, seed);

  RankReport r;
  r.params = params;
  r.extra_coeffs = extra_coeffs;
  r.tolerance = tol;
  r.conductor = std::move(ls.conductor);
  r.bad_places = std::move(ls.bad_places);
  r.traces = std::move(ls.traces);
  r.L = std::move(ls.L);

  r.checks.truncation_ok = ls.tail_vanishes;
  try {
    r.sign = functional_equation_sign(r.L);
    r.checks.fe_ok = true;
  } catch (const ComputationError&) {
    r.sign = 0;
    r.checks.fe_ok = false;
  }
  r.checks.rh_ok = verify_riemann_hypothesis(r.L, tol);
  r.checks.hasse_ok = hasse_bound_ok(r.traces);

  const AnalyticRank ar = analytic_rank(r.L);
  r.analytic_rank = ar.rank;
  r.leading = ar.leading;
  r.formula_rank = theorem_rank(params);
  r.checks.rank_match =
      (static_cast<std::int64_t>(r.analytic_rank) == r.formula_rank);

  r.geom_bound = geometric_bound(r.conductor.degree);
  r.checks.bound_ok = (r.analytic_rank <= r.geom_bound);
  r.brumer = brumer_bound(r.conductor.degree, params.q, brumer_C);
  r.checks.conductor_degree_match =
      (r.conductor.degree == expected_family_conductor_degree(params.d));

  r.ratio_geom = r.geom_bound > 0 ? static_cast<double>(r.analytic_rank) /
                                        static_cast<double>(r.geom_bound)
                                  : 0.0;
  r.ratio_brumer_main =
      r.brumer.main > 0 ? static_cast<double>(r.analytic_rank) / r.brumer.main
                        : 0.0;
  return r;
}

}  // namespace ellft
