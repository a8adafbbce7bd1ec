// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFT_RANK_THEORY_HPP_
#define ELLFT_RANK_THEORY_HPP_

#include <cstdint>

#include "ellft/lseries.hpp"

namespace ellft {

/// Parameters of the high-rank family y^2 + xy = x^3 - t^d over F_q(t),
/// with d a divisor of p^n + 1 and q a power of p.
struct FamilyParams {
  std::int64_t p = 0;
  int n_exp = 0;
  std::int64_t d = 0;
  std::int64_t q = 0;
};

/// Validates p prime, q = p^k, d >= 1 and d | p^n_exp + 1.
FamilyParams make_family_params(std::int64_t p, int n_exp, std::int64_t d,
                                std::int64_t q);

/// Smallest n >= 1 with d | p^n + 1, or 0 when no such n exists.
int infer_family_exponent(std::int64_t p, std::int64_t d);

std::int64_t euler_phi(std::int64_t n);
/// Multiplicative order of q modulo e (gcd(q, e) = 1).
std::int64_t order_mod(std::int64_t q, std::int64_t e);

/// The curve y^2 + xy = x^3 - t^d.
Curve family_curve(const FiniteField& base, std::int64_t d);

/// The closed-form rank of the family over F_q(t):
///   sum over e | d, e not dividing 6, of phi(e)/o_e(q),
///   + 1 if 2 | d and 4 | q-1,
///   + (1 if 3 | d and 3 does not divide q-1, 2 if 3 | d and 3 | q-1).
/// Every phi(e)/o_e(q) term divides exactly; a remainder throws.
std::int64_t theorem_rank(const FamilyParams& fp);

/// deg(n) - 4 (genus 0).  Requires deg_n >= 4.
int geometric_bound(int deg_n);

struct BrumerBound {
  double main = 0;  // (deg_n - 4) / (2 log_q deg_n)
  double full = 0;  // main + C deg_n / (log_q deg_n)^2
  double C = 0;
};

BrumerBound brumer_bound(int deg_n, std::int64_t q, double C);

/// Conductor degree the family formulas predict: d + 1 when 6 | d, else
/// d + 3 (equivalently p^n + 2 / p^n + 4 at d = p^n + 1).  For p = 2, 3
/// wild ramification may make the computed value differ; the comparison is
/// advisory there.
std::int64_t expected_family_conductor_degree(std::int64_t d);

struct RankChecks {
  bool fe_ok = false;
  bool rh_ok = false;
  bool truncation_ok = false;
  bool hasse_ok = false;
  bool rank_match = false;
  bool bound_ok = false;
  bool conductor_degree_match = false;
};

/// The full verdict for one family member.
struct RankReport {
  FamilyParams params;
  int extra_coeffs = 1;
  double tolerance = 0;

  ConductorDivisor conductor;
  std::vector<ReductionData> bad_places;
  LPolynomial L;
  TraceTable traces;

  int sign = 0;  // 0 only when fe_ok is false
  int analytic_rank = 0;
  std::int64_t formula_rank = 0;
  BigRational leading;  // R(1/q); multiply by (ln q)^rank for d^r L/ds^r / r!

  int geom_bound = 0;
  BrumerBound brumer;
  double ratio_geom = 0;         // analytic_rank / geometric bound
  double ratio_brumer_main = 0;  // analytic_rank / Brumer main term

  RankChecks checks;

  // The exit-code aggregate.  The conductor-degree comparison is advisory
  // for p = 2, 3 (wild ramification can push additive exponents past 2).
  bool passes() const;
};

RankReport rank_report(const FamilyParams& fp, int extra_coeffs, double tol,
                       double brumer_C, int threads = 0,
                       std::uint64_t seed = kDefaultFactorSeed);

}  // namespace ellft

#endif  // ELLFT_RANK_THEORY_HPP_
