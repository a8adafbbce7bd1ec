// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFT_LSERIES_HPP_
#define ELLFT_LSERIES_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "ellft/curve_model.hpp"

namespace ellft {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// The L-function written in T = q^(-s): an exact integer polynomial
/// P(T) = sum c_i T^i of degree D = deg(n) - 4 with c_0 = 1.
struct LPolynomial {
  std::int64_t q = 0;
  int degree = 0;
  std::vector<BigInt> coeffs;  // c_0 .. c_D
};

enum class LocalFactorKind {
  kGood,
  kSplitMultiplicative,
  kNonsplitMultiplicative,
  kAdditive,
};

struct TraceEntry {
  Place place;
  LocalFactorKind kind;
  std::int64_t a;   // a_v; +1/-1 at multiplicative places, 0 at additive
  std::int64_t qv;  // residue field cardinality
};

struct TraceTable {
  std::vector<TraceEntry> entries;
};

struct LSeriesResult {
  LPolynomial L;
  std::vector<BigInt> tail;  // truncated-product coefficients D+1 .. D+extra
  bool tail_vanishes = true;
  TraceTable traces;
  ConductorDivisor conductor;
  std::vector<ReductionData> bad_places;
};

/// a_v at one place.  Good reduction counts points of the reduced minimal
/// model by enumerating x over the residue field and solving the quadratic
/// in y (trace condition in characteristic 2, quadratic character
/// otherwise); multiplicative reduction gives +1 (split) or -1 (non-split),
/// additive gives 0.
std::int64_t trace_of_frobenius(const Curve& c, const Place& v,
                                const ReductionData& data);

/// Truncated Euler product over every place of degree <= D + extra_coeffs
/// (the infinite place included).  Coefficients beyond D are returned in
/// `tail`; they vanish exactly when the local data is consistent.
LSeriesResult l_series(const Curve& c, int extra_coeffs, int threads = 0,
                       std::uint64_t seed = kDefaultFactorSeed);

/// l_series with the tail check enforced: a nonzero coefficient past D
/// throws ComputationError.
LPolynomial l_polynomial(const Curve& c, int extra_coeffs);

/// The unique W with c_(D-i) = W q^(D-2i) c_i for all i; throws
/// ComputationError when neither sign satisfies every symmetry.
int functional_equation_sign(const LPolynomial& L);

/// True iff every complex root of P has |root| within tol of 1/q.  Roots of
/// each squarefree factor (exact gcd decomposition first) are located
/// numerically and Newton-polished.  Non-convergence throws.
bool verify_riemann_hypothesis(const LPolynomial& L, double tol);

struct AnalyticRank {
  int rank = 0;
  BigRational leading;  // R(1/q) where P(T) = (1 - qT)^rank R(T)
};

/// Order of vanishing at s = 1: the multiplicity of (1 - qT) in P(T) by
/// repeated exact division, plus the exact value R(1/q).
AnalyticRank analytic_rank(const LPolynomial& L);

/// a_v^2 <= 4 q_v at every good entry.
bool hasse_bound_ok(const TraceTable& traces);

}  // namespace ellft

#endif  // ELLFT_LSERIES_HPP_
