// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFT_CURVE_MODEL_HPP_
#define ELLFT_CURVE_MODEL_HPP_

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ellft/polyring.hpp"

namespace ellft {

/// Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over
/// F_q(t).  The model must be nonsingular (Delta != 0); construction throws
/// otherwise.
class Curve {
 public:
  Curve(const FiniteField& base, RationalFunction a1, RationalFunction a2,
        RationalFunction a3, RationalFunction a4, RationalFunction a6);

  const FiniteField& base() const { return *base_; }
  const RationalFunction& a1() const { return a_[0]; }
  const RationalFunction& a2() const { return a_[1]; }
  const RationalFunction& a3() const { return a_[2]; }
  const RationalFunction& a4() const { return a_[3]; }
  const RationalFunction& a6() const { return a_[4]; }
  const std::array<RationalFunction, 5>& coefficients() const { return a_; }

  std::string to_string() const;

 private:
  const FiniteField* base_;
  std::array<RationalFunction, 5> a_;  // a1, a2, a3, a4, a6
};

enum class KodairaType {
  kI0,      // good reduction
  kIn,      // multiplicative, n >= 1
  kII,
  kIII,
  kIV,
  kIStarN,  // I_n^*, n >= 0
  kIVStar,
  kIIIStar,
  kIIStar,
};

enum class SplitType { kSplit, kNonsplit, kNotApplicable };

std::string kodaira_symbol(KodairaType type, int n);

/// Output of the local algorithm at one place.
struct ReductionData {
  Place place;
  KodairaType type;
  int n;            // the n of I_n / I_n^*; 0 otherwise
  int f;            // conductor exponent
  int v_delta_min;  // valuation of the minimal discriminant
  SplitType split;  // multiplicative reduction only

  // Minimal integral model at the place, in the local coordinate
  // (t for finite places, u = 1/t at infinity).
  std::array<RationalFunction, 5> minimal_model;
  // The minimal model reduced modulo the place: residue-class
  // representatives of degree < deg(place) over F_q.
  std::array<Poly, 5> reduced_model;

  bool good() const { return type == KodairaType::kI0; }
  bool multiplicative() const { return type == KodairaType::kIn; }
  bool additive() const { return !good() && !multiplicative(); }
};

struct ConductorDivisor {
  // (place, conductor exponent), finite places in deterministic order
  // followed by the infinite place.  Only f >= 1 entries appear.
  std::vector<std::pair<Place, int>> entries;
  int degree = 0;  // sum of f_v * deg(v)
};

struct LocalAnalysis {
  // One entry per candidate bad place (good outcomes included), finite
  // places in deterministic order, the infinite place last.
  std::vector<ReductionData> local;
  ConductorDivisor divisor;
};

/// (Delta, j) by the standard b-invariant formulas.
std::pair<RationalFunction, RationalFunction> discriminant_and_j(
    const Curve& c);

/// True iff j, in lowest terms, is not a constant.
bool is_nonisotrivial(const Curve& c);

/// Tate's algorithm over the completion at v, valid in every residue
/// characteristic.  At the infinite place the substitution t = 1/u with the
/// minimal integral rescaling (x, y) -> (x/u^(2e), y/u^(3e)) is applied
/// first, and the same local algorithm runs at (u).
ReductionData tate_local(const Curve& c, const Place& v);

/// Runs tate_local at every candidate bad place (irreducible factors of the
/// discriminant's numerator and denominator, of the coefficient
/// denominators, and the infinite place) and assembles the conductor.  The
/// seed feeds the equal-degree splitting inside factor().
LocalAnalysis analyze_reduction(const Curve& c,
                                std::uint64_t seed = kDefaultFactorSeed);

ConductorDivisor conductor(const Curve& c,
                           std::uint64_t seed = kDefaultFactorSeed);

}  // namespace ellft

#endif  // ELLFT_CURVE_MODEL_HPP_
