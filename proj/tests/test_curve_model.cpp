// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellft/curve_model.hpp"
#include "ellft/rank_theory.hpp"

using namespace ellft;

namespace {

RationalFunction rf_int(const FiniteField& K, std::int64_t n) {
  return RationalFunction(Poly::from_ints(K, {n}));
}

// t^d - 432 t^(2d), built from primitives rather than the b-formulas.
Poly expected_family_disc(const FiniteField& K, int d) {
  return Poly::monomial(K, d) +
         Poly::constant(K.from_int(-432)) * Poly::monomial(K, 2 * d);
}

const ReductionData& data_at(const LocalAnalysis& an, const Place& v) {
  for (const auto& rd : an.local)
    if (rd.place == v) return rd;
  REQUIRE(false);
  return an.local.front();
}

}  // namespace

TEST_CASE("discriminant and j of the family") {
  for (const auto& [p, d] : std::vector<std::pair<std::int64_t, int>>{
           {5, 6}, {2, 3}, {3, 4}}) {
    const FiniteField& K = make_field(p, 1);
    const Curve c = family_curve(K, d);
    const auto [delta, j] = discriminant_and_j(c);
    const Poly expected = expected_family_disc(K, d);
    CHECK(delta == RationalFunction(expected));
    // c4 = 1 for this family, so j = 1/Delta
    CHECK(j == RationalFunction(Poly::from_ints(K, {1}), expected));
    CHECK(is_nonisotrivial(c));
  }
  // over F_2 and F_3, 432 = 0 and Delta collapses to t^d
  const FiniteField& f2 = make_field(2, 1);
  CHECK(discriminant_and_j(family_curve(f2, 3)).first ==
        RationalFunction(Poly::monomial(f2, 3)));
  const FiniteField& f3 = make_field(3, 1);
  CHECK(discriminant_and_j(family_curve(f3, 4)).first ==
        RationalFunction(Poly::monomial(f3, 4)));
}

TEST_CASE("singular models are rejected") {
  const FiniteField& K = make_field(5, 1);
  const RationalFunction z{Poly(K)};
  CHECK_THROWS_AS(Curve(K, z, z, z, z, z), std::invalid_argument);  // y^2=x^3
}

TEST_CASE("isotrivial detection") {
  const FiniteField& K = make_field(5, 1);
  const RationalFunction z{Poly(K)};
  // constant coefficients: j is constant
  const Curve constant(K, z, z, z, rf_int(K, 1), rf_int(K, 1));
  CHECK_FALSE(is_nonisotrivial(constant));
  // y^2 = x^3 + (t^6+1): c4 = 0, j = 0, still isotrivial
  const Curve j0(K, z, z, z, z,
                 RationalFunction(Poly::monomial(K, 6) +
                                  Poly::from_ints(K, {1})));
  CHECK_FALSE(is_nonisotrivial(j0));
  CHECK(is_nonisotrivial(family_curve(K, 6)));
}

TEST_CASE("tate_local at pinned places of y^2 + xy = x^3 - t^6 over F_5") {
  const FiniteField& K = make_field(5, 1);
  const Curve c = family_curve(K, 6);

  const ReductionData at0 =
      tate_local(c, Place::finite(Poly::from_ints(K, {0, 1})));
  CHECK(at0.type == KodairaType::kIn);
  CHECK(at0.n == 6);
  CHECK(at0.f == 1);
  CHECK(at0.v_delta_min == 6);
  CHECK(at0.split == SplitType::kSplit);  // tangents T^2 + T = T(T+1)

  // places over 1 - 2t^6: three quadratics, each I_1
  const Factorization fac = factor(Poly::from_ints(K, {1}) +
                                   Poly::constant(K.from_int(-2)) *
                                       Poly::monomial(K, 6));
  REQUIRE(fac.factors.size() == 3);
  for (const auto& [irr, mult] : fac.factors) {
    CHECK(irr.degree() == 2);
    CHECK(mult == 1);
    const ReductionData rd = tate_local(c, Place::finite(irr));
    CHECK(rd.type == KodairaType::kIn);
    CHECK(rd.n == 1);
    CHECK(rd.f == 1);
  }

  // good reduction at infinity for 6 | d
  const ReductionData inf = tate_local(c, Place::infinity(K));
  CHECK(inf.type == KodairaType::kI0);
  CHECK(inf.f == 0);
}

TEST_CASE("tate_local good place") {
  const FiniteField& K = make_field(2, 1);
  const Curve c = family_curve(K, 3);
  const ReductionData rd =
      tate_local(c, Place::finite(Poly::from_ints(K, {1, 1})));
  CHECK(rd.type == KodairaType::kI0);
  CHECK(rd.f == 0);
}

TEST_CASE("wild additive reduction at infinity for p = 2, 3") {
  // d = 3 over F_2: v(Delta) at infinity is 12e - d = 9, type I0*, f = 5
  const FiniteField& f2 = make_field(2, 1);
  const ReductionData i2 = tate_local(family_curve(f2, 3), Place::infinity(f2));
  CHECK(i2.type == KodairaType::kIStarN);
  CHECK(i2.n == 0);
  CHECK(i2.v_delta_min == 9);
  CHECK(i2.f == 5);

  // d = 4 over F_3: v(Delta) = 8, type IV, f = 6
  const FiniteField& f3 = make_field(3, 1);
  const ReductionData i3 = tate_local(family_curve(f3, 4), Place::infinity(f3));
  CHECK(i3.type == KodairaType::kIV);
  CHECK(i3.v_delta_min == 8);
  CHECK(i3.f == 6);

  // d = 5 over F_2: v(Delta) = 7, type II, f = 7
  const ReductionData i5 = tate_local(family_curve(f2, 5), Place::infinity(f2));
  CHECK(i5.type == KodairaType::kII);
  CHECK(i5.v_delta_min == 7);
  CHECK(i5.f == 7);
}

TEST_CASE("conductor degrees of the acceptance curves") {
  const std::vector<std::tuple<std::int64_t, std::int64_t, int>> table = {
      {5, 6, 7}, {3, 4, 7}, {2, 3, 6}, {2, 5, 8}, {3, 10, 13}};
  for (const auto& [p, d, expected] : table) {
    const FiniteField& K = make_field(p, 1);
    const ConductorDivisor n = conductor(family_curve(K, d));
    CHECK(n.degree == expected);
    int sum = 0;
    for (const auto& [place, f] : n.entries) sum += f * place.degree();
    CHECK(sum == n.degree);
    // deterministic entry order: finite places ascending, infinity last
    for (size_t i = 1; i < n.entries.size(); ++i)
      CHECK(n.entries[i - 1].first < n.entries[i].first);
  }
}

TEST_CASE("conductor exponent classification") {
  // f = 0 iff I0, f = 1 iff multiplicative, f >= 2 for additive types
  for (const auto& [p, d] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {2, 3}, {3, 4}, {5, 6}, {7, 8}, {2, 5}}) {
    const FiniteField& K = make_field(p, 1);
    const LocalAnalysis an = analyze_reduction(family_curve(K, d));
    for (const auto& rd : an.local) {
      if (rd.type == KodairaType::kI0) CHECK(rd.f == 0);
      else if (rd.type == KodairaType::kIn) CHECK(rd.f == 1);
      else CHECK(rd.f >= 2);
      if (K.characteristic() > 3 && rd.additive()) CHECK(rd.f == 2);
    }
  }
}

TEST_CASE("tame additive exponents stay at 2 for random curves, p >= 5") {
  std::mt19937_64 rng(2026);
  for (std::int64_t p : {5, 7}) {
    const FiniteField& K = make_field(p, 1);
    int additive_seen = 0;
    for (int it = 0; it < 12; ++it) {
      std::vector<RationalFunction> a;
      for (int i = 0; i < 5; ++i) {
        std::vector<std::int64_t> coeffs;
        for (int j = 0; j < 3; ++j)
          coeffs.push_back(static_cast<std::int64_t>(rng() % p));
        a.emplace_back(Poly::from_ints(K, coeffs));
      }
      try {
        const Curve c(K, a[0], a[1], a[2], a[3], a[4]);
        for (const auto& rd : analyze_reduction(c).local) {
          CHECK(rd.f <= 2);
          if (rd.additive()) {
            CHECK(rd.f == 2);
            ++additive_seen;
          }
        }
      } catch (const std::invalid_argument&) {
        continue;  // singular sample
      }
    }
    CHECK(additive_seen > 0);
  }
}

TEST_CASE("conductor is invariant under coordinate changes") {
  const FiniteField& K = make_field(5, 1);
  const Curve base = family_curve(K, 6);
  const int expected = conductor(base).degree;
  std::mt19937_64 rng(555);
  for (int it = 0; it < 6; ++it) {
    // (x, y) -> (x + r, y + s x + w) with polynomial r, s, w
    std::vector<Poly> rsw;
    for (int i = 0; i < 3; ++i) {
      std::vector<std::int64_t> coeffs;
      const int deg = static_cast<int>(rng() % 3);
      for (int j = 0; j <= deg; ++j)
        coeffs.push_back(static_cast<std::int64_t>(rng() % 5));
      rsw.emplace_back(Poly::from_ints(K, coeffs));
    }
    const RationalFunction r{rsw[0]}, s{rsw[1]}, w{rsw[2]};
    const RationalFunction a1 = base.a1(), a2 = base.a2(), a3 = base.a3(),
                           a4 = base.a4(), a6 = base.a6();
    const RationalFunction two = rf_int(K, 2), three = rf_int(K, 3);
    const Curve moved(K, a1 + two * s, a2 - s * a1 + three * r - s * s,
                      a3 + r * a1 + two * w,
                      a4 - s * a3 + two * r * a2 - (r * s + w) * a1 +
                          three * r * r - two * s * w,
                      a6 + r * a4 + r * r * a2 + r * r * r - w * a3 - w * w -
                          r * w * a1);
    CHECK(conductor(moved).degree == expected);
  }
}

TEST_CASE("family conductor degree formula for p >= 5, d = p^n + 1") {
  // deg(n) = d + 1 when 6 | d, d + 3 otherwise
  const FiniteField& f5 = make_field(5, 1);
  CHECK(conductor(family_curve(f5, 6)).degree == 7);
  const FiniteField& f7 = make_field(7, 1);
  CHECK(conductor(family_curve(f7, 8)).degree == 11);
}

namespace {

// Independent classification for tame places (p >= 5): on a minimal model
// the Kodaira type is a function of (v(c4), v(Delta)) alone.
std::string tame_table_symbol(int vc4, int vd) {
  if (vd == 0) return "I0";
  if (vc4 == 0) return "I" + std::to_string(vd);
  if (vd == 2) return "II";
  if (vd == 3) return "III";
  if (vd == 4) return "IV";
  if (vd == 6 && vc4 >= 2) return "I0*";
  if (vc4 == 2 && vd >= 7) return "I" + std::to_string(vd - 6) + "*";
  if (vd == 8) return "IV*";
  if (vd == 9) return "III*";
  if (vd == 10) return "II*";
  return "?";
}

int local_val(const RationalFunction& f, const Place& v) {
  return f.is_zero() ? 1 << 20 : valuation(f, v);
}

// v(c4) of the minimal model returned by tate_local, in local coordinates.
int minimal_c4_valuation(const ReductionData& rd, const FiniteField& K) {
  const auto& a = rd.minimal_model;
  auto c = [&K](std::int64_t n) {
    return RationalFunction(Poly::from_ints(K, {n}));
  };
  const RationalFunction b2 = a[0] * a[0] + c(4) * a[1];
  const RationalFunction b4 = c(2) * a[3] + a[0] * a[2];
  const RationalFunction c4 = b2 * b2 - c(24) * b4;
  const Place local = rd.place.is_infinite()
                          ? Place::finite(Poly::variable(K))
                          : rd.place;
  return local_val(c4, local);
}

}  // namespace

TEST_CASE("tate agrees with the tame (v(c4), v(Delta)) table for p >= 5") {
  // models picked to hit every additive type, plus random ones
  for (std::int64_t p : {5, 7, 13}) {
    const FiniteField& K = make_field(p, 1);
    const RationalFunction z{Poly(K)};
    auto mono = [&K](int k) {
      return RationalFunction(Poly::monomial(K, k));
    };
    std::vector<Curve> samples;
    // y^2 = x^3 + t^m for m = 1..5 walks II, IV, I0*, IV*, II* at t = 0
    for (int m = 1; m <= 5; ++m)
      samples.emplace_back(K, z, z, z, z, mono(m));
    // y^2 = x^3 + t^k x walks III, I0*, III* at t = 0
    for (int k = 1; k <= 3; ++k)
      samples.emplace_back(K, z, z, z, mono(k), z);
    // y^2 = x^3 + t x^2 + t^m walks the I_n^* chain: v(c4) = 2 with
    // v(Delta) = 6 + n for n = 1, 2, 3
    samples.emplace_back(K, z, mono(1), z, z, mono(4));
    samples.emplace_back(K, z, mono(1), z, z, mono(5));
    samples.emplace_back(K, z, mono(1), z, z, mono(6));
    samples.emplace_back(K, z, mono(2), z, z, mono(5));  // II* shape
    std::mt19937_64 rng(77);
    for (int it = 0; it < 30; ++it) {
      std::vector<RationalFunction> a;
      for (int i = 0; i < 5; ++i) {
        std::vector<std::int64_t> coeffs;
        const int deg = static_cast<int>(rng() % 4);
        for (int j = 0; j <= deg; ++j)
          coeffs.push_back(static_cast<std::int64_t>(rng() % p));
        a.emplace_back(Poly::from_ints(K, coeffs));
      }
      try {
        samples.emplace_back(K, a[0], a[1], a[2], a[3], a[4]);
      } catch (const std::invalid_argument&) {
      }
    }
    int checked = 0;
    for (const Curve& c : samples) {
      for (const auto& rd : analyze_reduction(c).local) {
        const std::string got = kodaira_symbol(rd.type, rd.n);
        const std::string expected =
            tame_table_symbol(minimal_c4_valuation(rd, K), rd.v_delta_min);
        CHECK(got == expected);
        ++checked;
      }
    }
    CHECK(checked > 20);
  }
}

TEST_CASE("conductor invariance under coordinate changes, p = 2 and 3") {
  // exercises the wild branches through messy translated models
  for (const auto& [p, d] :
       std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 3}, {3, 4}}) {
    const FiniteField& K = make_field(p, 1);
    const Curve base = family_curve(K, d);
    const int expected = conductor(base).degree;
    std::mt19937_64 rng(31337);
    for (int it = 0; it < 8; ++it) {
      std::vector<Poly> rsw;
      for (int i = 0; i < 3; ++i) {
        std::vector<std::int64_t> coeffs;
        const int deg = static_cast<int>(rng() % 3);
        for (int j = 0; j <= deg; ++j)
          coeffs.push_back(static_cast<std::int64_t>(rng() % p));
        rsw.emplace_back(Poly::from_ints(K, coeffs));
      }
      const RationalFunction r{rsw[0]}, s{rsw[1]}, w{rsw[2]};
      const RationalFunction a1 = base.a1(), a2 = base.a2(), a3 = base.a3(),
                             a4 = base.a4(), a6 = base.a6();
      auto c = [&K](std::int64_t n) {
        return RationalFunction(Poly::from_ints(K, {n}));
      };
      const Curve moved(K, a1 + c(2) * s, a2 - s * a1 + c(3) * r - s * s,
                        a3 + r * a1 + c(2) * w,
                        a4 - s * a3 + c(2) * r * a2 - (r * s + w) * a1 +
                            c(3) * r * r - c(2) * s * w,
                        a6 + r * a4 + r * r * a2 + r * r * r - w * a3 -
                            w * w - r * w * a1);
      CHECK(conductor(moved).degree == expected);
    }
  }
}
