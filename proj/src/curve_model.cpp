// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "ellft/curve_model.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "ellft/errors.hpp"

namespace ellft {

namespace {

constexpr int kValInfinity = 1 << 28;  // valuation of 0

struct BInvariants {
  RationalFunction b2, b4, b6, b8, delta;
};

BInvariants b_invariants(const FiniteField& K,
                         const std::array<RationalFunction, 5>& a) {
  const auto& [a1, a2, a3, a4, a6] = a;
  auto k = [&K](std::int64_t n) {
    return RationalFunction(Poly::from_ints(K, {n}));
  };
  const RationalFunction b2 = a1 * a1 + k(4) * a2;
  const RationalFunction b4 = k(2) * a4 + a1 * a3;
  const RationalFunction b6 = a3 * a3 + k(4) * a6;
  const RationalFunction b8 = a1 * a1 * a6 + k(4) * a2 * a6 -
                              a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  const RationalFunction delta = k(-1) * b2 * b2 * b8 -
                                 k(8) * b4 * b4 * b4 - k(27) * b6 * b6 +
                                 k(9) * b2 * b4 * b6;
  return BInvariants{b2, b4, b6, b8, delta};
}

RationalFunction c4_invariant(const FiniteField& K, const BInvariants& b) {
  auto k = [&K](std::int64_t n) {
    return RationalFunction(Poly::from_ints(K, {n}));
  };
  return b.b2 * b.b2 - k(24) * b.b4;
}

// u^M * f(1/u) / (u^M * den(1/u)): the coordinate flip used at infinity.
RationalFunction substitute_inverse(const RationalFunction& f) {
  const int m = std::max(f.num().degree(), f.den().degree());
  if (f.is_zero()) return f;
  return RationalFunction(f.num().reversed(m), f.den().reversed(m));
}

// --- residue arithmetic at one finite place --------------------------------
// Residue classes are polynomial representatives of degree < deg(pi).

struct LocalRing {
  const FiniteField* K;
  Poly pi;
  std::int64_t qv;  // residue field cardinality, clamped when huge
  bool qv_fits;     // false once q^deg(pi) leaves the int64 range

  LocalRing(const FiniteField& base, Poly uniformizer)
      : K(&base), pi(std::move(uniformizer)) {
    unsigned __int128 size = 1;
    qv_fits = true;
    for (int i = 0; i < pi.degree(); ++i) {
      size *= static_cast<unsigned __int128>(base.size());
      if (size > (static_cast<unsigned __int128>(1) << 62)) {
        qv_fits = false;
        break;
      }
    }
    qv = qv_fits ? static_cast<std::int64_t>(size)
                 : std::numeric_limits<std::int64_t>::max();
  }

  Poly zero() const { return Poly(*K); }
  Poly scalar(std::int64_t n) const {
    return Poly::from_ints(*K, {n}) % pi;
  }
  bool is_zero(const Poly& a) const { return a.is_zero(); }
  Poly mul(const Poly& a, const Poly& b) const { return (a * b) % pi; }

  // Inverse mod pi by the extended Euclidean algorithm.
  Poly inv(const Poly& a) const {
    if (a.is_zero()) throw std::invalid_argument("residue inverse of zero");
    Poly r0 = pi, r1 = a % pi;
    Poly s0 = Poly(*K), s1 = Poly::from_ints(*K, {1});
    while (!r1.is_zero()) {
      auto [q, r2] = divmod(r0, r1);
      Poly s2 = s0 - q * s1;
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r0.degree() != 0)
      throw ComputationError("tate_local: residue inverse does not exist");
    return (Poly::constant(inverse(r0.coeff(0))) * s0) % pi;
  }

  Poly sqrt_char2(const Poly& a) const {
    require_fits();
    return pow_mod(a, qv / 2, pi);
  }
  Poly cube_root_char3(const Poly& a) const {
    require_fits();
    return pow_mod(a, qv / 3, pi);
  }

  void require_fits() const {
    if (!qv_fits)
      throw BudgetError(
          "tate_local: additive-type arithmetic in a residue field past "
          "the representable range");
  }

  // Norm down to F_q: the product of the q-power Frobenius conjugates.
  // Only small exponents appear, so the place degree is unconstrained.
  FieldElement norm_to_base(const Poly& a) const {
    Poly prod = a % pi;
    Poly conj = prod;
    for (int i = 1; i < pi.degree(); ++i) {
      conj = pow_mod(conj, K->size(), pi);
      prod = mul(prod, conj);
    }
    if (prod.degree() > 0)
      throw ComputationError("tate_local: norm left the base field");
    return prod.coeff(0);
  }

  // Squareness via the norm: for odd q, a is a square in F_(q^deg) iff
  // N(a) is a square in F_q, because (q^deg - 1)/2 = R (q-1)/2 with
  // R = (q^deg - 1)/(q - 1) the norm exponent.
  bool is_square(const Poly& a) const {
    const FieldElement n = norm_to_base(a);
    return pow(n, (K->size() - 1) / 2).is_one();
  }

  // Trace to F_2 of a residue class (characteristic 2): one squaring per
  // bit of the residue field size.
  bool trace2_is_zero(const Poly& a) const {
    int bits = 0;
    for (std::int64_t s = K->size(); s > 1; s >>= 1) ++bits;
    bits *= pi.degree();
    Poly acc(*K);
    Poly x = a % pi;
    for (int i = 0; i < bits; ++i) {
      acc = acc + x;
      x = mul(x, x);
    }
    return acc.is_zero();
  }

  // Residue classes in a fixed deterministic order.
  Poly class_at(std::int64_t idx) const {
    std::vector<FieldElement> c;
    const std::int64_t q = K->size();
    for (int i = 0; i < pi.degree(); ++i) {
      c.push_back(K->element_at(idx % q));
      idx /= q;
    }
    return Poly(*K, std::move(c));
  }

  int val_poly(const Poly& f) const {
    if (f.is_zero()) return kValInfinity;
    int n = 0;
    Poly g = f;
    for (;;) {
      auto [q, r] = divmod(g, pi);
      if (!r.is_zero()) return n;
      g = std::move(q);
      ++n;
    }
  }

  int val(const RationalFunction& f) const {
    if (f.is_zero()) return kValInfinity;
    return val_poly(f.num()) - val_poly(f.den());
  }

  // Reduce an integral rational function to its residue class.
  Poly reduce(const RationalFunction& f) const {
    const Poly dn = f.den() % pi;
    if (dn.is_zero())
      throw ComputationError("tate_local: reduction of a non-integral value");
    return mul(f.num() % pi, inv(dn));
  }

  RationalFunction div_pi(const RationalFunction& f, int k) const {
    if (val(f) < k)
      throw ComputationError("tate_local: inexact division by uniformizer");
    return f / RationalFunction(pow(pi, k));
  }

  // polynomials over the residue field, coefficient list low-first
  Poly eval_k(const std::vector<Poly>& cs, const Poly& x) const {
    Poly v = zero();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) v = mul(v, x) + *it;
    return v;
  }

  std::vector<Poly> derivative_k(const std::vector<Poly>& cs) const {
    std::vector<Poly> d;
    for (size_t i = 1; i < cs.size(); ++i)
      d.push_back(mul(scalar(static_cast<std::int64_t>(i)), cs[i]));
    while (!d.empty() && d.back().is_zero()) d.pop_back();
    return d;
  }

  // First x (in enumeration order) with P(x) = 0 and P'(x) = 0;  P' being
  // the zero polynomial makes the second condition vacuous.  Only additive
  // reduction reaches this search, at small residue fields.
  std::optional<Poly> multiple_root(const std::vector<Poly>& cs) const {
    if (qv > kFieldSizeBudget)
      throw BudgetError(
          "tate_local: additive-type root search in a residue field past "
          "the enumeration budget");
    const std::vector<Poly> d = derivative_k(cs);
    for (std::int64_t i = 0; i < qv; ++i) {
      Poly x = class_at(i);
      if (!is_zero(eval_k(cs, x))) continue;
      if (d.empty() || is_zero(eval_k(d, x))) return x;
    }
    return std::nullopt;
  }

  // gcd of polynomials over the residue field (coefficients are residue
  // classes), monic.
  std::vector<Poly> gcd_k(std::vector<Poly> a, std::vector<Poly> b) const {
    auto trim = [](std::vector<Poly>& f) {
      while (!f.empty() && f.back().is_zero()) f.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
      // a mod b
      const Poly lead_inv = inv(b.back());
      while (a.size() >= b.size() && !a.empty()) {
        const Poly c = mul(a.back(), lead_inv);
        const size_t shift = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j)
          a[shift + j] = a[shift + j] - mul(c, b[j]);
        trim(a);
      }
      std::swap(a, b);
    }
    if (!a.empty()) {
      const Poly lead_inv = inv(a.back());
      for (auto& c : a) c = mul(c, lead_inv);
    }
    return a;
  }
};

// (x, y) -> (x + r, y + s x + w) on the a-invariants.
void rst_transform(std::array<RationalFunction, 5>& a,
                   const RationalFunction& r, const RationalFunction& s,
                   const RationalFunction& w) {
  const FiniteField& K = a[0].base();
  auto k = [&K](std::int64_t n) {
    return RationalFunction(Poly::from_ints(K, {n}));
  };
  const RationalFunction a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3],
                         a6 = a[4];
  a[0] = a1 + k(2) * s;
  a[1] = a2 - s * a1 + k(3) * r - s * s;
  a[2] = a3 + r * a1 + k(2) * w;
  a[3] = a4 - s * a3 + k(2) * r * a2 - (r * s + w) * a1 + k(3) * r * r -
         k(2) * s * w;
  a[4] = a6 + r * a4 + r * r * a2 + r * r * r - w * a3 - w * w -
         r * w * a1;
}

// The singular point of the reduced curve, which always exists and is
// rational once Delta = 0 mod pi.  No residue-field enumeration: the point
// comes from gcds and Frobenius-power roots.
std::pair<Poly, Poly> find_singular_point(
    const LocalRing& R, const std::array<RationalFunction, 5>& a,
    const BInvariants& b) {
  const std::int64_t p = R.K->characteristic();
  const Poly a1 = R.reduce(a[0]), a2 = R.reduce(a[1]), a3 = R.reduce(a[2]),
             a4 = R.reduce(a[3]), a6 = R.reduce(a[4]);
  Poly x0 = R.zero(), y0 = R.zero();
  if (p != 2) {
    // x0 is the multiple root of g = 4x^3 + b2 x^2 + 2 b4 x + b6
    // (disc g = 16 Delta); then y0 = -(a1 x0 + a3)/2.
    std::vector<Poly> g = {R.reduce(b.b6), R.mul(R.scalar(2), R.reduce(b.b4)),
                           R.reduce(b.b2), R.scalar(4)};
    const std::vector<Poly> dg = R.derivative_k(g);
    if (dg.empty()) {
      // characteristic 3 with b2 = b4 = 0: g = 4x^3 + b6 has the triple
      // root (-b6/4)^(1/3); the cube map is a Frobenius power.
      x0 = R.cube_root_char3(R.mul(R.scalar(-1), R.mul(g[0], R.inv(g[3]))));
    } else {
      const std::vector<Poly> h = R.gcd_k(g, dg);
      if (h.size() == 2) {
        x0 = R.mul(R.scalar(-1), h[0]);  // h monic linear
      } else if (h.size() == 3) {
        // h = (x - x0)^2, so x0 = -h1 / 2 (h monic)
        x0 = R.mul(R.scalar(-1), R.mul(h[1], R.inv(R.scalar(2))));
      } else {
        throw ComputationError("tate_local: singular point not found");
      }
    }
    const Poly half = R.inv(R.scalar(2));
    y0 = R.mul(R.scalar(-1), R.mul(half, R.mul(a1, x0) + a3));
  } else if (!a1.is_zero()) {
    x0 = R.mul(a3, R.inv(a1));
    y0 = R.mul(R.mul(x0, x0) + a4, R.inv(a1));
  } else if (!a3.is_zero()) {
    throw ComputationError("tate_local: smooth fiber flagged singular");
  } else {
    x0 = R.sqrt_char2(a4);
    const Poly rhs = R.mul(R.mul(x0, x0), x0 + a2) + R.mul(a4, x0) + a6;
    y0 = R.sqrt_char2(rhs);
  }
  // verify: on the curve with both partials vanishing
  const Poly on_curve =
      R.mul(y0, y0) + R.mul(R.mul(a1, x0), y0) + R.mul(a3, y0) -
      (R.mul(R.mul(x0, x0), x0 + a2) + R.mul(a4, x0) + a6);
  const Poly fx = R.mul(R.scalar(3), R.mul(x0, x0)) +
                  R.mul(R.scalar(2), R.mul(a2, x0)) + a4 - R.mul(a1, y0);
  const Poly fy = R.mul(R.scalar(2), y0) + R.mul(a1, x0) + a3;
  if (!on_curve.is_zero() || !fx.is_zero() || !fy.is_zero())
    throw ComputationError("tate_local: singular point candidate rejected");
  return {x0, y0};
}

// Does the tangent-cone quadratic T^2 + a1 T - a2 split over the residue
// field?  (Multiplicative reduction only; b2 = a1^2 + 4 a2 is a unit.)
bool tangent_splits(const LocalRing& R, const Poly& a1, const Poly& a2) {
  if (R.K->characteristic() == 2) {
    // T = a1 Z turns it into Z^2 + Z = a2/a1^2, solvable iff the trace to
    // F_2 vanishes; a1 is a unit here because b2 = a1^2.
    return R.trace2_is_zero(R.mul(a2, R.inv(R.mul(a1, a1))));
  }
  const Poly disc = R.mul(a1, a1) + R.mul(R.scalar(4), a2);
  return R.is_square(disc);
}

ReductionData finish(const Place& v, const LocalRing& R, KodairaType type,
                     int n, int f, int v_delta, SplitType split,
                     const std::array<RationalFunction, 5>& a) {
  std::array<Poly, 5> reduced = {R.reduce(a[0]), R.reduce(a[1]),
                                 R.reduce(a[2]), R.reduce(a[3]),
                                 R.reduce(a[4])};
  return ReductionData{v,     type, n, f, v_delta, split, a,
                       std::move(reduced)};
}

}  // namespace

// --- Curve ------------------------------------------------------------------

Curve::Curve(const FiniteField& base, RationalFunction a1, RationalFunction a2,
             RationalFunction a3, RationalFunction a4, RationalFunction a6)
    : base_(&base),
      a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4),
         std::move(a6)} {
  for (const auto& ai : a_)
    if (&ai.base() != base_)
      throw std::invalid_argument("Curve: coefficient over a different field");
  if (b_invariants(base, a_).delta.is_zero())
    throw std::invalid_argument("Curve: singular model (Delta = 0)");
}

std::string Curve::to_string() const {
  std::ostringstream os;
  os << "[" << a_[0].to_string() << ", " << a_[1].to_string() << ", "
     << a_[2].to_string() << ", " << a_[3].to_string() << ", "
     << a_[4].to_string() << "]";
  return os.str();
}

std::pair<RationalFunction, RationalFunction> discriminant_and_j(
    const Curve& c) {
  const BInvariants b = b_invariants(c.base(), c.coefficients());
  const RationalFunction c4 = c4_invariant(c.base(), b);
  return {b.delta, c4 * c4 * c4 / b.delta};
}

bool is_nonisotrivial(const Curve& c) {
  const RationalFunction j = discriminant_and_j(c).second;
  return j.num().degree() > 0 || j.den().degree() > 0;
}

std::string kodaira_symbol(KodairaType type, int n) {
  switch (type) {
    case KodairaType::kI0: return "I0";
    case KodairaType::kIn: return "I" + std::to_string(n);
    case KodairaType::kII: return "II";
    case KodairaType::kIII: return "III";
    case KodairaType::kIV: return "IV";
    case KodairaType::kIStarN: return "I" + std::to_string(n) + "*";
    case KodairaType::kIVStar: return "IV*";
    case KodairaType::kIIIStar: return "III*";
    case KodairaType::kIIStar: return "II*";
  }
  return "?";
}

// --- Tate's algorithm --------------------------------------------------------

ReductionData tate_local(const Curve& c, const Place& v) {
  const FiniteField& K = c.base();
  std::array<RationalFunction, 5> a = c.coefficients();

  Poly pi(K);
  if (v.is_infinite()) {
    for (auto& ai : a) ai = substitute_inverse(ai);
    pi = Poly::variable(K);  // the place u = 0
  } else {
    pi = v.poly();
  }
  LocalRing R(K, pi);

  // Integral model: (x, y) -> (x/pi^(2e), y/pi^(3e)) scales a_i by pi^(i e).
  static constexpr int kWeights[5] = {1, 2, 3, 4, 6};
  int e = 0;
  for (int i = 0; i < 5; ++i) {
    const auto& ai = a[static_cast<size_t>(i)];
    if (ai.is_zero()) continue;
    const int vi = R.val(ai);
    if (vi < 0) e = std::max(e, (-vi + kWeights[i] - 1) / kWeights[i]);
  }
  if (e > 0) {
    for (int i = 0; i < 5; ++i)
      a[static_cast<size_t>(i)] =
          a[static_cast<size_t>(i)] *
          RationalFunction(pow(pi, kWeights[i] * e));
  }

  int last_vdelta = kValInfinity;
  for (;;) {
    BInvariants b = b_invariants(K, a);
    const int vdelta = R.val(b.delta);
    if (vdelta >= last_vdelta)
      throw ComputationError("tate_local: minimality loop does not descend");
    last_vdelta = vdelta;

    // Step 1: good reduction.
    if (vdelta == 0)
      return finish(v, R, KodairaType::kI0, 0, 0, 0,
                    SplitType::kNotApplicable, a);

    // Step 2: translate the singular point to the origin.
    {
      auto [x0, y0] = find_singular_point(R, a, b);
      rst_transform(a, RationalFunction(x0), RationalFunction(R.zero()),
                    RationalFunction(y0));
      b = b_invariants(K, a);
    }
    if (R.val(a[2]) < 1 || R.val(a[3]) < 1 || R.val(a[4]) < 1)
      throw ComputationError("tate_local: singular point not at the origin");

    if (R.val(b.b2) == 0) {
      // Multiplicative: I_n with n = v(Delta).
      const SplitType split =
          tangent_splits(R, R.reduce(a[0]), R.reduce(a[1]))
              ? SplitType::kSplit
              : SplitType::kNonsplit;
      return finish(v, R, KodairaType::kIn, vdelta, 1, vdelta, split, a);
    }

    // Step 3.
    if (R.val(a[4]) < 2)
      return finish(v, R, KodairaType::kII, 0, vdelta, vdelta,
                    SplitType::kNotApplicable, a);
    // Step 4.
    if (R.val(b.b8) < 3)
      return finish(v, R, KodairaType::kIII, 0, vdelta - 1, vdelta,
                    SplitType::kNotApplicable, a);
    // Step 5.
    if (R.val(b.b6) < 3)
      return finish(v, R, KodairaType::kIV, 0, vdelta - 2, vdelta,
                    SplitType::kNotApplicable, a);

    // Step 6: normalize to v(a1) >= 1, v(a2) >= 1, v(a3) >= 2,
    // v(a4) >= 2, v(a6) >= 3.
    if (K.characteristic() == 2) {
      const Poly s = R.sqrt_char2(R.reduce(a[1]));
      rst_transform(a, RationalFunction(K), RationalFunction(s),
                    RationalFunction(K));
      const Poly w1 = R.sqrt_char2(R.reduce(R.div_pi(a[4], 2)));
      rst_transform(a, RationalFunction(K), RationalFunction(K),
                    RationalFunction(w1 * pi));
    } else {
      auto half = RationalFunction(Poly::from_ints(K, {2}));
      rst_transform(a, RationalFunction(K), -(a[0] / half),
                    RationalFunction(K));
      rst_transform(a, RationalFunction(K), RationalFunction(K),
                    -(a[2] / half));
    }
    if (R.val(a[0]) < 1 || R.val(a[1]) < 1 || R.val(a[2]) < 2 ||
        R.val(a[3]) < 2 || R.val(a[4]) < 3)
      throw ComputationError("tate_local: step-6 normalization failed");

    // Step 7: the cubic X^3 + (a2/pi) X^2 + (a4/pi^2) X + (a6/pi^3).
    const std::vector<Poly> cubic = {R.reduce(R.div_pi(a[4], 3)),
                                     R.reduce(R.div_pi(a[3], 2)),
                                     R.reduce(R.div_pi(a[1], 1)),
                                     R.scalar(1)};
    auto alpha = R.multiple_root(cubic);
    if (!alpha)
      return finish(v, R, KodairaType::kIStarN, 0, vdelta - 4, vdelta,
                    SplitType::kNotApplicable, a);
    rst_transform(a, RationalFunction(*alpha * pi), RationalFunction(K),
                  RationalFunction(K));
    if (R.val(a[3]) < 3 || R.val(a[4]) < 4)
      throw ComputationError("tate_local: multiple-root translation failed");

    if (R.val(a[1]) == 1) {
      // Double root: type I_n^* for some n >= 1.
      int ix = 2, iy = 2, idx = 1;
      for (;;) {
        if (idx > vdelta)
          throw ComputationError("tate_local: I_n^* chain does not stop");
        // quadratic Y^2 + (a3/pi^iy) Y - a6/pi^(ix+iy)
        const std::vector<Poly> qy = {
            R.mul(R.scalar(-1), R.reduce(R.div_pi(a[4], ix + iy))),
            R.reduce(R.div_pi(a[2], iy)), R.scalar(1)};
        auto y0 = R.multiple_root(qy);
        if (!y0)
          return finish(v, R, KodairaType::kIStarN, idx, vdelta - 4 - idx,
                        vdelta, SplitType::kNotApplicable, a);
        rst_transform(a, RationalFunction(K), RationalFunction(K),
                      RationalFunction(*y0 * pow(pi, iy)));
        ++iy;
        ++idx;
        // quadratic (a2/pi) X^2 + (a4/pi^(ix+1)) X + a6/pi^(ix+iy)
        const std::vector<Poly> qx = {R.reduce(R.div_pi(a[4], ix + iy)),
                                      R.reduce(R.div_pi(a[3], ix + 1)),
                                      R.reduce(R.div_pi(a[1], 1))};
        auto x0 = R.multiple_root(qx);
        if (!x0)
          return finish(v, R, KodairaType::kIStarN, idx, vdelta - 4 - idx,
                        vdelta, SplitType::kNotApplicable, a);
        rst_transform(a, RationalFunction(*x0 * pow(pi, ix)),
                      RationalFunction(K), RationalFunction(K));
        ++ix;
        ++idx;
      }
    }

    // Triple root: v(a2) >= 2.
    if (R.val(a[1]) < 2)
      throw ComputationError("tate_local: triple-root valuation failed");
    // Step 8: quadratic Y^2 + (a3/pi^2) Y - a6/pi^4.
    const std::vector<Poly> q8 = {
        R.mul(R.scalar(-1), R.reduce(R.div_pi(a[4], 4))),
        R.reduce(R.div_pi(a[2], 2)), R.scalar(1)};
    auto y0 = R.multiple_root(q8);
    if (!y0)
      return finish(v, R, KodairaType::kIVStar, 0, vdelta - 6, vdelta,
                    SplitType::kNotApplicable, a);
    rst_transform(a, RationalFunction(K), RationalFunction(K),
                  RationalFunction(*y0 * pow(pi, 2)));
    if (R.val(a[2]) < 3 || R.val(a[4]) < 5)
      throw ComputationError("tate_local: step-8 translation failed");

    // Step 9.
    if (R.val(a[3]) < 4)
      return finish(v, R, KodairaType::kIIIStar, 0, vdelta - 7, vdelta,
                    SplitType::kNotApplicable, a);
    // Step 10.
    if (R.val(a[4]) < 6)
      return finish(v, R, KodairaType::kIIStar, 0, vdelta - 8, vdelta,
                    SplitType::kNotApplicable, a);

    // Step 11: the model was not minimal; rescale and restart.
    for (int i = 0; i < 5; ++i)
      a[static_cast<size_t>(i)] =
          R.div_pi(a[static_cast<size_t>(i)], kWeights[i]);
  }
}

// --- conductor ---------------------------------------------------------------

LocalAnalysis analyze_reduction(const Curve& c, std::uint64_t seed) {
  const FiniteField& K = c.base();
  const RationalFunction delta = b_invariants(K, c.coefficients()).delta;

  // Candidate bad places: factors of Delta's numerator and denominator and
  // of every coefficient denominator, plus the place at infinity.
  std::vector<Poly> candidates;
  auto add_factors = [&candidates, seed](const Poly& f) {
    if (f.degree() < 1) return;
    for (const auto& [irr, mult] : factor(f, seed).factors)
      candidates.push_back(irr);
  };
  add_factors(delta.num());
  add_factors(delta.den());
  for (const auto& ai : c.coefficients()) add_factors(ai.den());

  std::sort(candidates.begin(), candidates.end(), poly_lex_less);
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  LocalAnalysis out;
  for (const auto& irr : candidates)
    out.local.push_back(tate_local(c, Place::finite(irr)));
  out.local.push_back(tate_local(c, Place::infinity(K)));

  for (const auto& rd : out.local) {
    if (rd.f >= 1) {
      out.divisor.entries.emplace_back(rd.place, rd.f);
      out.divisor.degree += rd.f * rd.place.degree();
    }
  }
  return out;
}

ConductorDivisor conductor(const Curve& c, std::uint64_t seed) {
  return analyze_reduction(c, seed).divisor;
}

}  // namespace ellft
