// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "ellft/lseries.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_poly.h>

#include <algorithm>
#include <complex>
#include <map>
#include <memory>
#include <utility>

#include "ellft/errors.hpp"
#include "ellft/zech_field.hpp"
#include "parallel.hpp"

namespace ellft {
namespace {

using Rep = ZechField::Rep;

// a_v of a good reduced model, coefficients in log representation.
std::int64_t good_trace_kernel(const ZechField& Z, Rep a1, Rep a2, Rep a3,
                               Rep a4, Rep a6) {
  const std::int64_t qv = Z.size();
  const auto rhs = [&](Rep x) {
    return Z.add(Z.mul(Z.add(Z.mul(Z.add(x, a2), x), a4), x), a6);
  };
  if (Z.field().characteristic() == 2) {
    // y^2 + (a1 x + a3) y = rhs(x): two solutions iff Tr(rhs/alpha^2) = 0,
    // one solution when alpha = 0 (unique square root).
    std::int64_t affine = 0;
    const auto visit = [&](Rep x) {
      const Rep alpha = Z.add(Z.mul(a1, x), a3);
      if (Z.is_zero(alpha)) {
        affine += 1;
        return;
      }
      const Rep u = Z.mul(rhs(x), Z.inv(Z.mul(alpha, alpha)));
      if (Z.trace(u) == 0) affine += 2;
    };
    visit(ZechField::kZero);
    for (Rep x = 0; x < qv - 1; ++x) visit(x);
    return qv - affine;  // q_v + 1 - (affine + 1)
  }
  // Odd characteristic: complete the square; a_v = -sum_x chi(rhs + (a1x+a3)^2/4).
  const Rep inv2 = Z.inv(Z.from_int(2));
  std::int64_t sum = 0;
  const auto visit = [&](Rep x) {
    const Rep half_alpha = Z.mul(Z.add(Z.mul(a1, x), a3), inv2);
    const Rep val = Z.add(rhs(x), Z.mul(half_alpha, half_alpha));
    if (Z.is_zero(val)) return;
    sum += Z.is_square(val) ? 1 : -1;
  };
  visit(ZechField::kZero);
  for (Rep x = 0; x < qv - 1; ++x) visit(x);
  return -sum;
}

std::vector<std::int64_t> place_key(const Place& v) {
  std::vector<std::int64_t> key;
  key.reserve(static_cast<size_t>(v.degree()));
  for (int i = 0; i < v.degree(); ++i)
    key.push_back(v.poly().coeff(i).lex_index());
  return key;
}

// Shared per-degree machinery: the residue field F_{q^k} with Zech tables,
// the embedding of F_q, and a root in F_{q^k} for every degree-k place,
// obtained from the Frobenius orbits of the field elements (an orbit of
// size exactly k is the root set of one monic irreducible of degree k).
struct DegreeTable {
  const FiniteField* base = nullptr;
  int k = 0;
  const FiniteField* big = nullptr;
  std::unique_ptr<ZechField> Z;
  std::vector<Rep> embed_base;            // F_q lex index -> Rep
  std::map<Rep, std::int64_t> unembed;    // Rep -> F_q lex index
  std::map<std::vector<std::int64_t>, Rep> roots;
};

DegreeTable build_degree_table(const FiniteField& base, int k) {
  DegreeTable T;
  T.base = &base;
  T.k = k;
  T.big = &make_field(base.characteristic(), base.degree() * k);
  T.Z = std::make_unique<ZechField>(*T.big);
  const std::int64_t q = base.size();
  const std::int64_t qv = T.big->size();

  T.embed_base.resize(static_cast<size_t>(q));
  for (std::int64_t i = 0; i < q; ++i) {
    const FieldElement e = base.element_at(i);
    const Rep r = T.Z->from_element(&base == T.big ? e : embed(e, *T.big));
    T.embed_base[static_cast<size_t>(i)] = r;
    T.unembed[r] = i;
  }

  // Frobenius orbits x -> x^q; an orbit of size k yields one degree-k place
  // together with a root of its polynomial.
  if (k == 1) {
    // Minimal polynomial of c is t - c; include zero explicitly.
    for (std::int64_t i = 0; i < q; ++i) {
      const FieldElement c = base.element_at(i);
      T.roots[{(-c).lex_index()}] = T.embed_base[static_cast<size_t>(i)];
    }
    return T;
  }
  std::vector<char> visited(static_cast<size_t>(qv - 1), 0);
  for (Rep start = 0; start < qv - 1; ++start) {
    if (visited[static_cast<size_t>(start)]) continue;
    // collect the orbit of logs under multiplication by q mod (qv - 1)
    std::vector<Rep> orbit;
    Rep cur = start;
    do {
      visited[static_cast<size_t>(cur)] = 1;
      orbit.push_back(cur);
      cur = static_cast<Rep>(
          (static_cast<std::int64_t>(cur) * q) % (qv - 1));
    } while (cur != start);
    if (static_cast<int>(orbit.size()) != k) continue;
    // minimal polynomial prod_j (X - g^(orbit_j)) over the big field
    std::vector<Rep> mp{T.Z->one()};
    for (const Rep root : orbit) {
      std::vector<Rep> next(mp.size() + 1, ZechField::kZero);
      const Rep mroot = T.Z->neg(root);
      for (size_t i = 0; i < mp.size(); ++i) {
        next[i + 1] = T.Z->add(next[i + 1], mp[i]);
        next[i] = T.Z->add(next[i], T.Z->mul(mp[i], mroot));
      }
      mp = std::move(next);
    }
    std::vector<std::int64_t> key;
    key.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
      const auto it = T.unembed.find(mp[static_cast<size_t>(i)]);
      if (it == T.unembed.end())
        throw ComputationError(
            "place table: orbit polynomial not over the base field");
      key.push_back(it->second);
    }
    T.roots.emplace(std::move(key), start);
  }
  return T;
}

Rep eval_at_root(const DegreeTable& T, const Poly& f, Rep theta) {
  Rep v = ZechField::kZero;
  for (int i = f.degree(); i >= 0; --i)
    v = T.Z->add(T.Z->mul(v, theta),
                 T.embed_base[static_cast<size_t>(f.coeff(i).lex_index())]);
  return v;
}

std::int64_t count_trace_at(const DegreeTable& T, Rep theta,
                            const std::array<RationalFunction, 5>& a) {
  Rep r[5];
  for (int i = 0; i < 5; ++i) {
    const auto& ai = a[static_cast<size_t>(i)];
    const Rep num = eval_at_root(T, ai.num(), theta);
    const Rep den = eval_at_root(T, ai.den(), theta);
    r[i] = T.Z->mul(num, T.Z->inv(den));
  }
  return good_trace_kernel(*T.Z, r[0], r[1], r[2], r[3], r[4]);
}

std::int64_t count_trace_reduced(const DegreeTable& T, Rep theta,
                                 const std::array<Poly, 5>& reduced) {
  Rep r[5];
  for (int i = 0; i < 5; ++i)
    r[i] = eval_at_root(T, reduced[static_cast<size_t>(i)], theta);
  return good_trace_kernel(*T.Z, r[0], r[1], r[2], r[3], r[4]);
}

LocalFactorKind kind_of(const ReductionData& rd) {
  if (rd.good()) return LocalFactorKind::kGood;
  if (rd.multiplicative())
    return rd.split == SplitType::kSplit
               ? LocalFactorKind::kSplitMultiplicative
               : LocalFactorKind::kNonsplitMultiplicative;
  return LocalFactorKind::kAdditive;
}

std::int64_t residue_cardinality(const FiniteField& base, int degree) {
  std::int64_t qv = 1;
  for (int i = 0; i < degree; ++i) qv *= base.size();
  return qv;
}

}  // namespace

// --- public per-place trace -------------------------------------------------

std::int64_t trace_of_frobenius(const Curve& c, const Place& v,
                                const ReductionData& data) {
  if (!(data.place == v))
    throw std::invalid_argument("trace_of_frobenius: mismatched data");
  switch (kind_of(data)) {
    case LocalFactorKind::kSplitMultiplicative: return 1;
    case LocalFactorKind::kNonsplitMultiplicative: return -1;
    case LocalFactorKind::kAdditive: return 0;
    case LocalFactorKind::kGood: break;
  }
  if (v.is_infinite()) {
    const ZechField Z(c.base());
    Rep r[5];
    for (int i = 0; i < 5; ++i)
      r[i] = Z.from_element(
          data.reduced_model[static_cast<size_t>(i)].coeff(0));
    return good_trace_kernel(Z, r[0], r[1], r[2], r[3], r[4]);
  }
  const ResidueField RF(v);
  const ZechField Z(RF.field());
  Rep r[5];
  for (int i = 0; i < 5; ++i)
    r[i] = Z.from_element(
        RF.reduce(data.reduced_model[static_cast<size_t>(i)]));
  return good_trace_kernel(Z, r[0], r[1], r[2], r[3], r[4]);
}

// --- the truncated Euler product ---------------------------------------------

LSeriesResult l_series(const Curve& c, int extra_coeffs, int threads,
                       std::uint64_t seed) {
  if (extra_coeffs < 0)
    throw std::invalid_argument("l_series: extra_coeffs must be >= 0");
  if (!is_nonisotrivial(c))
    throw std::invalid_argument("l_series: curve must be non-isotrivial");
  const FiniteField& base = c.base();

  LSeriesResult out;
  LocalAnalysis analysis = analyze_reduction(c, seed);
  out.conductor = analysis.divisor;
  const int D = analysis.divisor.degree - 4;
  if (D < 0)
    throw ComputationError("l_series: conductor degree below 4 at genus 0");
  const int N = D + extra_coeffs;

  std::map<std::vector<std::int64_t>, const ReductionData*> bad;
  const ReductionData* inf_data = nullptr;
  for (const auto& rd : analysis.local) {
    if (rd.place.is_infinite())
      inf_data = &rd;
    else
      bad[place_key(rd.place)] = &rd;
  }

  const std::vector<Place> places =
      N >= 1 ? enumerate_places(base, N) : std::vector<Place>{};

  std::vector<LocalFactorKind> kinds(places.size(), LocalFactorKind::kGood);
  std::vector<std::int64_t> avals(places.size(), 0);
  // Good places needing a point count, grouped by degree.
  std::vector<std::vector<std::pair<size_t, const ReductionData*>>> jobs(
      static_cast<size_t>(N) + 1);
  for (size_t i = 0; i < places.size(); ++i) {
    const auto it = bad.find(place_key(places[i]));
    const ReductionData* rd = it == bad.end() ? nullptr : it->second;
    if (rd && !rd->good()) {
      kinds[i] = kind_of(*rd);
      avals[i] = kinds[i] == LocalFactorKind::kSplitMultiplicative ? 1
                 : kinds[i] == LocalFactorKind::kNonsplitMultiplicative ? -1
                                                                        : 0;
      continue;
    }
    jobs[static_cast<size_t>(places[i].degree())].emplace_back(i, rd);
  }

  for (int k = 1; k <= N; ++k) {
    auto& batch = jobs[static_cast<size_t>(k)];
    if (batch.empty()) continue;
    const DegreeTable T = build_degree_table(base, k);
    parallel_for(static_cast<std::int64_t>(batch.size()), threads,
                 [&](std::int64_t j) {
                   const auto& [idx, rd] = batch[static_cast<size_t>(j)];
                   const auto it = T.roots.find(place_key(places[idx]));
                   if (it == T.roots.end())
                     throw ComputationError(
                         "l_series: place missing from the orbit table");
                   avals[idx] =
                       rd ? count_trace_reduced(T, it->second,
                                                rd->reduced_model)
                          : count_trace_at(T, it->second, c.coefficients());
                 });
  }

  // Infinite place.
  if (inf_data == nullptr)
    throw ComputationError("l_series: missing data at infinity");
  const LocalFactorKind inf_kind = kind_of(*inf_data);
  std::int64_t inf_a = 0;
  if (inf_kind == LocalFactorKind::kGood) {
    const ZechField Z(base);
    Rep r[5];
    for (int i = 0; i < 5; ++i)
      r[i] = Z.from_element(
          inf_data->reduced_model[static_cast<size_t>(i)].coeff(0));
    inf_a = good_trace_kernel(Z, r[0], r[1], r[2], r[3], r[4]);
  } else if (inf_kind == LocalFactorKind::kSplitMultiplicative) {
    inf_a = 1;
  } else if (inf_kind == LocalFactorKind::kNonsplitMultiplicative) {
    inf_a = -1;
  }

  // Divide 1 by each local factor, truncating at order N.
  std::vector<BigInt> acc(static_cast<size_t>(N) + 1, BigInt(0));
  acc[0] = 1;
  const auto divide_by_local = [&](int d, std::int64_t a, std::int64_t qv,
                                   bool good) {
    if (d > N) return;
    for (int j = d; j <= N; ++j) {
      acc[static_cast<size_t>(j)] += a * acc[static_cast<size_t>(j - d)];
      if (good && j >= 2 * d)
        acc[static_cast<size_t>(j)] -=
            qv * acc[static_cast<size_t>(j - 2 * d)];
    }
  };

  out.traces.entries.reserve(places.size() + 1);
  for (size_t i = 0; i < places.size(); ++i) {
    const std::int64_t qv = residue_cardinality(base, places[i].degree());
    out.traces.entries.push_back(
        TraceEntry{places[i], kinds[i], avals[i], qv});
    switch (kinds[i]) {
      case LocalFactorKind::kGood:
        divide_by_local(places[i].degree(), avals[i], qv, true);
        break;
      case LocalFactorKind::kSplitMultiplicative:
      case LocalFactorKind::kNonsplitMultiplicative:
        divide_by_local(places[i].degree(), avals[i], qv, false);
        break;
      case LocalFactorKind::kAdditive:
        break;
    }
  }
  out.traces.entries.push_back(
      TraceEntry{Place::infinity(base), inf_kind, inf_a, base.size()});
  if (inf_kind == LocalFactorKind::kGood)
    divide_by_local(1, inf_a, base.size(), true);
  else if (inf_kind != LocalFactorKind::kAdditive)
    divide_by_local(1, inf_a, base.size(), false);

  out.L.q = base.size();
  out.L.degree = D;
  out.L.coeffs.assign(acc.begin(), acc.begin() + D + 1);
  out.tail.assign(acc.begin() + D + 1, acc.end());
  out.tail_vanishes = std::all_of(out.tail.begin(), out.tail.end(),
                                  [](const BigInt& x) { return x == 0; });
  out.bad_places = std::move(analysis.local);
  return out;
}

LPolynomial l_polynomial(const Curve& c, int extra_coeffs) {
  LSeriesResult r = l_series(c, extra_coeffs, 0);
  if (!r.tail_vanishes)
    throw ComputationError(
        "l_polynomial: truncated product has a nonzero coefficient past "
        "degree D; local data is inconsistent");
  return std::move(r.L);
}

// --- functional equation, Riemann hypothesis, rank ---------------------------

int functional_equation_sign(const LPolynomial& L) {
  const int D = L.degree;
  if (static_cast<int>(L.coeffs.size()) != D + 1)
    throw std::invalid_argument("functional_equation_sign: malformed input");
  for (const int W : {1, -1}) {
    bool ok = true;
    for (int i = 0; 2 * i <= D; ++i) {
      const BigInt qpow = boost::multiprecision::pow(
          BigInt(L.q), static_cast<unsigned>(D - 2 * i));
      if (L.coeffs[static_cast<size_t>(D - i)] !=
          W * qpow * L.coeffs[static_cast<size_t>(i)]) {
        ok = false;
        break;
      }
    }
    if (ok) return W;
  }
  throw ComputationError(
      "functional_equation_sign: no sign satisfies the symmetry");
}

namespace {

using RatPoly = std::vector<BigRational>;  // constant term first

int rp_degree(const RatPoly& f) { return static_cast<int>(f.size()) - 1; }

void rp_trim(RatPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

RatPoly rp_derivative(const RatPoly& f) {
  RatPoly d;
  for (size_t i = 1; i < f.size(); ++i)
    d.push_back(f[i] * BigRational(static_cast<std::int64_t>(i)));
  rp_trim(d);
  return d;
}

RatPoly rp_monic(RatPoly f) {
  rp_trim(f);
  if (f.empty()) return f;
  const BigRational lead = f.back();
  for (auto& c : f) c /= lead;
  return f;
}

// in-place remainder; returns quotient
RatPoly rp_divmod(RatPoly& r, const RatPoly& g) {
  RatPoly q(r.size() > g.size() ? r.size() - g.size() + 1 : 1,
            BigRational(0));
  while (rp_degree(r) >= rp_degree(g) && !r.empty()) {
    const int shift = rp_degree(r) - rp_degree(g);
    const BigRational c = r.back() / g.back();
    q[static_cast<size_t>(shift)] = c;
    for (size_t i = 0; i < g.size(); ++i)
      r[static_cast<size_t>(shift) + i] -= c * g[i];
    rp_trim(r);
  }
  rp_trim(q);
  return q;
}

RatPoly rp_gcd(RatPoly a, RatPoly b) {
  rp_trim(a);
  rp_trim(b);
  while (!b.empty()) {
    rp_divmod(a, b);
    std::swap(a, b);
  }
  return rp_monic(a);
}

RatPoly rp_divide_exact(const RatPoly& f, const RatPoly& g) {
  RatPoly r = f;
  RatPoly q = rp_divmod(r, g);
  if (!r.empty())
    throw ComputationError("squarefree decomposition: inexact division");
  return q;
}

// Yun's algorithm (characteristic zero): f = prod part_i^i.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(RatPoly f) {
  f = rp_monic(f);
  std::vector<std::pair<RatPoly, int>> out;
  if (rp_degree(f) < 1) return out;
  RatPoly g = rp_gcd(f, rp_derivative(f));
  RatPoly w = rp_divide_exact(f, g);
  int i = 1;
  while (rp_degree(w) > 0) {
    RatPoly y = rp_gcd(w, g);
    RatPoly z = rp_divide_exact(w, y);
    if (rp_degree(z) > 0) out.emplace_back(rp_monic(z), i);
    w = std::move(y);
    g = rp_divide_exact(g, w);
    ++i;
  }
  return out;
}

std::complex<double> rp_eval(const RatPoly& f, std::complex<double> z) {
  std::complex<double> v = 0.0;
  for (auto it = f.rbegin(); it != f.rend(); ++it)
    v = v * z + it->convert_to<double>();
  return v;
}

std::vector<std::complex<double>> roots_of_squarefree(const RatPoly& f) {
  const int n = rp_degree(f);
  std::vector<std::complex<double>> roots;
  if (n < 1) return roots;
  if (n == 1) {
    roots.push_back(std::complex<double>(
        (-f[0] / f[1]).convert_to<double>(), 0.0));
    return roots;
  }
  gsl_set_error_handler_off();
  std::vector<double> a(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    a[static_cast<size_t>(i)] = f[static_cast<size_t>(i)].convert_to<double>();
  std::vector<double> z(2 * static_cast<size_t>(n));
  gsl_poly_complex_workspace* ws =
      gsl_poly_complex_workspace_alloc(static_cast<size_t>(n) + 1);
  const int status =
      gsl_poly_complex_solve(a.data(), static_cast<size_t>(n) + 1, ws,
                             z.data());
  gsl_poly_complex_workspace_free(ws);
  if (status != GSL_SUCCESS)
    throw ComputationError(
        "verify_riemann_hypothesis: root finder did not converge");
  const RatPoly df = rp_derivative(f);
  for (int i = 0; i < n; ++i) {
    std::complex<double> r(z[static_cast<size_t>(2 * i)],
                           z[static_cast<size_t>(2 * i + 1)]);
    for (int it = 0; it < 8; ++it) {  // Newton polish on the squarefree part
      const std::complex<double> d = rp_eval(df, r);
      if (std::abs(d) == 0.0) break;
      r -= rp_eval(f, r) / d;
    }
    roots.push_back(r);
  }
  return roots;
}

}  // namespace

bool verify_riemann_hypothesis(const LPolynomial& L, double tol) {
  if (tol <= 0)
    throw std::invalid_argument("verify_riemann_hypothesis: tol must be > 0");
  if (L.degree == 0) return true;
  RatPoly f;
  for (const auto& c : L.coeffs) f.push_back(BigRational(c));
  const auto parts = squarefree_decomposition(f);
  int total = 0;
  for (const auto& [part, mult] : parts) total += rp_degree(part) * mult;
  if (total != L.degree)
    throw ComputationError(
        "verify_riemann_hypothesis: squarefree decomposition mismatch");
  const double target = 1.0 / static_cast<double>(L.q);
  for (const auto& [part, mult] : parts) {
    for (const auto& r : roots_of_squarefree(part)) {
      if (std::abs(std::abs(r) - target) >= tol) return false;
    }
  }
  return true;
}

AnalyticRank analytic_rank(const LPolynomial& L) {
  AnalyticRank out;
  std::vector<BigInt> r = L.coeffs;
  for (;;) {
    if (r.size() <= 1) break;
    // candidate quotient of division by (1 - qT)
    std::vector<BigInt> g(r.size() - 1);
    BigInt carry(0);
    for (size_t j = 0; j + 1 < r.size(); ++j) {
      carry = r[j] + L.q * carry;
      g[j] = carry;
    }
    const BigInt remainder = r.back() + L.q * carry;
    if (remainder != 0) break;
    r = std::move(g);
    ++out.rank;
  }
  // leading = R(1/q), exactly
  BigRational value(0);
  const BigRational invq(BigInt(1), BigInt(L.q));
  for (auto it = r.rbegin(); it != r.rend(); ++it)
    value = value * invq + BigRational(*it);
  out.leading = value;
  return out;
}

bool hasse_bound_ok(const TraceTable& traces) {
  for (const auto& e : traces.entries) {
    if (e.kind != LocalFactorKind::kGood) continue;
    if (e.a * e.a > 4 * e.qv) return false;
  }
  return true;
}

}  // namespace ellft
