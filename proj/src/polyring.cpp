// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "ellft/polyring.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ellft/errors.hpp"

namespace ellft {

// --- Poly ------------------------------------------------------------------

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly::Poly(const FiniteField& base, std::vector<FieldElement> coeffs)
    : base_(&base), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (&c.field() != base_)
      throw std::invalid_argument("Poly: coefficient from a different field");
  trim();
}

Poly Poly::from_ints(const FiniteField& base,
                     const std::vector<std::int64_t>& coeffs) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (std::int64_t v : coeffs) c.push_back(base.from_int(v));
  return Poly(base, std::move(c));
}

Poly Poly::variable(const FiniteField& base) {
  return from_ints(base, {0, 1});
}

Poly Poly::constant(const FieldElement& c) {
  return Poly(c.field(), {c});
}

Poly Poly::monomial(const FiniteField& base, int k) {
  std::vector<FieldElement> c(static_cast<size_t>(k) + 1, base.zero());
  c.back() = base.one();
  return Poly(base, std::move(c));
}

FieldElement Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return base_->zero();
  return c_[static_cast<size_t>(i)];
}

const FieldElement& Poly::leading() const {
  if (c_.empty()) throw std::invalid_argument("leading of zero polynomial");
  return c_.back();
}

bool Poly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

Poly Poly::monic() const {
  if (is_zero()) throw std::invalid_argument("monic of zero polynomial");
  return inverse(leading()) * *this;
}

Poly Poly::derivative() const {
  std::vector<FieldElement> c;
  for (int i = 1; i <= degree(); ++i)
    c.push_back(base_->from_int(i) * coeff(i));
  return Poly(*base_, std::move(c));
}

Poly Poly::reversed(int n) const {
  if (degree() > n)
    throw std::invalid_argument("reversed: degree exceeds padding");
  std::vector<FieldElement> c(static_cast<size_t>(n) + 1, base_->zero());
  for (int i = 0; i <= degree(); ++i)
    c[static_cast<size_t>(n - i)] = coeff(i);
  return Poly(*base_, std::move(c));
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return *this;
  std::vector<FieldElement> c(static_cast<size_t>(k), base_->zero());
  c.insert(c.end(), c_.begin(), c_.end());
  return Poly(*base_, std::move(c));
}

FieldElement Poly::eval(const FieldElement& x) const {
  FieldElement v = base_->zero();
  for (int i = degree(); i >= 0; --i) v = v * x + coeff(i);
  return v;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.base_ != b.base_)
    throw std::invalid_argument("polynomials over different fields");
  std::vector<FieldElement> c;
  const int n = std::max(a.degree(), b.degree());
  for (int i = 0; i <= n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
  return Poly(*a.base_, std::move(c));
}

Poly operator-(const Poly& a) {
  std::vector<FieldElement> c;
  for (const auto& x : a.c_) c.push_back(-x);
  return Poly(*a.base_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.base_ != b.base_)
    throw std::invalid_argument("polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return Poly(*a.base_);
  std::vector<FieldElement> c(
      static_cast<size_t>(a.degree() + b.degree()) + 1, a.base_->zero());
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j)
      c[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] *
                                       b.c_[static_cast<size_t>(j)];
  }
  return Poly(*a.base_, std::move(c));
}

Poly operator*(const FieldElement& s, const Poly& a) {
  std::vector<FieldElement> c;
  for (const auto& x : a.c_) c.push_back(s * x);
  return Poly(*a.base_, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.base_ != b.base_) return false;
  if (a.degree() != b.degree()) return false;
  for (int i = 0; i <= a.degree(); ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (coeff(i).is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool prime_field = base_->degree() == 1;
    std::string cs = prime_field ? std::to_string(coeff(i).coord(0))
                                 : coeff(i).to_string();
    if (i == 0) {
      os << cs;
    } else {
      if (!(prime_field && coeff(i).is_one())) os << cs << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const FiniteField& K = f.base();
  Poly r = f;
  if (f.degree() < g.degree()) return {Poly(K), r};
  const FieldElement lead_inv = inverse(g.leading());
  std::vector<FieldElement> q(
      static_cast<size_t>(f.degree() - g.degree()) + 1, K.zero());
  while (!r.is_zero() && r.degree() >= g.degree()) {
    const int shift = r.degree() - g.degree();
    const FieldElement c = r.leading() * lead_inv;
    q[static_cast<size_t>(shift)] = c;
    r = r - (c * g).shifted(shift);
  }
  return {Poly(K, std::move(q)), r};
}

Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }
Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

Poly pow_mod(const Poly& base, std::int64_t e, const Poly& mod) {
  if (e < 0) throw std::invalid_argument("pow_mod: negative exponent");
  Poly result = Poly::from_ints(base.base(), {1}) % mod;
  Poly b = base % mod;
  while (e > 0) {
    if (e & 1) result = (result * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return result;
}

Poly pow(const Poly& base, int e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  Poly result = Poly::from_ints(base.base(), {1});
  Poly b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    b = b * b;
    e >>= 1;
  }
  return result;
}

bool poly_lex_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    const std::int64_t x = a.coeff(i).lex_index();
    const std::int64_t y = b.coeff(i).lex_index();
    if (x != y) return x < y;
  }
  return false;
}

// --- irreducibility and factorization ---------------------------------------

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const FiniteField& K = f.base();
  const std::int64_t q = K.size();
  // Cheap pretest: a root in F_q means a linear factor.
  for (std::int64_t i = 0; i < q; ++i)
    if (f.eval(K.element_at(i)).is_zero()) return false;
  if (n <= 3) return true;  // no root and degree <= 3
  const Poly t = Poly::variable(K);
  // Frobenius chain: frob[k] = t^(q^k) mod f.
  std::vector<Poly> frob;
  frob.push_back(t % f);
  for (int k = 1; k <= n; ++k)
    frob.push_back(pow_mod(frob.back(), q, f));
  if (!(frob[static_cast<size_t>(n)] == t % f)) return false;
  for (int l : prime_divisors(n)) {
    Poly g = frob[static_cast<size_t>(n / l)] - t;
    if (gcd(g, f).degree() != 0) return false;
  }
  return true;
}

namespace {

// Equal-degree splitting of a squarefree product of degree-e irreducibles.
void equal_degree_split(const Poly& g, int e, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
  const FiniteField& K = g.base();
  if (g.degree() == e) {
    out.push_back(g.monic());
    return;
  }
  const std::int64_t q = K.size();
  const std::int64_t p = K.characteristic();
  for (;;) {
    // random element of F_q[t]/(g)
    std::vector<FieldElement> rc;
    for (int i = 0; i < g.degree(); ++i)
      rc.push_back(K.element_at(static_cast<std::int64_t>(
          rng() % static_cast<std::uint64_t>(q))));
    Poly r(K, std::move(rc));
    if (r.is_zero()) continue;
    Poly d(K);
    if (p == 2) {
      // trace map over F_2: r + r^2 + r^4 + ... (a*e terms for q = 2^a)
      int bits = 0;
      for (std::int64_t s = q; s > 1; s >>= 1) ++bits;
      Poly tr(K);
      Poly x = r % g;
      for (int i = 0; i < bits * e; ++i) {
        tr = (tr + x) % g;
        x = (x * x) % g;
      }
      d = gcd(tr, g);
    } else {
      // q^e could overflow for huge e; desk-scale degrees keep it in range
      std::int64_t qe = 1;
      for (int i = 0; i < e; ++i) {
        if (qe > (std::int64_t{1} << 62) / q)
          throw BudgetError("factor: equal-degree exponent overflow");
        qe *= q;
      }
      Poly h = pow_mod(r, (qe - 1) / 2, g) - Poly::from_ints(K, {1});
      d = gcd(h, g);
    }
    if (d.degree() > 0 && d.degree() < g.degree()) {
      equal_degree_split(d, e, rng, out);
      equal_degree_split(g / d, e, rng, out);
      return;
    }
  }
}

// Distinct-degree stage on a squarefree monic input.
void factor_squarefree(const Poly& f, std::mt19937_64& rng,
                       std::vector<Poly>& out) {
  const FiniteField& K = f.base();
  const std::int64_t q = K.size();
  Poly g = f;
  Poly h = Poly::variable(K) % g;
  int e = 0;
  while (g.degree() > 0 && 2 * (e + 1) <= g.degree()) {
    ++e;
    h = pow_mod(h, q, g);
    Poly d = gcd(h - Poly::variable(K), g);
    if (d.degree() > 0) {
      equal_degree_split(d, e, rng, out);
      g = g / d;
      h = h % g;
    }
  }
  if (g.degree() > 0) out.push_back(g.monic());
}

void factor_monic(const Poly& input, std::mt19937_64& rng,
                  std::map<std::vector<std::int64_t>, std::pair<Poly, int>>&
                      acc,
                  int outer_mult);

std::vector<std::int64_t> poly_key(const Poly& f) {
  std::vector<std::int64_t> key;
  key.push_back(f.degree());
  for (int i = 0; i <= f.degree(); ++i) key.push_back(f.coeff(i).lex_index());
  return key;
}

void factor_monic(const Poly& input, std::mt19937_64& rng,
                  std::map<std::vector<std::int64_t>, std::pair<Poly, int>>&
                      acc,
                  int outer_mult) {
  const FiniteField& K = input.base();
  const std::int64_t p = K.characteristic();
  Poly f = input;
  while (f.degree() > 0) {
    Poly df = f.derivative();
    if (df.is_zero()) {
      // f = g(t^p) with g's coefficients the p-th roots of f's.
      std::vector<FieldElement> gc;
      for (int i = 0; i * p <= f.degree(); ++i)
        gc.push_back(pow(f.coeff(static_cast<int>(i * p)),
                         K.size() / p));
      Poly g(K, std::move(gc));
      factor_monic(g, rng, acc, outer_mult * static_cast<int>(p));
      return;
    }
    Poly s = f / gcd(f, df);  // distinct primes of f with mult prime to p
    std::vector<Poly> irr;
    factor_squarefree(s.monic(), rng, irr);
    for (const Poly& pi : irr) {
      int mult = 0;
      for (;;) {
        auto [qt, rm] = divmod(f, pi);
        if (!rm.is_zero()) break;
        f = qt;
        ++mult;
      }
      auto key = poly_key(pi);
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, std::make_pair(pi, mult * outer_mult));
      else
        it->second.second += mult * outer_mult;
    }
    // Whatever is left has every multiplicity divisible by p and is
    // caught by the zero-derivative branch on the next pass.
  }
}

}  // namespace

Factorization factor(const Poly& f, std::uint64_t seed) {
  if (f.is_zero())
    throw std::invalid_argument("factor: zero polynomial");
  Factorization out;
  out.unit = f.leading();
  if (f.degree() == 0) return out;
  std::mt19937_64 rng(seed);
  std::map<std::vector<std::int64_t>, std::pair<Poly, int>> acc;
  factor_monic(f.monic(), rng, acc, 1);
  for (auto& [key, val] : acc) out.factors.push_back(std::move(val));
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              return poly_lex_less(a.first, b.first);
            });
  return out;
}

// --- Place -------------------------------------------------------------------

Place Place::finite(Poly monic_irreducible) {
  if (!monic_irreducible.is_monic())
    throw std::invalid_argument("Place: polynomial must be monic");
  if (!is_irreducible(monic_irreducible))
    throw std::invalid_argument("Place: polynomial must be irreducible");
  const FiniteField& base = monic_irreducible.base();
  const int deg = monic_irreducible.degree();
  return Place(base, false, std::move(monic_irreducible), deg);
}

Place Place::infinity(const FiniteField& base) {
  return Place(base, true, Poly(base), 1);
}

const Poly& Place::poly() const {
  if (infinite_)
    throw std::invalid_argument("the infinite place has no polynomial");
  return poly_;
}

std::int64_t Place::residue_size() const {
  std::int64_t s = 1;
  for (int i = 0; i < degree_; ++i) s *= base_->size();
  return s;
}

std::string Place::to_string() const {
  if (infinite_) return "inf";
  return "(" + poly_.to_string() + ")";
}

bool operator==(const Place& a, const Place& b) {
  if (a.base_ != b.base_) return false;
  if (a.infinite_ != b.infinite_) return false;
  if (a.infinite_) return true;
  return a.poly_ == b.poly_;
}

bool operator<(const Place& a, const Place& b) {
  if (a.infinite_ != b.infinite_) return b.infinite_;  // infinity last
  if (a.infinite_) return false;
  return poly_lex_less(a.poly_, b.poly_);
}

// --- RationalFunction ---------------------------------------------------------

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (&num_.base() != &den_.base())
    throw std::invalid_argument("rational function over mixed fields");
  if (den_.is_zero())
    throw std::invalid_argument("rational function with zero denominator");
  normalize();
}

RationalFunction::RationalFunction(Poly num)
    : num_(std::move(num)), den_(Poly::from_ints(num_.base(), {1})) {}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::from_ints(num_.base(), {1});
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const FieldElement lead_inv = inverse(den_.leading());
  num_ = lead_inv * num_;
  den_ = lead_inv * den_;
}

RationalFunction operator+(const RationalFunction& a,
                           const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator-(const RationalFunction& a,
                           const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a,
                           const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a,
                           const RationalFunction& b) {
  if (b.is_zero())
    throw std::invalid_argument("division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

// --- place enumeration ----------------------------------------------------------

std::vector<Place> enumerate_places(const FiniteField& base, int max_degree) {
  if (max_degree < 1)
    throw std::invalid_argument("enumerate_places: max_degree must be >= 1");
  const std::int64_t q = base.size();
  std::int64_t count = 1;
  for (int i = 0; i < max_degree; ++i) {
    count *= q;
    if (count > kFieldSizeBudget)
      throw BudgetError("enumerate_places: q^max_degree exceeds budget");
  }
  std::vector<Place> out;
  for (int k = 1; k <= max_degree; ++k) {
    // Odometer over (c_0, ..., c_{k-1}) in lexicographic order.
    std::vector<std::int64_t> idx(static_cast<size_t>(k), 0);
    for (;;) {
      std::vector<FieldElement> c;
      c.reserve(static_cast<size_t>(k) + 1);
      for (int i = 0; i < k; ++i)
        c.push_back(base.element_at(idx[static_cast<size_t>(i)]));
      c.push_back(base.one());
      Poly f(base, std::move(c));
      if (is_irreducible(f))
        out.push_back(Place(base, false, std::move(f), k));
      int i = k - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == q - 1)
        idx[static_cast<size_t>(i--)] = 0;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
    }
  }
  return out;
}

// --- residue fields -----------------------------------------------------------

ResidueField::ResidueField(const Place& v) : place_(v) {
  if (v.is_infinite())
    throw std::invalid_argument(
        "residue_field: use the coordinate change at infinity");
  const FiniteField& base = v.base();
  const int m = base.degree() * v.degree();
  field_ = &make_field(base.characteristic(), m);
  // Deterministic root of the place polynomial in the residue field.
  std::vector<FieldElement> coeffs;
  for (int i = 0; i <= v.poly().degree(); ++i)
    coeffs.push_back(embed(v.poly().coeff(i), *field_));
  for (std::int64_t i = 0; i < field_->size(); ++i) {
    FieldElement x = field_->element_at(i);
    FieldElement val = field_->zero();
    for (int j = v.poly().degree(); j >= 0; --j)
      val = val * x + coeffs[static_cast<size_t>(j)];
    if (val.is_zero()) {
      t_image_ = x;
      return;
    }
  }
  throw ComputationError("residue_field: place polynomial has no root");
}

FieldElement ResidueField::reduce(const Poly& f) const {
  const Poly r = f % place_.poly();
  FieldElement v = field_->zero();
  for (int i = r.degree(); i >= 0; --i)
    v = v * t_image_ + embed(r.coeff(i), *field_);
  return v;
}

FieldElement ResidueField::reduce(const RationalFunction& f) const {
  const FieldElement d = reduce(f.den());
  if (d.is_zero())
    throw std::domain_error("reduce: pole at the place");
  return reduce(f.num()) / d;
}

FieldElement reduce_rational(const RationalFunction& f, const Place& v) {
  return ResidueField(v).reduce(f);
}

int valuation(const Poly& f, const Place& v) {
  if (f.is_zero())
    throw std::invalid_argument("valuation of the zero polynomial");
  if (v.is_infinite()) return -f.degree();
  int n = 0;
  Poly g = f;
  for (;;) {
    auto [q, r] = divmod(g, v.poly());
    if (!r.is_zero()) return n;
    g = q;
    ++n;
    if (g.is_zero()) return n;  // unreachable: f nonzero
  }
}

int valuation(const RationalFunction& f, const Place& v) {
  if (f.is_zero())
    throw std::invalid_argument("valuation of zero");
  return valuation(f.num(), v) - valuation(f.den(), v);
}

}  // namespace ellft
