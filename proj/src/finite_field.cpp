// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "ellft/finite_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ellft/errors.hpp"

namespace ellft {
namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// --- dense F_p[x] helpers used only for modulus selection -----------------
// Coefficient vectors are constant-term-first with no trailing zeros.

using FpPoly = std::vector<std::int64_t>;

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod,
                 std::int64_t p) {
  FpPoly prod(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  // mod is monic of degree deg = mod.size() - 1
  const size_t deg = mod.size() - 1;
  for (size_t i = prod.size(); i-- > deg;) {
    std::int64_t c = prod[i] % p;
    if (c == 0) continue;
    for (size_t j = 0; j < deg; ++j) {
      prod[i - deg + j] = ((prod[i - deg + j] - c * mod[j]) % p + p) % p;
    }
    prod[i] = 0;
  }
  prod.resize(deg);
  fp_trim(prod);
  return prod;
}

FpPoly fp_powmod(FpPoly base, std::int64_t e, const FpPoly& mod,
                 std::int64_t p) {
  FpPoly result{1};
  while (e > 0) {
    if (e & 1) result = fp_mulmod(result, base, mod, p);
    base = fp_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::int64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    // a mod b
    std::int64_t lead_inv = 1;
    {  // inverse of b's leading coefficient mod p
      std::int64_t lead = b.back() % p;
      for (std::int64_t x = 1; x < p; ++x)
        if (lead * x % p == 1) {
          lead_inv = x;
          break;
        }
    }
    while (a.size() >= b.size() && !a.empty()) {
      std::int64_t c = a.back() * lead_inv % p;
      size_t shift = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j)
        a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
      fp_trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

// Deterministic irreducibility over F_p: f of degree n is irreducible iff
// x^(p^n) = x mod f and gcd(x^(p^(n/l)) - x, f) = 1 for every prime l | n.
bool fp_irreducible(const FpPoly& f, std::int64_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 0) return false;
  if (n == 1) return true;
  std::vector<FpPoly> frob(n + 1);  // frob[k] = x^(p^k) mod f
  frob[0] = FpPoly{0, 1};
  for (int k = 1; k <= n; ++k)
    frob[k] = fp_powmod(frob[k - 1], p, f, p);
  FpPoly x{0, 1};
  if (frob[n] != x) return false;
  for (std::int64_t l : prime_factors(n)) {
    FpPoly g = frob[n / l];
    // g - x
    if (g.size() < 2) g.resize(2, 0);
    g[1] = ((g[1] - 1) % p + p) % p;
    fp_trim(g);
    FpPoly d = fp_gcd(g, f, p);
    if (d.size() != 1) return false;
  }
  return true;
}

}  // namespace

// --- FiniteField ----------------------------------------------------------

FiniteField::FiniteField(std::int64_t p, int m) : p_(p), m_(m) {
  size_ = 1;
  for (int i = 0; i < m; ++i) {
    size_ *= p;
    if (size_ > kFieldSizeBudget)
      throw BudgetError("make_field: p^m exceeds the enumeration budget");
  }
  // Deterministic modulus: first irreducible monic in the lexicographic
  // order on (c_0, ..., c_{m-1}).
  if (m == 1) {
    modulus_ = {0};  // x itself
    return;
  }
  std::vector<std::int64_t> c(m, 0);
  for (;;) {
    FpPoly f(c.begin(), c.end());
    f.push_back(1);
    if (fp_irreducible(f, p)) {
      modulus_.assign(c.begin(), c.end());
      return;
    }
    // next tuple in lex order: last coordinate cycles fastest
    int i = m - 1;
    while (i >= 0 && c[i] == p - 1) c[i--] = 0;
    if (i < 0)
      throw ComputationError("make_field: no irreducible modulus found");
    ++c[i];
  }
}

const FiniteField& make_field(std::int64_t p, int m) {
  if (!is_prime(p))
    throw std::invalid_argument("make_field: p = " + std::to_string(p) +
                                " is not prime");
  if (m < 1)
    throw std::invalid_argument("make_field: extension degree must be >= 1");
  if (m > kMaxFieldDegree)
    throw BudgetError("make_field: extension degree beyond representation");
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, int>,
                  std::unique_ptr<FiniteField>>* registry =
      new std::map<std::pair<std::int64_t, int>, std::unique_ptr<FiniteField>>;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = registry->find(key);
  if (it == registry->end()) {
    it = registry->emplace(key, std::unique_ptr<FiniteField>(
                                    new FiniteField(p, m)))
             .first;
  }
  return *it->second;
}

FieldElement FiniteField::zero() const {
  FieldElement e;
  e.field_ = this;
  return e;
}

FieldElement FiniteField::one() const { return from_int(1); }

FieldElement FiniteField::gen() const {
  FieldElement e = zero();
  if (m_ == 1) {
    // class of x in F_p[x]/(x - c) is the constant c = -modulus_[0]
    e.c_[0] = static_cast<coord_t>((p_ - modulus_[0]) % p_);
  } else {
    e.c_[1] = 1;
  }
  return e;
}

FieldElement FiniteField::from_coords(const std::vector<coord_t>& c) const {
  if (static_cast<int>(c.size()) != m_)
    throw std::invalid_argument("from_coords: wrong coordinate count");
  FieldElement e = zero();
  for (int i = 0; i < m_; ++i) {
    if (c[static_cast<size_t>(i)] >= p_)
      throw std::invalid_argument("from_coords: coordinate not reduced");
    e.c_[static_cast<unsigned>(i)] = c[static_cast<size_t>(i)];
  }
  return e;
}

FieldElement FiniteField::from_int(std::int64_t n) const {
  FieldElement e = zero();
  e.c_[0] = static_cast<coord_t>(((n % p_) + p_) % p_);
  return e;
}

FieldElement FiniteField::element_at(std::int64_t lex_index) const {
  if (lex_index < 0 || lex_index >= size_)
    throw std::invalid_argument("element_at: index out of range");
  FieldElement e = zero();
  for (int i = m_ - 1; i >= 0; --i) {
    e.c_[static_cast<unsigned>(i)] = static_cast<coord_t>(lex_index % p_);
    lex_index /= p_;
  }
  return e;
}

namespace {
std::mutex& field_cache_mutex() {
  static std::mutex mu;
  return mu;
}
}  // namespace

const FieldElement& FiniteField::generator() const {
  std::lock_guard<std::mutex> lock(field_cache_mutex());
  if (!generator_.valid()) {
    for (std::int64_t i = 1; i < size_; ++i) {
      FieldElement cand = element_at(i);
      if (multiplicative_order(cand) == size_ - 1) {
        generator_ = cand;
        break;
      }
    }
  }
  return generator_;
}

const FieldElement& FiniteField::compatible_generator() const {
  {
    std::lock_guard<std::mutex> lock(field_cache_mutex());
    if (compatible_generator_.valid()) return compatible_generator_;
  }
  // Collect the subfield constraints before taking the lock; the recursion
  // goes through make_field and the subfields' own caches.
  std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> constraints;
  for (int d = 1; d < m_; ++d) {
    if (m_ % d != 0) continue;
    const FiniteField& sub = make_field(p_, d);
    constraints.emplace_back(sub.size(),
                             minimal_polynomial(sub.compatible_generator()));
  }
  FieldElement found;
  for (std::int64_t i = 1; i < size_; ++i) {
    FieldElement cand = element_at(i);
    if (multiplicative_order(cand) != size_ - 1) continue;
    bool ok = true;
    for (const auto& [sub_size, sub_minpoly] : constraints) {
      const FieldElement norm = pow(cand, (size_ - 1) / (sub_size - 1));
      if (minimal_polynomial(norm) != sub_minpoly) {
        ok = false;
        break;
      }
    }
    if (ok) {
      found = cand;
      break;
    }
  }
  if (!found.valid())
    throw ComputationError(
        "compatible_generator: no norm-compatible generator found");
  std::lock_guard<std::mutex> lock(field_cache_mutex());
  if (!compatible_generator_.valid()) compatible_generator_ = found;
  return compatible_generator_;
}

std::int64_t FiniteField::compatible_log(const FieldElement& a) const {
  if (a.is_zero())
    throw std::invalid_argument("compatible_log of zero");
  const FieldElement g = compatible_generator();
  std::lock_guard<std::mutex> lock(field_cache_mutex());
  if (log_table_.empty()) {
    log_table_.assign(static_cast<size_t>(size_), -1);
    FieldElement x = one();
    for (std::int64_t e = 0; e < size_ - 1; ++e) {
      log_table_[static_cast<size_t>(x.lex_index())] =
          static_cast<std::int32_t>(e);
      x = x * g;
    }
  }
  return log_table_[static_cast<size_t>(a.lex_index())];
}

std::string FiniteField::to_string() const {
  return "F_" + std::to_string(size_);
}

// --- FieldElement ---------------------------------------------------------

const FiniteField& FieldElement::field() const {
  if (!field_) throw std::invalid_argument("use of null FieldElement");
  return *field_;
}

std::vector<coord_t> FieldElement::coords() const {
  return std::vector<coord_t>(c_.begin(), c_.begin() + field().degree());
}

bool FieldElement::is_zero() const {
  for (int i = 0; i < field().degree(); ++i)
    if (c_[static_cast<unsigned>(i)] != 0) return false;
  return true;
}

bool FieldElement::is_one() const { return *this == field().one(); }

std::int64_t FieldElement::lex_index() const {
  std::int64_t idx = 0;
  for (int i = 0; i < field().degree(); ++i)
    idx = idx * field().characteristic() + c_[static_cast<unsigned>(i)];
  return idx;
}

std::int64_t FieldElement::to_integer() const {
  std::int64_t idx = 0;
  for (int i = field().degree() - 1; i >= 0; --i)
    idx = idx * field().characteristic() + c_[static_cast<unsigned>(i)];
  return idx;
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < field().degree(); ++i) {
    if (i) os << ",";
    os << c_[static_cast<unsigned>(i)];
  }
  os << ")";
  return os.str();
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (&a.field() != &b.field())
    throw std::invalid_argument("field elements have different owners");
}
}  // namespace

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  for (int i = 0; i < a.field().degree(); ++i)
    if (a.c_[static_cast<unsigned>(i)] != b.c_[static_cast<unsigned>(i)])
      return false;
  return true;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const FiniteField& K = a.field();
  FieldElement r = K.zero();
  for (int i = 0; i < K.m_; ++i) {
    std::int64_t s = a.c_[static_cast<unsigned>(i)] +
                     b.c_[static_cast<unsigned>(i)];
    if (s >= K.p_) s -= K.p_;
    r.c_[static_cast<unsigned>(i)] = static_cast<coord_t>(s);
  }
  return r;
}

FieldElement operator-(const FieldElement& a) {
  const FiniteField& K = a.field();
  FieldElement r = K.zero();
  for (int i = 0; i < K.m_; ++i) {
    std::int64_t s = (K.p_ - a.c_[static_cast<unsigned>(i)]) % K.p_;
    r.c_[static_cast<unsigned>(i)] = static_cast<coord_t>(s);
  }
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return a + (-b);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const FiniteField& K = a.field();
  const int m = K.m_;
  const std::int64_t p = K.p_;
  std::array<std::int64_t, 2 * kMaxFieldDegree> prod{};
  for (int i = 0; i < m; ++i) {
    if (a.c_[static_cast<unsigned>(i)] == 0) continue;
    const std::int64_t ai = a.c_[static_cast<unsigned>(i)];
    for (int j = 0; j < m; ++j)
      prod[static_cast<unsigned>(i + j)] +=
          ai * b.c_[static_cast<unsigned>(j)];
  }
  // reduce by the monic modulus
  for (int i = 2 * m - 2; i >= m; --i) {
    std::int64_t c = prod[static_cast<unsigned>(i)] % p;
    if (c == 0) continue;
    for (int j = 0; j < m; ++j) {
      prod[static_cast<unsigned>(i - m + j)] -=
          c * K.modulus_[static_cast<size_t>(j)];
    }
  }
  FieldElement r = K.zero();
  for (int i = 0; i < m; ++i) {
    std::int64_t c = prod[static_cast<unsigned>(i)] % p;
    if (c < 0) c += p;
    r.c_[static_cast<unsigned>(i)] = static_cast<coord_t>(c);
  }
  return r;
}

FieldElement pow(const FieldElement& a, std::int64_t e) {
  const FiniteField& K = a.field();
  if (a.is_zero()) {
    if (e > 0) return K.zero();
    if (e == 0) return K.one();
    throw std::invalid_argument("pow: negative power of zero");
  }
  const std::int64_t order = K.size() - 1;
  std::int64_t r = e % order;
  if (r < 0) r += order;
  FieldElement result = K.one();
  FieldElement base = a;
  while (r > 0) {
    if (r & 1) result = result * base;
    base = base * base;
    r >>= 1;
  }
  return result;
}

FieldElement inverse(const FieldElement& a) {
  if (a.is_zero()) throw std::invalid_argument("inverse of zero");
  return pow(a, -1);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::invalid_argument("division by zero");
  return a * inverse(b);
}

std::int64_t multiplicative_order(const FieldElement& a) {
  if (a.is_zero())
    throw std::invalid_argument("multiplicative_order of zero");
  const std::int64_t n = a.field().size() - 1;
  std::int64_t order = n;
  for (std::int64_t l : prime_factors(n)) {
    while (order % l == 0 && pow(a, order / l).is_one()) order /= l;
  }
  return order;
}

FieldElement frobenius(const FieldElement& a) {
  return pow(a, a.field().characteristic());
}

std::int64_t trace_to_prime(const FieldElement& a) {
  const FiniteField& K = a.field();
  FieldElement s = K.zero();
  FieldElement x = a;
  for (int i = 0; i < K.degree(); ++i) {
    s = s + x;
    x = frobenius(x);
  }
  // The trace lands in the prime subfield: only c_0 can be nonzero.
  return s.coord(0);
}

// --- embeddings -----------------------------------------------------------

std::vector<std::int64_t> minimal_polynomial(const FieldElement& a) {
  const FiniteField& K = a.field();
  // Frobenius orbit of a
  std::vector<FieldElement> orbit{a};
  for (FieldElement x = frobenius(a); !(x == a); x = frobenius(x))
    orbit.push_back(x);
  // product of (X - conjugate), coefficients in K
  std::vector<FieldElement> c{K.one()};
  for (const FieldElement& r : orbit) {
    std::vector<FieldElement> next(c.size() + 1, K.zero());
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] += c[i] * (-r);
    }
    c = std::move(next);
  }
  std::vector<std::int64_t> out;
  for (const FieldElement& x : c) {
    for (int i = 1; i < K.degree(); ++i)
      if (x.coord(i) != 0)
        throw ComputationError(
            "minimal_polynomial: coefficient outside the prime field");
    out.push_back(x.coord(0));
  }
  return out;
}

FieldElement embed(const FieldElement& a, const FiniteField& target) {
  const FiniteField& src = a.field();
  if (&src == &target) return a;
  if (src.characteristic() != target.characteristic() ||
      target.degree() % src.degree() != 0)
    throw std::invalid_argument(
        "embed: target is not an extension of the source field");
  if (a.is_zero()) return target.zero();
  // Send the source's compatible generator to the norm power of the
  // target's; norm exponents multiply along towers, so compositions agree
  // with direct embeddings by construction.
  const std::int64_t n = (target.size() - 1) / (src.size() - 1);
  const FieldElement image_base = pow(target.compatible_generator(), n);
  return pow(image_base, src.compatible_log(a));
}

}  // namespace ellft
