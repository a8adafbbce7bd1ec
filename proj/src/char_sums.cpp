// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "ellft/char_sums.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ellft/errors.hpp"

namespace ellft {

namespace {

std::shared_ptr<const ZechField> shared_tables(const FiniteField& field) {
  static std::mutex mu;
  static std::map<const FiniteField*, std::shared_ptr<const ZechField>>*
      cache = new std::map<const FiniteField*,
                           std::shared_ptr<const ZechField>>;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache->find(&field);
  if (it == cache->end())
    it = cache->emplace(&field, std::make_shared<ZechField>(field)).first;
  return it->second;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

// --- characters -------------------------------------------------------------

MultiplicativeCharacter::MultiplicativeCharacter(const FiniteField& field,
                                                 std::int64_t order,
                                                 std::int64_t index)
    : field_(&field), tables_(shared_tables(field)), order_(order) {
  if (order < 1 || (field.size() - 1) % order != 0)
    throw std::invalid_argument(
        "MultiplicativeCharacter: order must divide r - 1");
  index_ = index % order;
  if (index_ < 0) index_ += order;
}

std::optional<std::int64_t> MultiplicativeCharacter::exponent(
    const FieldElement& x) const {
  const ZechField::Rep r = tables_->from_element(x);
  if (tables_->is_zero(r)) return std::nullopt;
  // chi(g^j) = zeta^(index j); logs are exponents on the deterministic g.
  return (index_ * (tables_->log(r) % order_)) % order_;
}

std::complex<double> MultiplicativeCharacter::value(
    const FieldElement& x) const {
  const auto e = exponent(x);
  if (!e) return {0.0, 0.0};
  const double ang = kTwoPi * static_cast<double>(*e) /
                     static_cast<double>(order_);
  return {std::cos(ang), std::sin(ang)};
}

std::complex<double> gauss_sum_numeric(const MultiplicativeCharacter& chi) {
  const ZechField& Z = chi.tables();
  const std::int64_t r = Z.size();
  const std::int64_t p = chi.field().characteristic();
  const std::int64_t n = chi.order();
  // chi(g^j) psi(g^j) accumulated over j; both character values come from
  // small root-of-unity tables.
  std::vector<std::complex<double>> zeta_n(static_cast<size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    const double ang = kTwoPi * static_cast<double>(k) /
                       static_cast<double>(n);
    zeta_n[static_cast<size_t>(k)] = {std::cos(ang), std::sin(ang)};
  }
  std::vector<std::complex<double>> zeta_p(static_cast<size_t>(p));
  for (std::int64_t k = 0; k < p; ++k) {
    const double ang = kTwoPi * static_cast<double>(k) /
                       static_cast<double>(p);
    zeta_p[static_cast<size_t>(k)] = {std::cos(ang), std::sin(ang)};
  }
  std::complex<double> sum{0.0, 0.0};
  for (std::int64_t j = 0; j < r - 1; ++j) {
    const std::int64_t ce = (chi.index() * (j % n)) % n;
    const int tr = Z.trace(static_cast<ZechField::Rep>(j));
    sum += zeta_n[static_cast<size_t>(ce)] * zeta_p[static_cast<size_t>(tr)];
  }
  return sum;
}

// --- cyclotomic integers -------------------------------------------------------

const std::vector<BigInt>& cyclotomic_polynomial(std::int64_t d) {
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<BigInt>>* cache =
      new std::map<std::int64_t, std::vector<BigInt>>;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache->find(d);
  if (it != cache->end()) return it->second;
  if (d < 1)
    throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");

  // x^d - 1 divided by every lower-order cyclotomic polynomial.
  std::function<std::vector<BigInt>(std::int64_t)> compute =
      [&](std::int64_t m) -> std::vector<BigInt> {
    auto hit = cache->find(m);
    if (hit != cache->end()) return hit->second;
    std::vector<BigInt> num(static_cast<size_t>(m) + 1, BigInt(0));
    num.front() = -1;
    num.back() = 1;
    for (std::int64_t e = 1; e < m; ++e) {
      if (m % e != 0) continue;
      const std::vector<BigInt> phi_e = compute(e);
      const size_t deg_e = phi_e.size() - 1;
      // exact division num /= phi_e (monic)
      std::vector<BigInt> quot(num.size() - deg_e, BigInt(0));
      for (size_t i = num.size(); i-- > deg_e;) {
        const BigInt c = num[i];
        if (c == 0) continue;
        const size_t shift = i - deg_e;
        quot[shift] = c;
        for (size_t j = 0; j < phi_e.size(); ++j)
          num[shift + j] -= c * phi_e[j];
      }
      for (const auto& c : num)
        if (c != 0)
          throw ComputationError("cyclotomic_polynomial: inexact division");
      num = std::move(quot);
    }
    cache->emplace(m, num);
    return num;
  };
  compute(d);
  return cache->at(d);
}

namespace {

std::vector<BigInt> reduce_mod_cyclotomic(std::int64_t order,
                                          std::vector<BigInt> coeffs) {
  const std::vector<BigInt>& phi = cyclotomic_polynomial(order);
  const size_t deg = phi.size() - 1;  // = euler phi(order)
  // First fold exponents mod order (zeta^order = 1), then divide by phi.
  if (coeffs.size() > static_cast<size_t>(order)) {
    std::vector<BigInt> folded(static_cast<size_t>(order), BigInt(0));
    for (size_t i = 0; i < coeffs.size(); ++i)
      folded[i % static_cast<size_t>(order)] += coeffs[i];
    coeffs = std::move(folded);
  }
  for (size_t i = coeffs.size(); i-- > deg;) {
    const BigInt c = coeffs[i];
    if (c == 0) continue;
    const size_t shift = i - deg;
    for (size_t j = 0; j < phi.size(); ++j)
      coeffs[shift + j] -= c * phi[j];
  }
  coeffs.resize(deg);
  return coeffs;
}

}  // namespace

CyclotomicInt::CyclotomicInt(std::int64_t order, std::vector<BigInt> coords)
    : order_(order), c_(std::move(coords)) {
  const size_t deg = cyclotomic_polynomial(order).size() - 1;
  if (c_.size() != deg)
    throw std::invalid_argument("CyclotomicInt: wrong coordinate length");
}

CyclotomicInt CyclotomicInt::zero(std::int64_t order) {
  const size_t deg = cyclotomic_polynomial(order).size() - 1;
  return CyclotomicInt(order, std::vector<BigInt>(deg, BigInt(0)));
}

CyclotomicInt CyclotomicInt::from_integer(std::int64_t order,
                                          const BigInt& n) {
  CyclotomicInt z = zero(order);
  z.c_[0] = n;
  return z;
}

CyclotomicInt CyclotomicInt::root_power(std::int64_t order, std::int64_t k) {
  k %= order;
  if (k < 0) k += order;
  std::vector<BigInt> coeffs(static_cast<size_t>(k) + 1, BigInt(0));
  coeffs.back() = 1;
  return from_polynomial(order, std::move(coeffs));
}

CyclotomicInt CyclotomicInt::from_polynomial(std::int64_t order,
                                             std::vector<BigInt> coeffs) {
  return CyclotomicInt(order, reduce_mod_cyclotomic(order, std::move(coeffs)));
}

bool CyclotomicInt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const BigInt& x) { return x == 0; });
}

CyclotomicInt CyclotomicInt::conj() const {
  std::vector<BigInt> coeffs(static_cast<size_t>(order_), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    const size_t e = i == 0 ? 0 : static_cast<size_t>(order_) - i;
    coeffs[e] += c_[i];
  }
  return from_polynomial(order_, std::move(coeffs));
}

std::complex<double> CyclotomicInt::to_complex() const {
  std::complex<double> sum{0.0, 0.0};
  for (size_t i = 0; i < c_.size(); ++i) {
    const double ang = kTwoPi * static_cast<double>(i) /
                       static_cast<double>(order_);
    sum += c_[i].convert_to<double>() *
           std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return sum;
}

std::string CyclotomicInt::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  os << "] (zeta_" << order_ << " power basis)";
  return os.str();
}

CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.order_ != b.order_)
    throw std::invalid_argument("CyclotomicInt: mixed orders");
  std::vector<BigInt> c = a.c_;
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  return CyclotomicInt(a.order_, std::move(c));
}

CyclotomicInt operator-(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.order_ != b.order_)
    throw std::invalid_argument("CyclotomicInt: mixed orders");
  std::vector<BigInt> c = a.c_;
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
  return CyclotomicInt(a.order_, std::move(c));
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.order_ != b.order_)
    throw std::invalid_argument("CyclotomicInt: mixed orders");
  std::vector<BigInt> prod(a.c_.size() + b.c_.size(), BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      prod[i + j] += a.c_[i] * b.c_[j];
  }
  return CyclotomicInt::from_polynomial(a.order_, std::move(prod));
}

bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
  return a.order_ == b.order_ && a.c_ == b.c_;
}

// --- Jacobi sums and purity ---------------------------------------------------

CyclotomicInt jacobi_sum_exact(const MultiplicativeCharacter& chi1,
                               const MultiplicativeCharacter& chi2) {
  if (&chi1.field() != &chi2.field())
    throw std::invalid_argument("jacobi_sum_exact: different fields");
  const std::int64_t d = std::lcm(chi1.order(), chi2.order());
  const std::int64_t s1 = chi1.index() * (d / chi1.order());
  const std::int64_t s2 = chi2.index() * (d / chi2.order());
  if ((s1 + s2) % d == 0)
    throw std::invalid_argument(
        "jacobi_sum_exact: chi1 chi2 must be nontrivial");

  const ZechField& Z = chi1.tables();
  const std::int64_t r = Z.size();
  std::vector<BigInt> counts(static_cast<size_t>(d), BigInt(0));
  const ZechField::Rep one = Z.one();
  for (std::int64_t j = 0; j < r - 1; ++j) {
    const auto x = static_cast<ZechField::Rep>(j);
    if (x == one) continue;  // x = 1 excluded (1 - x = 0)
    const ZechField::Rep y = Z.sub(one, x);
    const std::int64_t e =
        (s1 * (Z.log(x) % d) + s2 * (Z.log(y) % d)) % d;
    counts[static_cast<size_t>(e)] += 1;
  }
  return CyclotomicInt::from_polynomial(d, std::move(counts));
}

bool purity_check(const CyclotomicInt& J, std::int64_t p, int n) {
  if (n < 1) throw std::invalid_argument("purity_check: n must be >= 1");
  const BigInt p2n = boost::multiprecision::pow(
      BigInt(p), static_cast<unsigned>(2 * n));
  const CyclotomicInt norm = J * J.conj();
  if (norm != CyclotomicInt::from_integer(J.order(), p2n))
    throw std::domain_error(
        "purity_check: J conj(J) != p^(2n); input is outside the "
        "supersingular framing");
  const BigInt pn =
      boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(n));
  for (std::int64_t k = 0; k < J.order(); ++k) {
    const CyclotomicInt candidate =
        CyclotomicInt::from_integer(J.order(), pn) *
        CyclotomicInt::root_power(J.order(), k);
    if (J == candidate) return true;
    if (J == CyclotomicInt::zero(J.order()) - candidate) return true;
  }
  return false;
}

}  // namespace ellft
