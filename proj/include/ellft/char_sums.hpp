// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFT_CHAR_SUMS_HPP_
#define ELLFT_CHAR_SUMS_HPP_

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ellft/lseries.hpp"  // BigInt
#include "ellft/zech_field.hpp"

namespace ellft {

/// Multiplicative character of F_r^x, labeled by the exponent on the
/// deterministic generator g: chi(g) = zeta_order^index.  chi(0) = 0.
class MultiplicativeCharacter {
 public:
  MultiplicativeCharacter(const FiniteField& field, std::int64_t order,
                          std::int64_t index);

  const FiniteField& field() const { return *field_; }
  std::int64_t order() const { return order_; }
  std::int64_t index() const { return index_; }
  bool trivial() const { return index_ == 0; }

  // k with chi(x) = zeta_order^k, or nullopt for x = 0.
  std::optional<std::int64_t> exponent(const FieldElement& x) const;
  std::complex<double> value(const FieldElement& x) const;

  const ZechField& tables() const { return *tables_; }

 private:
  const FiniteField* field_;
  std::shared_ptr<const ZechField> tables_;
  std::int64_t order_;
  std::int64_t index_;
};

/// g(chi) = sum over x != 0 of chi(x) exp(2 pi i Tr(x)/p), in floating
/// complex arithmetic.  |g(chi)|^2 = r for nontrivial chi.
std::complex<double> gauss_sum_numeric(const MultiplicativeCharacter& chi);

/// Exact element of Z[zeta_d], stored in the power basis
/// 1, zeta, ..., zeta^(phi(d)-1) after reduction modulo the d-th
/// cyclotomic polynomial.
class CyclotomicInt {
 public:
  CyclotomicInt(std::int64_t order, std::vector<BigInt> coords);

  static CyclotomicInt zero(std::int64_t order);
  static CyclotomicInt from_integer(std::int64_t order, const BigInt& n);
  static CyclotomicInt root_power(std::int64_t order, std::int64_t k);
  // Reduce sum coeffs[i] zeta^i (any length) into the power basis.
  static CyclotomicInt from_polynomial(std::int64_t order,
                                       std::vector<BigInt> coeffs);

  std::int64_t order() const { return order_; }
  const std::vector<BigInt>& coords() const { return c_; }
  bool is_zero() const;

  CyclotomicInt conj() const;  // zeta -> zeta^(-1)
  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend CyclotomicInt operator+(const CyclotomicInt&, const CyclotomicInt&);
  friend CyclotomicInt operator-(const CyclotomicInt&, const CyclotomicInt&);
  friend CyclotomicInt operator*(const CyclotomicInt&, const CyclotomicInt&);
  friend bool operator==(const CyclotomicInt&, const CyclotomicInt&);
  friend bool operator!=(const CyclotomicInt& a, const CyclotomicInt& b) {
    return !(a == b);
  }

 private:
  std::int64_t order_;
  std::vector<BigInt> c_;
};

/// Coefficients of the d-th cyclotomic polynomial (constant term first),
/// by exact integer recursion: division of x^d - 1 by the lower ones.
const std::vector<BigInt>& cyclotomic_polynomial(std::int64_t d);

/// J(chi1, chi2) = sum over x != 0, 1 of chi1(x) chi2(1-x), accumulated
/// exactly in Z[zeta_d] with d = lcm of the character orders.  Requires the
/// same field and chi1 chi2 nontrivial.
CyclotomicInt jacobi_sum_exact(const MultiplicativeCharacter& chi1,
                               const MultiplicativeCharacter& chi2);

/// True iff J = +/- p^n zeta_d^k for some k, by exhaustive comparison
/// against the 2d candidates.  Requires J conj(J) = p^(2n) exactly;
/// anything else throws std::domain_error.
bool purity_check(const CyclotomicInt& J, std::int64_t p, int n);

}  // namespace ellft

#endif  // ELLFT_CHAR_SUMS_HPP_
