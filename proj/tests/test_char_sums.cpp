// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "ellft/char_sums.hpp"
#include "ellft/errors.hpp"

using namespace ellft;

namespace {

std::vector<std::int64_t> int_coeffs(const std::vector<BigInt>& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(x.convert_to<std::int64_t>());
  return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(int_coeffs(cyclotomic_polynomial(1)) ==
        std::vector<std::int64_t>{-1, 1});
  CHECK(int_coeffs(cyclotomic_polynomial(2)) ==
        std::vector<std::int64_t>{1, 1});
  CHECK(int_coeffs(cyclotomic_polynomial(3)) ==
        std::vector<std::int64_t>{1, 1, 1});
  CHECK(int_coeffs(cyclotomic_polynomial(4)) ==
        std::vector<std::int64_t>{1, 0, 1});
  CHECK(int_coeffs(cyclotomic_polynomial(6)) ==
        std::vector<std::int64_t>{1, -1, 1});
  CHECK(int_coeffs(cyclotomic_polynomial(12)) ==
        std::vector<std::int64_t>{1, 0, -1, 0, 1});

  // product over divisors of d reconstructs x^d - 1
  for (std::int64_t d : {6, 10, 12, 17, 30}) {
    std::vector<BigInt> prod{1};
    for (std::int64_t e = 1; e <= d; ++e) {
      if (d % e != 0) continue;
      const auto& phi = cyclotomic_polynomial(e);
      std::vector<BigInt> next(prod.size() + phi.size() - 1, BigInt(0));
      for (size_t i = 0; i < prod.size(); ++i)
        for (size_t j = 0; j < phi.size(); ++j)
          next[i + j] += prod[i] * phi[j];
      prod = std::move(next);
    }
    REQUIRE(prod.size() == static_cast<size_t>(d) + 1);
    CHECK(prod.front() == -1);
    CHECK(prod.back() == 1);
    for (size_t i = 1; i < prod.size() - 1; ++i) CHECK(prod[i] == 0);
  }
}

TEST_CASE("cyclotomic integer ring operations") {
  const CyclotomicInt z = CyclotomicInt::root_power(4, 1);  // i
  CHECK(z * z == CyclotomicInt::from_integer(4, BigInt(-1)));
  CHECK(z * z.conj() == CyclotomicInt::from_integer(4, BigInt(1)));
  CHECK(z.conj().conj() == z);
  // zeta_d^d = 1
  for (std::int64_t d : {3, 5, 8, 12}) {
    CyclotomicInt w = CyclotomicInt::from_integer(d, BigInt(1));
    const CyclotomicInt zeta = CyclotomicInt::root_power(d, 1);
    for (std::int64_t i = 0; i < d; ++i) w = w * zeta;
    CHECK(w == CyclotomicInt::from_integer(d, BigInt(1)));
  }
  // (1 + z)(1 - z) = 1 - z^2 = 2 in Z[i]
  const CyclotomicInt one = CyclotomicInt::from_integer(4, BigInt(1));
  CHECK((one + z) * (one - z) == CyclotomicInt::from_integer(4, BigInt(2)));
}

TEST_CASE("gauss sums, pinned values") {
  const FiniteField& f5 = make_field(5, 1);
  // trivial character: sum of psi over x != 0 is -1
  const MultiplicativeCharacter triv(f5, 4, 0);
  const std::complex<double> g0 = gauss_sum_numeric(triv);
  CHECK(std::abs(g0 - std::complex<double>(-1.0, 0.0)) < 1e-12);

  // quadratic character over F_5: g^2 = 5 (5 = 1 mod 4, so g is real)
  const MultiplicativeCharacter quad(f5, 2, 1);
  const std::complex<double> g1 = gauss_sum_numeric(quad);
  CHECK(std::abs(g1 * g1 - std::complex<double>(5.0, 0.0)) < 1e-9);

  // cubic character over F_4: |g| = 2
  const FiniteField& f4 = make_field(2, 2);
  const MultiplicativeCharacter cubic(f4, 3, 1);
  CHECK(std::abs(std::abs(gauss_sum_numeric(cubic)) - 2.0) < 1e-9);
}

TEST_CASE("gauss sum magnitude and reflection over many fields") {
  for (const auto& [p, m] : std::vector<std::pair<std::int64_t, int>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 7}, {2, 9}, {2, 10},
           {3, 1}, {3, 2}, {3, 4}, {3, 5}, {3, 6}, {5, 1}, {5, 2},
           {5, 4}, {7, 1}, {7, 3}, {13, 1}, {31, 1}, {127, 1}}) {
    const FiniteField& K = make_field(p, m);
    const std::int64_t r = K.size();
    const double fr = static_cast<double>(r);
    const std::int64_t order = r - 1;
    // sample character indices; all of them for small fields
    std::vector<std::int64_t> indices;
    if (r <= 128) {
      for (std::int64_t k = 1; k < order; ++k) indices.push_back(k);
    } else {
      indices = {1, 2, 3, order / 2, order - 1};
    }
    for (std::int64_t k : indices) {
      const MultiplicativeCharacter chi(K, order, k);
      const MultiplicativeCharacter chibar(K, order, order - k);
      const std::complex<double> g = gauss_sum_numeric(chi);
      CHECK(std::abs(std::abs(g) * std::abs(g) - fr) < 1e-9);
      // g(chi) g(chibar) = chi(-1) r
      const std::complex<double> lhs = g * gauss_sum_numeric(chibar);
      const std::complex<double> rhs =
          chi.value(-K.one()) * std::complex<double>(fr, 0.0);
      CHECK(std::abs(lhs - rhs) < 1e-9 * fr);
    }
  }
}

TEST_CASE("jacobi sums, pinned values") {
  // quartic character on F_5: J(chi, chi) = +-1 +- 2i, |J|^2 = 5
  const FiniteField& f5 = make_field(5, 1);
  const MultiplicativeCharacter chi4(f5, 4, 1);
  const CyclotomicInt J5 = jacobi_sum_exact(chi4, chi4);
  CHECK(J5 * J5.conj() == CyclotomicInt::from_integer(4, BigInt(5)));
  const auto c5 = int_coeffs(J5.coords());
  CHECK(std::abs(c5[0]) == 1);
  CHECK(std::abs(c5[1]) == 2);

  // cubic character on F_4: J = 2 times a root of unity (times +-1)
  const FiniteField& f4 = make_field(2, 2);
  const MultiplicativeCharacter chi3(f4, 3, 1);
  const CyclotomicInt J4 = jacobi_sum_exact(chi3, chi3);
  CHECK(J4 * J4.conj() == CyclotomicInt::from_integer(3, BigInt(4)));
  CHECK(purity_check(J4, 2, 1));

  // quartic character on F_9: J in {+-3, +-3i}
  const FiniteField& f9 = make_field(3, 2);
  const MultiplicativeCharacter chi9(f9, 4, 1);
  const CyclotomicInt J9 = jacobi_sum_exact(chi9, chi9);
  CHECK(J9 * J9.conj() == CyclotomicInt::from_integer(4, BigInt(9)));
  bool axis = false;
  const auto c9 = int_coeffs(J9.coords());
  axis = (std::abs(c9[0]) == 3 && c9[1] == 0) ||
         (c9[0] == 0 && std::abs(c9[1]) == 3);
  CHECK(axis);
  CHECK(purity_check(J9, 3, 1));

  // trivial product is rejected
  const MultiplicativeCharacter chibar(f5, 4, 3);
  CHECK_THROWS_AS(jacobi_sum_exact(chi4, chibar), std::invalid_argument);
}

TEST_CASE("gauss-jacobi relation, numeric cross-check") {
  for (const auto& [p, m] : std::vector<std::pair<std::int64_t, int>>{
           {7, 1}, {3, 2}, {13, 1}}) {
    const FiniteField& K = make_field(p, m);
    const std::int64_t order = K.size() - 1;
    for (std::int64_t i = 1; i < std::min<std::int64_t>(order, 6); ++i) {
      for (std::int64_t j = 1; j < std::min<std::int64_t>(order, 6); ++j) {
        if ((i + j) % order == 0) continue;
        const MultiplicativeCharacter chi1(K, order, i);
        const MultiplicativeCharacter chi2(K, order, j);
        const MultiplicativeCharacter chi12(K, order, (i + j) % order);
        const std::complex<double> expect =
            gauss_sum_numeric(chi1) * gauss_sum_numeric(chi2) /
            gauss_sum_numeric(chi12);
        const std::complex<double> got =
            jacobi_sum_exact(chi1, chi2).to_complex();
        CHECK(std::abs(got - expect) < 1e-6);
      }
    }
  }
}

TEST_CASE("purity: the supersingular suite at p^(2n) <= 256") {
  for (const auto& [p, n] : std::vector<std::pair<std::int64_t, int>>{
           {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2},
           {5, 1}, {7, 1}, {11, 1}, {13, 1}}) {
    std::int64_t pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    if (pn * pn > 256) continue;
    const FiniteField& K = make_field(p, 2 * n);
    for (std::int64_t d = 2; d <= pn + 1; ++d) {
      if ((pn + 1) % d != 0) continue;
      for (std::int64_t i = 1; i < d; ++i) {
        for (std::int64_t j = 1; j < d; ++j) {
          if ((i + j) % d == 0) continue;
          const MultiplicativeCharacter chi1(K, d, i);
          const MultiplicativeCharacter chi2(K, d, j);
          CHECK(purity_check(jacobi_sum_exact(chi1, chi2), p, n));
        }
      }
    }
  }
}

TEST_CASE("purity rejects inputs outside the supersingular framing") {
  // J of quartic characters on F_5 has J conj(J) = 5, never p^(2n)
  const FiniteField& f5 = make_field(5, 1);
  const MultiplicativeCharacter chi(f5, 4, 1);
  const CyclotomicInt J = jacobi_sum_exact(chi, chi);
  CHECK_THROWS_AS(purity_check(J, 5, 1), std::domain_error);

  // and J itself is not +-sqrt(5) times a root of unity in Z[i]:
  // J^2 is not +-5 or +-5i
  const CyclotomicInt J2 = J * J;
  const auto c = int_coeffs(J2.coords());
  const bool is_axis5 = (std::abs(c[0]) == 5 && c[1] == 0) ||
                        (c[0] == 0 && std::abs(c[1]) == 5);
  CHECK_FALSE(is_axis5);
  CHECK(purity_check(CyclotomicInt::root_power(4, 1) *
                         CyclotomicInt::from_integer(4, BigInt(3)),
                     3, 1));  // 3i is pure
}

TEST_CASE("character labeling is deterministic") {
  const FiniteField& f9 = make_field(3, 2);
  const MultiplicativeCharacter a(f9, 8, 1);
  const MultiplicativeCharacter b(f9, 8, 1);
  for (std::int64_t i = 0; i < 9; ++i) {
    const FieldElement x = f9.element_at(i);
    CHECK(a.exponent(x) == b.exponent(x));
  }
  CHECK(!a.exponent(f9.zero()).has_value());
  CHECK(a.exponent(f9.one()) == 0);
  CHECK_THROWS_AS(MultiplicativeCharacter(f9, 3, 1), std::invalid_argument);
}
