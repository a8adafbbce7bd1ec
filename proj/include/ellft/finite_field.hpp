// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFT_FINITE_FIELD_HPP_
#define ELLFT_FINITE_FIELD_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ellft {

using coord_t = std::uint16_t;

// Largest extension degree over the prime field we ever represent.
inline constexpr int kMaxFieldDegree = 24;

// Ceiling on p^m for fields that get enumerated or tabulated.
inline constexpr std::int64_t kFieldSizeBudget = std::int64_t{1} << 20;

class FiniteField;

/// Element of F_{p^m} in the polynomial basis of its owning field.
///
/// Elements carry a pointer to their owner; operations on elements of
/// different owners throw rather than coerce.
class FieldElement {
 public:
  FieldElement() : field_(nullptr), c_{} {}

  const FiniteField& field() const;
  bool valid() const { return field_ != nullptr; }

  coord_t coord(int i) const { return c_[static_cast<unsigned>(i)]; }
  std::vector<coord_t> coords() const;

  bool is_zero() const;
  bool is_one() const;

  // Deterministic total order: coordinate tuple (c_0, ..., c_{m-1})
  // compared lexicographically, c_0 first.
  std::int64_t lex_index() const;

  // Compact integer form sum c_i p^i (constant coordinate least
  // significant); prime-field elements are their values.
  std::int64_t to_integer() const;

  std::string to_string() const;

  friend FieldElement operator+(const FieldElement&, const FieldElement&);
  friend FieldElement operator-(const FieldElement&, const FieldElement&);
  friend FieldElement operator*(const FieldElement&, const FieldElement&);
  friend FieldElement operator/(const FieldElement&, const FieldElement&);
  friend FieldElement operator-(const FieldElement&);
  friend bool operator==(const FieldElement&, const FieldElement&);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

 private:
  friend class FiniteField;
  friend FieldElement pow(const FieldElement&, std::int64_t);

  const FiniteField* field_;
  std::array<coord_t, kMaxFieldDegree> c_;
};

/// F_{p^m} with the deterministic modulus: the lexicographically smallest
/// monic irreducible of degree m over F_p, coefficients (c_0, ..., c_{m-1})
/// compared low-to-high as integers.  Instances are interned and immutable,
/// so raw pointers to them stay valid for the process lifetime and values
/// are safely shareable across threads.
class FiniteField {
 public:
  std::int64_t characteristic() const { return p_; }
  int degree() const { return m_; }
  std::int64_t size() const { return size_; }

  // Non-leading coefficients of the modulus, constant term first.
  const std::vector<coord_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  // The class of the basis variable x (only meaningful for m >= 2).
  FieldElement gen() const;

  FieldElement from_coords(const std::vector<coord_t>& c) const;
  // Scalar n mod p, as an element of the prime subfield.
  FieldElement from_int(std::int64_t n) const;
  // Inverse of FieldElement::lex_index; enumerating i = 0 .. size()-1 walks
  // the field in the deterministic coordinate-lexicographic order.
  FieldElement element_at(std::int64_t lex_index) const;

  // Smallest multiplicative generator in coordinate-lexicographic order.
  const FieldElement& generator() const;

  // Smallest multiplicative generator whose norms down to every subfield
  // have the same minimal polynomials as the subfields' own compatible
  // generators.  This is what makes embeddings compose along towers.
  const FieldElement& compatible_generator() const;

  // Discrete log with respect to compatible_generator(); a != 0.
  std::int64_t compatible_log(const FieldElement& a) const;

  bool operator==(const FiniteField& o) const { return this == &o; }

  std::string to_string() const;

 private:
  friend const FiniteField& make_field(std::int64_t, int);
  FiniteField(std::int64_t p, int m);

  friend class FieldElement;
  friend FieldElement operator+(const FieldElement&, const FieldElement&);
  friend FieldElement operator-(const FieldElement&, const FieldElement&);
  friend FieldElement operator*(const FieldElement&, const FieldElement&);
  friend FieldElement operator/(const FieldElement&, const FieldElement&);
  friend FieldElement operator-(const FieldElement&);

  std::int64_t p_;
  int m_;
  std::int64_t size_;
  std::vector<coord_t> modulus_;
  // lazily filled caches, guarded by a local mutex
  mutable FieldElement generator_;
  mutable FieldElement compatible_generator_;
  mutable std::vector<std::int32_t> log_table_;
};

/// Returns the interned field F_{p^m}.  Throws std::invalid_argument for
/// non-prime p or m < 1 and BudgetError when p^m exceeds the enumeration
/// budget.
const FiniteField& make_field(std::int64_t p, int m);

FieldElement pow(const FieldElement& a, std::int64_t e);
FieldElement inverse(const FieldElement& a);

/// Smallest k >= 1 with a^k = 1; divides p^m - 1.
std::int64_t multiplicative_order(const FieldElement& a);

/// x -> x^p.
FieldElement frobenius(const FieldElement& a);

/// Trace to the prime field, Tr(a) = a + a^p + ... + a^(p^(m-1)), returned
/// as an integer in [0, p).
std::int64_t trace_to_prime(const FieldElement& a);

/// The fixed embedding F_{p^m} -> F_{p^(m*k)}.  It sends the source's
/// compatible generator to the norm power of the target's, which pins a
/// deterministic root of the source modulus in the target and makes
/// compositions along towers agree with direct embeddings.
FieldElement embed(const FieldElement& a, const FiniteField& target);

/// Minimal polynomial of a over the prime field, constant term first.
std::vector<std::int64_t> minimal_polynomial(const FieldElement& a);

}  // namespace ellft

#endif  // ELLFT_FINITE_FIELD_HPP_
