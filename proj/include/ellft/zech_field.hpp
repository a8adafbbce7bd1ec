// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFT_ZECH_FIELD_HPP_
#define ELLFT_ZECH_FIELD_HPP_

#include <cstdint>
#include <vector>

#include "ellft/finite_field.hpp"

namespace ellft {

/// Table-based arithmetic for a small finite field, with elements held as
/// discrete logarithms of the field's deterministic generator.  Addition
/// goes through Zech logarithms, so every operation is O(1) after an O(q)
/// build.  This is the workhorse behind point counting and character sums;
/// results always convert back to ordinary FieldElement values.
class ZechField {
 public:
  using Rep = std::int32_t;
  static constexpr Rep kZero = -1;  // the field zero (no logarithm)

  explicit ZechField(const FiniteField& k);

  const FiniteField& field() const { return *field_; }
  std::int64_t size() const { return q_; }

  Rep from_element(const FieldElement& a) const;
  FieldElement to_element(Rep a) const;
  Rep from_int(std::int64_t n) const;

  Rep one() const { return 0; }
  Rep generator() const { return q_ > 2 ? 1 : 0; }

  bool is_zero(Rep a) const { return a == kZero; }

  Rep mul(Rep a, Rep b) const {
    if (a == kZero || b == kZero) return kZero;
    Rep s = a + b;
    return s >= qm1_ ? s - qm1_ : s;
  }

  Rep add(Rep a, Rep b) const {
    if (a == kZero) return b;
    if (b == kZero) return a;
    Rep d = b - a;
    if (d < 0) d += qm1_;
    Rep z = zech_[static_cast<size_t>(d)];
    if (z == kZero) return kZero;
    Rep s = a + z;
    return s >= qm1_ ? s - qm1_ : s;
  }

  Rep neg(Rep a) const {
    if (a == kZero) return kZero;
    Rep s = a + neg_shift_;
    return s >= qm1_ ? s - qm1_ : s;
  }

  Rep sub(Rep a, Rep b) const { return add(a, neg(b)); }

  Rep inv(Rep a) const;
  Rep pow(Rep a, std::int64_t e) const;

  // Discrete log of a nonzero element; a must not be kZero.
  std::int64_t log(Rep a) const { return a; }

  // Quadratic residue test.  For characteristic 2 every element is a
  // square; otherwise squares are the even logarithms.  Zero is a square.
  bool is_square(Rep a) const {
    if (a == kZero) return true;
    if (char2_) return true;
    return (a & 1) == 0;
  }

  // Trace to the prime field, as an integer in [0, p).
  int trace(Rep a) const {
    return a == kZero ? 0 : trace_[static_cast<size_t>(a)];
  }

 private:
  const FiniteField* field_;
  std::int64_t q_;
  Rep qm1_;
  Rep neg_shift_;
  bool char2_;
  std::vector<Rep> log_;        // packed coordinate index -> log
  std::vector<std::int32_t> exp_packed_;  // log -> packed coordinate index
  std::vector<Rep> zech_;       // zech_[d] = log(1 + g^d), kZero if it is 0
  std::vector<std::uint32_t> trace_;      // log -> trace in F_p

  std::int64_t packed_of(const FieldElement& a) const;
  FieldElement element_of_packed(std::int64_t idx) const;
};

}  // namespace ellft

#endif  // ELLFT_ZECH_FIELD_HPP_
