// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "ellft/zech_field.hpp"

#include <stdexcept>

#include "ellft/errors.hpp"

namespace ellft {

std::int64_t ZechField::packed_of(const FieldElement& a) const {
  std::int64_t idx = 0;
  const std::int64_t p = field_->characteristic();
  for (int i = field_->degree() - 1; i >= 0; --i) idx = idx * p + a.coord(i);
  return idx;
}

FieldElement ZechField::element_of_packed(std::int64_t idx) const {
  const std::int64_t p = field_->characteristic();
  std::vector<coord_t> c(static_cast<size_t>(field_->degree()));
  for (int i = 0; i < field_->degree(); ++i) {
    c[static_cast<size_t>(i)] = static_cast<coord_t>(idx % p);
    idx /= p;
  }
  return field_->from_coords(c);
}

ZechField::ZechField(const FiniteField& k) : field_(&k), q_(k.size()) {
  qm1_ = static_cast<Rep>(q_ - 1);
  char2_ = (k.characteristic() == 2);
  neg_shift_ = char2_ ? 0 : qm1_ / 2;

  log_.assign(static_cast<size_t>(q_), kZero);
  exp_packed_.assign(static_cast<size_t>(qm1_), 0);
  zech_.assign(static_cast<size_t>(qm1_), kZero);
  trace_.assign(static_cast<size_t>(qm1_), 0);

  const FieldElement g = k.generator();
  FieldElement x = k.one();
  for (Rep i = 0; i < qm1_; ++i) {
    const std::int64_t packed = packed_of(x);
    exp_packed_[static_cast<size_t>(i)] = static_cast<std::int32_t>(packed);
    log_[static_cast<size_t>(packed)] = i;
    trace_[static_cast<size_t>(i)] =
        static_cast<std::uint32_t>(trace_to_prime(x));
    x = x * g;
  }
  if (!x.is_one())
    throw ComputationError("ZechField: generator order mismatch");

  const FieldElement one = k.one();
  for (Rep i = 0; i < qm1_; ++i) {
    FieldElement y =
        element_of_packed(exp_packed_[static_cast<size_t>(i)]) + one;
    if (y.is_zero()) {
      zech_[static_cast<size_t>(i)] = kZero;
    } else {
      zech_[static_cast<size_t>(i)] = log_[static_cast<size_t>(packed_of(y))];
    }
  }
}

ZechField::Rep ZechField::from_element(const FieldElement& a) const {
  if (&a.field() != field_)
    throw std::invalid_argument("ZechField: element from a different field");
  if (a.is_zero()) return kZero;
  return log_[static_cast<size_t>(packed_of(a))];
}

FieldElement ZechField::to_element(Rep a) const {
  if (a == kZero) return field_->zero();
  return element_of_packed(exp_packed_[static_cast<size_t>(a)]);
}

ZechField::Rep ZechField::from_int(std::int64_t n) const {
  return from_element(field_->from_int(n));
}

ZechField::Rep ZechField::inv(Rep a) const {
  if (a == kZero) throw std::invalid_argument("ZechField: inverse of zero");
  return a == 0 ? 0 : qm1_ - a;
}

ZechField::Rep ZechField::pow(Rep a, std::int64_t e) const {
  if (a == kZero) {
    if (e > 0) return kZero;
    if (e == 0) return 0;
    throw std::invalid_argument("ZechField: negative power of zero");
  }
  std::int64_t r = (static_cast<std::int64_t>(a) * (e % qm1_)) % qm1_;
  if (r < 0) r += qm1_;
  return static_cast<Rep>(r);
}

}  // namespace ellft
