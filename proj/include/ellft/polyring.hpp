// Copyright 2026 The ellft Authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFT_POLYRING_HPP_
#define ELLFT_POLYRING_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ellft/finite_field.hpp"

namespace ellft {

/// Univariate polynomial over F_q, constant term first, no trailing zeros.
class Poly {
 public:
  explicit Poly(const FiniteField& base) : base_(&base) {}
  Poly(const FiniteField& base, std::vector<FieldElement> coeffs);

  // Convenience: coefficients given as integers mod p (prime-subfield
  // scalars), constant term first.
  static Poly from_ints(const FiniteField& base,
                        const std::vector<std::int64_t>& coeffs);
  static Poly variable(const FiniteField& base);       // t
  static Poly constant(const FieldElement& c);
  static Poly monomial(const FiniteField& base, int k);  // t^k

  const FiniteField& base() const { return *base_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Coefficient of t^i, zero-padded beyond the degree.
  FieldElement coeff(int i) const;
  const FieldElement& leading() const;
  bool is_monic() const;

  Poly monic() const;  // divide by the leading coefficient
  Poly derivative() const;
  // Reverse of coefficients padded to the given degree: t^n * f(1/t).
  Poly reversed(int n) const;
  Poly shifted(int k) const;  // multiply by t^k

  FieldElement eval(const FieldElement& x) const;

  friend Poly operator+(const Poly&, const Poly&);
  friend Poly operator-(const Poly&, const Poly&);
  friend Poly operator*(const Poly&, const Poly&);
  friend Poly operator*(const FieldElement&, const Poly&);
  friend Poly operator-(const Poly&);
  friend bool operator==(const Poly&, const Poly&);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string(const std::string& var = "t") const;

 private:
  const FiniteField* base_;
  std::vector<FieldElement> c_;
  void trim();
};

/// Euclidean division: f = q*g + r with deg r < deg g.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);  // exact or truncated quotient
Poly operator%(const Poly& f, const Poly& g);
Poly gcd(Poly a, Poly b);  // monic gcd
Poly pow_mod(const Poly& base, std::int64_t e, const Poly& mod);
Poly pow(const Poly& base, int e);

/// Deterministic order: degree first, then the coefficient tuple
/// (c_0, ..., c_deg) compared lexicographically by coordinate index.
bool poly_lex_less(const Poly& a, const Poly& b);

/// A place of F_q(t): a monic irreducible polynomial, or the single place
/// at infinity (degree 1).
class Place {
 public:
  static Place finite(Poly monic_irreducible);
  static Place infinity(const FiniteField& base);

  bool is_infinite() const { return infinite_; }
  const Poly& poly() const;
  int degree() const { return degree_; }
  const FiniteField& base() const { return *base_; }

  // Residue field cardinality q^degree.
  std::int64_t residue_size() const;

  std::string to_string() const;

  friend bool operator==(const Place&, const Place&);
  friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
  // Deterministic order: finite places by (degree, lex), infinity last.
  friend bool operator<(const Place&, const Place&);

 private:
  Place(const FiniteField& base, bool infinite, Poly poly, int degree)
      : base_(&base), infinite_(infinite), poly_(std::move(poly)),
        degree_(degree) {}
  // Enumeration already proves irreducibility; skip re-validation there.
  friend std::vector<Place> enumerate_places(const FiniteField&, int);
  const FiniteField* base_;
  bool infinite_;
  Poly poly_;
  int degree_;
};

/// Element of F_q(t) in lowest terms with monic denominator.
class RationalFunction {
 public:
  explicit RationalFunction(const FiniteField& base)
      : num_(base), den_(Poly::from_ints(base, {1})) {}
  RationalFunction(Poly num, Poly den);
  explicit RationalFunction(Poly num);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FiniteField& base() const { return num_.base(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend RationalFunction operator+(const RationalFunction&,
                                    const RationalFunction&);
  friend RationalFunction operator-(const RationalFunction&,
                                    const RationalFunction&);
  friend RationalFunction operator*(const RationalFunction&,
                                    const RationalFunction&);
  friend RationalFunction operator/(const RationalFunction&,
                                    const RationalFunction&);
  friend RationalFunction operator-(const RationalFunction&);
  friend bool operator==(const RationalFunction&, const RationalFunction&);
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  Poly num_, den_;
  void normalize();
};

struct Factorization {
  FieldElement unit;  // leading coefficient of the input
  // (monic irreducible, multiplicity), sorted by (degree, lex).
  std::vector<std::pair<Poly, int>> factors;
};

inline constexpr std::uint64_t kDefaultFactorSeed = 1;

/// Deterministic irreducibility test: f of degree n is irreducible iff
/// t^(q^n) = t (mod f) and gcd(t^(q^(n/l)) - t, f) = 1 for each prime l | n.
bool is_irreducible(const Poly& f);

/// Complete factorization into monic irreducibles.  Squarefree and
/// distinct-degree splitting are deterministic; equal-degree splitting uses
/// seeded randomness, so identical seeds give identical intermediate work
/// (the returned factor list is canonically sorted either way).
Factorization factor(const Poly& f, std::uint64_t seed = kDefaultFactorSeed);

/// All finite places of degree <= max_degree, each exactly once, ordered by
/// (degree, coefficient-lexicographic).  The infinite place is not included.
std::vector<Place> enumerate_places(const FiniteField& base, int max_degree);

/// Residue field at a finite place, with the reduction map F_q[t] -> F_{q^d}
/// sending t to the deterministic root of the place polynomial (smallest in
/// coordinate-lexicographic order).
class ResidueField {
 public:
  explicit ResidueField(const Place& v);

  const FiniteField& field() const { return *field_; }
  const Place& place() const { return place_; }
  const FieldElement& t_image() const { return t_image_; }

  FieldElement reduce(const Poly& f) const;
  // Throws std::domain_error when the place divides the denominator.
  FieldElement reduce(const RationalFunction& f) const;

 private:
  Place place_;
  const FiniteField* field_;
  FieldElement t_image_;
};

/// reduce(f) at v, in the canonical residue field.  Pole at v throws.
FieldElement reduce_rational(const RationalFunction& f, const Place& v);

/// Multiplicity of the place in f (negative for poles).  For the infinite
/// place this is deg(den) - deg(num).
int valuation(const RationalFunction& f, const Place& v);
int valuation(const Poly& f, const Place& v);

}  // namespace ellft

#endif  // ELLFT_POLYRING_HPP_
