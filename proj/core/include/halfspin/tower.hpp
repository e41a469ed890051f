#pragma once

#include "halfspin/rational.hpp"

#include <array>
#include <iosfwd>
#include <optional>

namespace halfspin {

class FieldElement;

// The field tower Q <= E0 <= E with E0 = Q(sqrt(m1)) (or Q when m1 is absent)
// and E = E0(sqrt(m2)). m2 must be totally negative, so E is an imaginary
// quadratic extension of the totally real base E0.
//
// Elements of E are stored on the basis {1, sqrt(m1), sqrt(m2), sqrt(m1)sqrt(m2)};
// the first two coordinates span E0. Embedding 1 sends sqrt(m1) to the positive
// real root, embedding 2 to the negative one.
class TowerSpec {
 public:
  // m2 is given by its E0-coordinates (m2_0 + m2_1*sqrt(m1)).
  TowerSpec(std::optional<Rational> m1, Rational m2_0, Rational m2_1 = Rational(0));

  bool has_m1() const { return m1_.has_value(); }
  const Rational& m1() const;
  const Rational& m2_coeff0() const { return m2_0_; }
  const Rational& m2_coeff1() const { return m2_1_; }

  /// Number of real embeddings of E0 (1 or 2).
  int embeddings() const { return has_m1() ? 2 : 1; }

  /// Degree of E over Q (2 or 4).
  int degree() const { return has_m1() ? 4 : 2; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& c) const;
  FieldElement from_int(long c) const;
  FieldElement sqrt_m1() const;
  FieldElement sqrt_m2() const;
  FieldElement m2() const;

  /// Element from coordinates on {1, sqrt(m1), sqrt(m2), sqrt(m1)sqrt(m2)}.
  FieldElement element(std::array<Rational, 4> coords) const;
  /// Element of the base E0 from coordinates on {1, sqrt(m1)}.
  FieldElement base_element(Rational c0, Rational c1 = Rational(0)) const;

  bool operator==(const TowerSpec& other) const;
  bool operator!=(const TowerSpec& other) const { return !(*this == other); }

 private:
  std::optional<Rational> m1_;
  Rational m2_0_, m2_1_;
};

// One element of E, bound to its tower. Arithmetic is exact and pure; mixing
// elements of different towers throws std::invalid_argument.
class FieldElement {
 public:
  FieldElement() : tower_(nullptr) {}

  const std::array<Rational, 4>& coords() const { return c_; }
  const TowerSpec& tower() const;
  bool bound() const { return tower_ != nullptr; }

  bool is_zero() const;
  /// True when the element lies in E0 (no sqrt(m2) components).
  bool in_base() const;
  /// True when the element lies in Q.
  bool is_rational() const;
  /// The rational coordinate; element must satisfy is_rational().
  const Rational& rational_value() const;

  FieldElement operator-() const;
  FieldElement inverse() const;  // throws std::domain_error on zero

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  FieldElement& operator+=(const FieldElement& y);
  FieldElement& operator-=(const FieldElement& y);
  FieldElement& operator*=(const FieldElement& y);

  bool operator==(const FieldElement& y) const;
  bool operator!=(const FieldElement& y) const { return !(*this == y); }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& x);

 private:
  friend class TowerSpec;
  FieldElement(const TowerSpec* t, std::array<Rational, 4> c) : c_(std::move(c)), tower_(t) {}

  std::array<Rational, 4> c_;
  const TowerSpec* tower_;
};

/// Galois conjugation of E over E0: fixes E0, negates the sqrt(m2) components.
FieldElement conj(const FieldElement& x);

/// Relative norm x * conj(x); the result lies in E0.
FieldElement norm_to_base(const FieldElement& x);

/// Exact sign of the i-th real embedding (1-based) of an element of E0.
int embed_sign(const FieldElement& x, int embedding);

/// Exact square test in E0: x = c^2 with c in E0. x must lie in E0.
std::optional<FieldElement> base_sqrt(const FieldElement& x);

}  // namespace halfspin
