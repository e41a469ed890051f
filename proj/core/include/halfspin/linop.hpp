#pragma once

#include "halfspin/tower.hpp"

#include <vector>

namespace halfspin {

enum class Linearity { Linear, Conjugate };

// A square matrix over E tagged E-linear or conjugate-linear. A conjugate
// tag means the operator acts as v -> M * sigma(v), with sigma applied
// coordinatewise; composition and application honor the tag.
class LinOp {
 public:
  LinOp() = default;
  LinOp(int dim, Linearity lin, const TowerSpec& t);

  static LinOp identity(int dim, const TowerSpec& t);
  static LinOp scalar_op(int dim, const FieldElement& c, Linearity lin = Linearity::Linear);

  int dim() const { return dim_; }
  Linearity linearity() const { return lin_; }
  bool is_conjugate() const { return lin_ == Linearity::Conjugate; }
  const TowerSpec& tower() const;

  const FieldElement& at(int r, int c) const { return m_[static_cast<size_t>(r) * dim_ + c]; }
  void set(int r, int c, FieldElement v) { m_[static_cast<size_t>(r) * dim_ + c] = std::move(v); }

  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

  LinOp operator+(const LinOp& o) const;  // same tag required
  LinOp operator-(const LinOp& o) const;
  LinOp operator-() const;
  friend LinOp operator*(const FieldElement& c, const LinOp& a);

  /// Entrywise Galois conjugation of the matrix (tag unchanged).
  LinOp conj_entries() const;

  /// Inverse as an operator; conjugate-linear inputs yield conjugate-linear
  /// inverses. Throws std::domain_error when singular.
  LinOp inverse() const;

  bool operator==(const LinOp& o) const;
  bool operator!=(const LinOp& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_scalar_multiple_of_identity(const FieldElement& c) const;

 private:
  int dim_ = 0;
  Linearity lin_ = Linearity::Linear;
  std::vector<FieldElement> m_;
};

/// a after b, with the tag table
///   lin ∘ lin = lin (AB),   conj ∘ conj = lin (A sigma(B)),
///   conj ∘ lin = conj (A sigma(B)),   lin ∘ conj = conj (AB).
LinOp compose(const LinOp& a, const LinOp& b);

/// a∘b - b∘a; both operators must carry the same tag.
LinOp commutator(const LinOp& a, const LinOp& b);

// Restriction of scalars from E to E0: the same operator on the basis
// {e_1..e_N, sqrt(m2)e_1..sqrt(m2)e_N}, always E0-linear of size 2N. Entries
// of the result lie in E0.
LinOp res_matrix(const LinOp& a);

}  // namespace halfspin
