#pragma once

#include "halfspin/linop.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace halfspin {

// The exterior algebra on the isotropic subspace spanned by e_1..e_n, with
// basis blades e_I indexed by n-bit masks (bit i-1 <-> index i, ascending
// orientation). Operators on it are 2^n x 2^n LinOps whose rows/columns are
// indexed by the mask.

namespace blades {

inline int degree(std::uint32_t mask) { return __builtin_popcount(mask); }

/// #{j in I : j < i} for 1-based i.
inline int count_below(std::uint32_t mask, int i) {
  return __builtin_popcount(mask & ((1u << (i - 1)) - 1u));
}

/// Complement of I inside {1..n}.
inline std::uint32_t complement(std::uint32_t mask, int n) {
  return ~mask & ((n == 32 ? ~0u : (1u << n) - 1u));
}

/// Sign of the shuffle sorting (I ascending, I' ascending) into (1..n).
int shuffle_sign(std::uint32_t mask, int n);

}  // namespace blades

enum class Parity { Even, Odd };

inline Parity parity_of(std::uint32_t mask) {
  return blades::degree(mask) % 2 == 0 ? Parity::Even : Parity::Odd;
}

/// Masks of the given parity in ascending order; the basis of S+ or S-.
std::vector<std::uint32_t> parity_masks(int n, Parity p);

/// Wedge with e_i on the full exterior algebra (degree +1, E-linear).
LinOp wedge_op(int i, int n, const TowerSpec& t);

/// Interior product with e_{n+i} viewed as the b-dual of e_i (degree -1).
LinOp contraction_op(int i, int n, const TowerSpec& t);

/// Clifford action of a vector of W given by 2n coordinates in the good
/// basis: gamma(e_i) = wedge, gamma(e_{n+i}) = contraction, E-linear in v.
LinOp clifford_gamma(const std::vector<FieldElement>& v, int n);

/// The block of a parity-preserving operator on S+ or S-. Throws
/// std::invalid_argument when the operator mixes parities.
LinOp restrict_half_spin(const LinOp& op, Parity p, int n);

/// True when all nonzero entries connect blades of equal degree parity.
bool preserves_parity(const LinOp& op, int n);

/// Degrees d with a nonzero component mapping some blade of degree k to
/// degree k+d; sorted ascending.
std::vector<int> degree_profile(const LinOp& op, int n);

// A sparse vector of the spinor space: blade mask -> coefficient. Zero
// coefficients are never stored, and the parity tag is derived from the
// stored masks.
class SpinorVector {
 public:
  SpinorVector() = default;
  explicit SpinorVector(const TowerSpec& t) : tower_(&t) {}

  void set(std::uint32_t mask, FieldElement c);
  const FieldElement* get(std::uint32_t mask) const;
  const std::map<std::uint32_t, FieldElement>& coeffs() const { return c_; }

  enum class Tag { Even, Odd, Mixed, Zero };
  Tag parity() const;

  std::vector<FieldElement> to_dense(int n) const;
  static SpinorVector from_dense(const std::vector<FieldElement>& v);

  bool operator==(const SpinorVector& o) const { return c_ == o.c_; }

 private:
  const TowerSpec* tower_ = nullptr;
  std::map<std::uint32_t, FieldElement> c_;
};

}  // namespace halfspin
