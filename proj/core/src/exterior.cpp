#include "halfspin/exterior.hpp"

#include <stdexcept>

namespace halfspin {

namespace blades {

int shuffle_sign(std::uint32_t mask, int n) {
  // Inversions between (I ascending) and (I' ascending): pairs x in I,
  // y in I' with y < x.
  int inversions = 0;
  std::uint32_t comp = complement(mask, n);
  for (int i = 1; i <= n; ++i)
    if (mask & (1u << (i - 1))) inversions += count_below(comp, i);
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace blades

std::vector<std::uint32_t> parity_masks(int n, Parity p) {
  std::vector<std::uint32_t> out;
  out.reserve(1u << (n > 0 ? n - 1 : 0));
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (parity_of(m) == p) out.push_back(m);
  return out;
}

namespace {

void check_index(int i, int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("n out of supported range");
  if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
}

}  // namespace

LinOp wedge_op(int i, int n, const TowerSpec& t) {
  check_index(i, n);
  const std::uint32_t bit = 1u << (i - 1);
  LinOp op(1 << n, Linearity::Linear, t);
  const FieldElement one = t.one();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (mask & bit) continue;
    const int s = blades::count_below(mask, i);
    op.set(static_cast<int>(mask | bit), static_cast<int>(mask), s % 2 == 0 ? one : -one);
  }
  return op;
}

LinOp contraction_op(int i, int n, const TowerSpec& t) {
  check_index(i, n);
  const std::uint32_t bit = 1u << (i - 1);
  LinOp op(1 << n, Linearity::Linear, t);
  const FieldElement one = t.one();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & bit)) continue;
    const int s = blades::count_below(mask, i);
    op.set(static_cast<int>(mask & ~bit), static_cast<int>(mask), s % 2 == 0 ? one : -one);
  }
  return op;
}

LinOp clifford_gamma(const std::vector<FieldElement>& v, int n) {
  if (static_cast<int>(v.size()) != 2 * n) throw std::invalid_argument("vector must have 2n coordinates");
  const TowerSpec& t = v[0].tower();
  LinOp acc(1 << n, Linearity::Linear, t);
  for (int i = 1; i <= n; ++i) {
    if (!v[i - 1].is_zero()) acc = acc + v[i - 1] * wedge_op(i, n, t);
    if (!v[n + i - 1].is_zero()) acc = acc + v[n + i - 1] * contraction_op(i, n, t);
  }
  return acc;
}

bool preserves_parity(const LinOp& op, int n) {
  if (op.dim() != (1 << n)) throw std::invalid_argument("operator is not of exterior-algebra size");
  for (std::uint32_t col = 0; col < (1u << n); ++col)
    for (std::uint32_t row = 0; row < (1u << n); ++row)
      if (parity_of(row) != parity_of(col) &&
          !op.at(static_cast<int>(row), static_cast<int>(col)).is_zero())
        return false;
  return true;
}

std::vector<int> degree_profile(const LinOp& op, int n) {
  if (op.dim() != (1 << n)) throw std::invalid_argument("operator is not of exterior-algebra size");
  std::vector<bool> seen(2 * n + 1, false);
  for (std::uint32_t col = 0; col < (1u << n); ++col)
    for (std::uint32_t row = 0; row < (1u << n); ++row)
      if (!op.at(static_cast<int>(row), static_cast<int>(col)).is_zero())
        seen[blades::degree(row) - blades::degree(col) + n] = true;
  std::vector<int> out;
  for (int d = -n; d <= n; ++d)
    if (seen[d + n]) out.push_back(d);
  return out;
}

LinOp restrict_half_spin(const LinOp& op, Parity p, int n) {
  if (!preserves_parity(op, n))
    throw std::invalid_argument("operator mixes blade parities; no half-spin block");
  const auto masks = parity_masks(n, p);
  LinOp block(static_cast<int>(masks.size()), op.linearity(), op.tower());
  for (size_t j = 0; j < masks.size(); ++j)
    for (size_t i = 0; i < masks.size(); ++i)
      block.set(static_cast<int>(i), static_cast<int>(j),
                op.at(static_cast<int>(masks[i]), static_cast<int>(masks[j])));
  return block;
}

void SpinorVector::set(std::uint32_t mask, FieldElement c) {
  if (c.is_zero()) {
    c_.erase(mask);
  } else {
    tower_ = &c.tower();
    c_.insert_or_assign(mask, std::move(c));
  }
}

const FieldElement* SpinorVector::get(std::uint32_t mask) const {
  auto it = c_.find(mask);
  return it == c_.end() ? nullptr : &it->second;
}

SpinorVector::Tag SpinorVector::parity() const {
  if (c_.empty()) return Tag::Zero;
  bool even = false, odd = false;
  for (const auto& [mask, coeff] : c_) (parity_of(mask) == Parity::Even ? even : odd) = true;
  if (even && odd) return Tag::Mixed;
  return even ? Tag::Even : Tag::Odd;
}

std::vector<FieldElement> SpinorVector::to_dense(int n) const {
  if (!tower_) throw std::logic_error("empty spinor has no tower");
  std::vector<FieldElement> v(1u << n, tower_->zero());
  for (const auto& [mask, coeff] : c_) {
    if (mask >= v.size()) throw std::invalid_argument("blade mask exceeds 2^n");
    v[mask] = coeff;
  }
  return v;
}

SpinorVector SpinorVector::from_dense(const std::vector<FieldElement>& v) {
  SpinorVector s;
  for (size_t m = 0; m < v.size(); ++m)
    if (!v[m].is_zero()) s.set(static_cast<std::uint32_t>(m), v[m]);
  return s;
}

}  // namespace halfspin
