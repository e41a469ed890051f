#include "halfspin/spinrep.hpp"

namespace halfspin {

SoGenerator so_generator(int r, int s, int n, const TowerSpec& t) {
  if (!(1 <= r && r < s && s <= 2 * n)) throw std::invalid_argument("need 1 <= r < s <= 2n");
  LinOp m(2 * n, Linearity::Linear, t);
  // x -> b(e_s, x) e_r - b(e_r, x) e_s reads coordinates at the dual indices;
  // the two written cells are always distinct since r < s.
  m.set(r - 1, b_dual_index(s, n) - 1, t.one());
  m.set(s - 1, b_dual_index(r, n) - 1, -t.one());
  return {r, s, std::move(m)};
}

bool preserves_b_infinitesimally(const LinOp& op) {
  const int dim = op.dim();
  if (dim % 2 != 0) throw std::invalid_argument("operator on W must have even size");
  const int n = dim / 2;
  // b(T e_p, e_q) = (T e_p)_{dual(q)} = T[dual(q)][p]
  for (int p = 1; p <= dim; ++p)
    for (int q = 1; q <= dim; ++q) {
      FieldElement sum = op.at(b_dual_index(q, n) - 1, p - 1) + op.at(b_dual_index(p, n) - 1, q - 1);
      if (!sum.is_zero()) return false;
    }
  return true;
}

bool preserves_psi_infinitesimally(const LinOp& op, const HermitianData& h) {
  const int dim = 2 * h.n();
  if (op.dim() != dim) throw std::invalid_argument("operator size mismatch");
  // psi(T e_r, e_s) = a_s (T e_r)_s; condition a_s T[s][r] = -a_r conj(T[r][s]).
  for (int r = 1; r <= dim; ++r)
    for (int s = 1; s <= dim; ++s) {
      if (h.a(s) * op.at(s - 1, r - 1) != -(h.a(r) * conj(op.at(r - 1, s - 1)))) return false;
    }
  return true;
}

std::map<std::pair<int, int>, FieldElement> so_coordinates(const LinOp& op) {
  const int dim = op.dim();
  if (dim % 2 != 0) throw std::invalid_argument("operator on W must have even size");
  const int n = dim / 2;
  const TowerSpec& t = op.tower();
  std::map<std::pair<int, int>, FieldElement> coords;
  LinOp rebuilt(dim, Linearity::Linear, t);
  for (int r = 1; r <= dim; ++r)
    for (int s = r + 1; s <= dim; ++s) {
      const FieldElement& c = op.at(r - 1, b_dual_index(s, n) - 1);
      if (c.is_zero()) continue;
      coords[{r, s}] = c;
      rebuilt = rebuilt + c * so_generator(r, s, n, t).matrix;
    }
  if (rebuilt != op) throw std::invalid_argument("operator is not in so(W, b)");
  return coords;
}

SpinLift spin_lift_generator(int r, int s, int n, const TowerSpec& t) {
  if (!(1 <= r && r < s && s <= 2 * n)) throw std::invalid_argument("need 1 <= r < s <= 2n");
  auto gamma = [&](int p) {
    return p <= n ? wedge_op(p, n, t) : contraction_op(p - n, n, t);
  };
  LinOp full = compose(gamma(r), gamma(s));
  if (s == r + n) {
    // b'(e_r, e_s) = 1/2 under the Clifford scaling.
    FieldElement half = t.from_rational(Rational(1, 2));
    full = full - LinOp::scalar_op(1 << n, half);
  }
  SpinLift lift{full, restrict_half_spin(full, Parity::Even, n),
                restrict_half_spin(full, Parity::Odd, n)};
  return lift;
}

SpinLift spin_lift(const LinOp& so_element) {
  const int n = so_element.dim() / 2;
  const TowerSpec& t = so_element.tower();
  auto coords = so_coordinates(so_element);
  LinOp full(1 << n, Linearity::Linear, t);
  for (const auto& [rs, c] : coords)
    full = full + c * spin_lift_generator(rs.first, rs.second, n, t).full;
  return {full, restrict_half_spin(full, Parity::Even, n),
          restrict_half_spin(full, Parity::Odd, n)};
}

std::vector<G0BasisElement> g0_basis(const HermitianData& h) {
  const int n = h.n();
  const TowerSpec& t = h.tower();
  compatibility_lambda(h);  // propagate NotCompatible
  const FieldElement alpha = t.sqrt_m2();

  // Cache generators and their lifts for the index pairs that occur.
  std::map<std::pair<int, int>, std::pair<LinOp, LinOp>> cache;  // (r,s) -> (w matrix, full lift)
  auto gen = [&](int r, int s) -> const std::pair<LinOp, LinOp>& {
    auto it = cache.find({r, s});
    if (it == cache.end()) {
      it = cache
               .emplace(std::make_pair(r, s),
                        std::make_pair(so_generator(r, s, n, t).matrix,
                                       spin_lift_generator(r, s, n, t).full))
               .first;
    }
    return it->second;
  };

  std::vector<G0BasisElement> basis;
  basis.reserve(2 * n * n - n);
  auto push = [&](std::string label, const LinOp& w, const LinOp& full) {
    basis.push_back({std::move(label), w, restrict_half_spin(full, Parity::Even, n),
                     restrict_half_spin(full, Parity::Odd, n)});
  };

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const auto& xij = gen(i, j);
      const auto& xninj = gen(n + i, n + j);
      const auto& xinj = gen(i, n + j);
      const auto& xjni = gen(j, n + i);
      const FieldElement ani = h.a(n + i), aj = h.a(j), anj = h.a(n + j);
      const std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      push("A" + ij, ani * xij.first + aj * xninj.first, ani * xij.second + aj * xninj.second);
      push("B" + ij, alpha * (ani * xij.first - aj * xninj.first),
           alpha * (ani * xij.second - aj * xninj.second));
      push("C" + ij, ani * xinj.first - anj * xjni.first, ani * xinj.second - anj * xjni.second);
      push("D" + ij, alpha * (ani * xinj.first + anj * xjni.first),
           alpha * (ani * xinj.second + anj * xjni.second));
    }
  for (int i = 1; i <= n; ++i) {
    const auto& xini = gen(i, n + i);
    push("E(" + std::to_string(i) + ")", alpha * xini.first, alpha * xini.second);
  }
  return basis;
}

}  // namespace halfspin
