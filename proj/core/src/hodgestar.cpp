#include "halfspin/hodgestar.hpp"

namespace halfspin {

StarOperator hodge_star(const HermitianData& h) {
  const int n = h.n();
  const TowerSpec& t = h.tower();
  LinOp star(1 << n, Linearity::Conjugate, t);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    FieldElement a_I = t.one();
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) a_I *= h.a(i);
    const int sgn = blades::shuffle_sign(mask, n);
    star.set(static_cast<int>(blades::complement(mask, n)), static_cast<int>(mask),
             sgn > 0 ? a_I : -a_I);
  }
  return {std::move(star)};
}

FieldElement field_pow(const FieldElement& x, int e) {
  FieldElement base = e < 0 ? x.inverse() : x;
  FieldElement acc = x.tower().one();
  for (int i = 0; i < (e < 0 ? -e : e); ++i) acc *= base;
  return acc;
}

bool equal_on_degree(const LinOp& a, const LinOp& b, int n, int k) {
  if (a.dim() != b.dim() || a.linearity() != b.linearity())
    throw std::invalid_argument("shape/tag mismatch in degree comparison");
  for (std::uint32_t col = 0; col < (1u << n); ++col) {
    if (blades::degree(col) != k) continue;
    for (std::uint32_t row = 0; row < (1u << n); ++row)
      if (a.at(static_cast<int>(row), static_cast<int>(col)) !=
          b.at(static_cast<int>(row), static_cast<int>(col)))
        return false;
  }
  return true;
}

namespace {

int pow_sign(int base_sign, int e) { return e % 2 == 0 ? 1 : base_sign; }

FieldElement signed_scalar(const TowerSpec& t, int sign, const FieldElement& x) {
  return sign >= 0 ? x : -x;
}

}  // namespace

bool check_star_exchange(const HermitianData& h, int k, std::string* diagnostic) {
  const int n = h.n();
  const TowerSpec& t = h.tower();
  const FieldElement lambda = compatibility_lambda(h);
  const FieldElement lam_inv = lambda.inverse();
  const FieldElement D = discriminant(h);
  const LinOp star = hodge_star(h).op;

  for (int i = 1; i <= n; ++i) {
    const LinOp ell = wedge_op(i, n, t);
    const LinOp iota = contraction_op(i, n, t);

    const LinOp lhs1 = compose(star, compose(ell, star));
    const FieldElement c1 = signed_scalar(t, pow_sign(-1, n * (k + 1)), D * h.a(i));
    if (!equal_on_degree(lhs1, c1 * iota, n, k)) {
      if (diagnostic) *diagnostic = "star l star identity fails at i=" + std::to_string(i) +
                                    " k=" + std::to_string(k);
      return false;
    }

    const LinOp lhs2 = compose(star, compose(iota, star));
    const FieldElement c2 = signed_scalar(t, pow_sign(-1, n * k + 1), D * lam_inv * h.a(n + i));
    if (!equal_on_degree(lhs2, c2 * ell, n, k)) {
      if (diagnostic) *diagnostic = "star iota star identity fails at i=" + std::to_string(i) +
                                    " k=" + std::to_string(k);
      return false;
    }

    const LinOp lhs3 = compose(star, ell);
    const FieldElement c3 = signed_scalar(t, pow_sign(-1, k), h.a(i));
    if (!equal_on_degree(lhs3, c3 * compose(iota, star), n, k)) {
      if (diagnostic) *diagnostic = "one-star wedge identity fails at i=" + std::to_string(i) +
                                    " k=" + std::to_string(k);
      return false;
    }

    const LinOp lhs4 = compose(star, iota);
    const FieldElement c4 = signed_scalar(t, pow_sign(-1, k + n + 1), lam_inv * h.a(n + i));
    if (!equal_on_degree(lhs4, c4 * compose(ell, star), n, k)) {
      if (diagnostic) *diagnostic = "one-star contraction identity fails at i=" +
                                    std::to_string(i) + " k=" + std::to_string(k);
      return false;
    }
  }
  return true;
}

bool check_l_commutation_chain(const HermitianData& h, int k, int i, int j,
                               std::string* diagnostic) {
  const int n = h.n();
  if (n % 2 != 0) throw std::invalid_argument("n must be even");
  const int m = n / 2;
  const TowerSpec& t = h.tower();
  const FieldElement lambda = compatibility_lambda(h);
  const LinOp star = hodge_star(h).op;
  const int d = floor_div2(k - m);

  const LinOp lhs_core =
      compose(star, compose(contraction_op(i, n, t), contraction_op(j, n, t)));
  const FieldElement cl =
      signed_scalar(t, pow_sign(-1, d - 1), field_pow(lambda, -d + 1) * h.a(j));
  const LinOp rhs_core = compose(compose(wedge_op(i, n, t), wedge_op(j, n, t)), star);
  const FieldElement cr = signed_scalar(t, pow_sign(-1, d), field_pow(lambda, -d) * h.a(n + i));
  if (!equal_on_degree(cl * lhs_core, cr * rhs_core, n, k)) {
    if (diagnostic)
      *diagnostic = "L-commutation chain fails at i=" + std::to_string(i) +
                    " j=" + std::to_string(j) + " k=" + std::to_string(k);
    return false;
  }
  return true;
}

LOperator build_L(const HermitianData& h, Parity parity) {
  const int n = h.n();
  if (n % 2 != 0) throw std::invalid_argument("n must be even");
  const int m = n / 2;
  const TowerSpec& t = h.tower();
  const FieldElement lambda = compatibility_lambda(h);
  const FieldElement D = discriminant(h);
  const LinOp star = hodge_star(h).op;

  const auto masks = parity_masks(n, parity);
  LOperator l;
  l.parity = parity;
  l.op = LinOp(static_cast<int>(masks.size()), Linearity::Conjugate, t);
  for (size_t cj = 0; cj < masks.size(); ++cj) {
    const int k = blades::degree(masks[cj]);
    const int d = floor_div2(k - m);
    const FieldElement factor = signed_scalar(t, pow_sign(-1, d), field_pow(lambda, -d));
    for (size_t ri = 0; ri < masks.size(); ++ri) {
      const FieldElement& e = star.at(static_cast<int>(masks[ri]), static_cast<int>(masks[cj]));
      if (!e.is_zero()) l.op.set(static_cast<int>(ri), static_cast<int>(cj), factor * e);
    }
  }

  const bool parity_matches_m = (parity == Parity::Even) == (m % 2 == 0);
  const FieldElement base = signed_scalar(t, pow_sign(-1, m), D);
  l.scalar_expected = parity_matches_m ? base : base * lambda;
  return l;
}

bool l_square_matches(const LOperator& l) {
  return compose(l.op, l.op).is_scalar_multiple_of_identity(l.scalar_expected);
}

CommuteCheck check_commutes_g0(const LOperator& l, const std::vector<G0BasisElement>& basis) {
  CommuteCheck res;
  for (const auto& elem : basis) {
    const LinOp& rho = l.parity == Parity::Even ? elem.spin_plus : elem.spin_minus;
    if (rho.dim() != l.op.dim()) throw std::invalid_argument("block dimension mismatch");
    ++res.checked;
    if (compose(l.op, rho) != compose(rho, l.op)) {
      res.ok = false;
      res.first_failure = elem.label;
      return res;
    }
  }
  return res;
}

}  // namespace halfspin
