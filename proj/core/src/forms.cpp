#include "halfspin/forms.hpp"

namespace halfspin {

HermitianData::HermitianData(const TowerSpec& t, int n, std::vector<FieldElement> a)
    : tower_(&t), n_(n), a_(std::move(a)) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (static_cast<int>(a_.size()) != 2 * n)
    throw std::invalid_argument("expected 2n diagonal coefficients");
  for (const auto& c : a_) {
    if (!c.in_base()) throw std::invalid_argument("psi coefficients must lie in E0");
    if (c.is_zero()) throw std::invalid_argument("psi coefficients must be nonzero");
  }
}

const FieldElement& HermitianData::a(int i) const {
  if (i < 1 || i > 2 * n_) throw std::invalid_argument("coefficient index out of range");
  return a_[i - 1];
}

FieldElement b_form(const std::vector<FieldElement>& z, const std::vector<FieldElement>& w) {
  if (z.size() != w.size() || z.empty() || z.size() % 2 != 0)
    throw std::invalid_argument("b_form needs two vectors of equal even length");
  const int n = static_cast<int>(z.size()) / 2;
  FieldElement acc = z[0].tower().zero();
  for (int i = 0; i < n; ++i) acc += z[i] * w[n + i] + z[n + i] * w[i];
  return acc;
}

FieldElement psi_form(const HermitianData& h, const std::vector<FieldElement>& z,
                      const std::vector<FieldElement>& w) {
  const int dim = 2 * h.n();
  if (static_cast<int>(z.size()) != dim || static_cast<int>(w.size()) != dim)
    throw std::invalid_argument("psi_form dimension mismatch");
  FieldElement acc = h.tower().zero();
  for (int i = 1; i <= dim; ++i) acc += h.a(i) * z[i - 1] * conj(w[i - 1]);
  return acc;
}

std::vector<FieldElement> basis_vector(const TowerSpec& t, int dim, int p) {
  if (p < 1 || p > dim) throw std::invalid_argument("basis index out of range");
  std::vector<FieldElement> v(dim, t.zero());
  v[p - 1] = t.one();
  return v;
}

HermitianData build_psi_delta_k(const TowerSpec& t, int n, int k, const FieldElement& delta) {
  if (k < 0 || k > n) throw std::invalid_argument("k out of range");
  if (delta.is_zero()) throw std::invalid_argument("delta must be nonzero");
  if (!delta.in_base()) throw std::invalid_argument("delta must lie in E0");
  std::vector<FieldElement> a;
  a.reserve(2 * n);
  const FieldElement one = t.one();
  for (int i = 1; i <= n; ++i) a.push_back(i <= k ? delta : one);
  for (int i = 1; i <= n; ++i) a.push_back(i <= k ? -one : -delta);
  return HermitianData(t, n, std::move(a));
}

FieldElement compatibility_lambda(const HermitianData& h) {
  FieldElement lambda = h.a(1) * h.a(h.n() + 1);
  for (int i = 2; i <= h.n(); ++i) {
    if (h.a(i) * h.a(h.n() + i) != lambda)
      throw NotCompatible("a_i * a_{n+i} is not independent of i");
  }
  return lambda;
}

LinOp build_J(const HermitianData& h) {
  const int n = h.n();
  LinOp j(2 * n, Linearity::Conjugate, h.tower());
  for (int i = 1; i <= 2 * n; ++i) j.set(b_dual_index(i, n) - 1, i - 1, h.a(i));
  return j;
}

bool dual_form_check(const HermitianData& h) {
  const int n = h.n();
  const int dim = 2 * n;
  const TowerSpec& t = h.tower();
  // B: W -> W*, B(v)(w) = b(v, w); on basis vectors B(e_p) = e*_{dual(p)}.
  LinOp B(dim, Linearity::Linear, t);
  for (int p = 1; p <= dim; ++p) B.set(b_dual_index(p, n) - 1, p - 1, t.one());
  // Psi: W -> W*, Psi(v)(w) = psi(w, v); conjugate-linear, Psi(e_p) = a_p e*_p.
  LinOp Psi(dim, Linearity::Conjugate, t);
  for (int p = 1; p <= dim; ++p) Psi.set(p - 1, p - 1, h.a(p));

  const LinOp Binv = B.inverse();
  const LinOp Psiinv = Psi.inverse();
  const FieldElement lambda_candidate = h.a(1) * h.a(n + 1);
  const FieldElement lam_inv = lambda_candidate.inverse();

  for (int p = 1; p <= dim; ++p) {
    const auto bp = Binv.apply(basis_vector(t, dim, p));
    const auto pp = Psiinv.apply(basis_vector(t, dim, p));
    for (int q = 1; q <= dim; ++q) {
      const auto bq = Binv.apply(basis_vector(t, dim, q));
      const auto pq = Psiinv.apply(basis_vector(t, dim, q));
      const FieldElement dual_b = b_form(bp, bq);
      const FieldElement bbar_psi = conj(b_form(pp, pq));
      if (bbar_psi != lam_inv * dual_b) return false;
    }
  }
  return true;
}

FieldElement discriminant(const HermitianData& h) {
  FieldElement d = h.tower().one();
  for (int i = 1; i <= h.n(); ++i) d *= h.a(i);
  return d;
}

std::pair<HermitianData, GoodBasisPerm> permute_good_basis(const TowerSpec& t, int n, int k,
                                                           const FieldElement& delta, int a,
                                                           int r) {
  if (a < 0 || a > k) throw std::invalid_argument("permutation parameter a out of range");
  if (r < 0 || r > n - k) throw std::invalid_argument("permutation parameter r out of range");
  HermitianData base = build_psi_delta_k(t, n, k, delta);
  GoodBasisPerm perm;
  perm.a = a;
  perm.r = r;
  perm.t = k - a;
  perm.s = n - k - r;
  for (int i = a + 1; i <= k; ++i) perm.swapped.insert(i);
  for (int i = k + r + 1; i <= n; ++i) perm.swapped.insert(i);

  std::vector<FieldElement> coeffs = base.coefficients();
  for (int i : perm.swapped) std::swap(coeffs[i - 1], coeffs[n + i - 1]);
  return {HermitianData(t, n, std::move(coeffs)), std::move(perm)};
}

StandardRepReport standard_rep_analysis(const HermitianData& h,
                                        const std::vector<LinOp>& g0_w_matrices, Rng& rng,
                                        int trials, const NormOracle& oracle) {
  const TowerSpec& t = h.tower();
  const int dim = 2 * h.n();
  StandardRepReport rep;
  rep.lambda = compatibility_lambda(h);

  const LinOp j = build_J(h);
  const LinOp res_j = res_matrix(j);

  // (alpha + beta J)(conj(alpha) - beta J) = (alpha conj(alpha) - lambda beta conj(beta)) Id,
  // checked on the scalar restriction where both sides are honest E0-matrices.
  rep.product_identity_ok = true;
  for (int trial = 0; trial < trials; ++trial) {
    const FieldElement alpha = rand_element(rng, t);
    const FieldElement beta = rand_element(rng, t);
    const LinOp lhs1 = res_matrix(LinOp::scalar_op(dim, alpha)) + res_matrix(beta * j);
    const LinOp lhs2 = res_matrix(LinOp::scalar_op(dim, conj(alpha))) - res_matrix(beta * j);
    const FieldElement scalar = alpha * conj(alpha) - rep.lambda * beta * conj(beta);
    const LinOp rhs = res_matrix(LinOp::scalar_op(dim, scalar));
    if (compose(lhs1, lhs2) != rhs) {
      rep.product_identity_ok = false;
      rep.first_failure = "product identity at alpha=" + alpha.str() + " beta=" + beta.str();
      break;
    }
  }

  rep.j_commutes = true;
  for (size_t idx = 0; idx < g0_w_matrices.size(); ++idx) {
    const LinOp res_t = res_matrix(g0_w_matrices[idx]);
    if (compose(res_j, res_t) != compose(res_t, res_j)) {
      rep.j_commutes = false;
      rep.first_failure = "J fails to commute with g0 element #" + std::to_string(idx);
      break;
    }
  }

  rep.lambda_norm = oracle(rep.lambda);
  switch (rep.lambda_norm.status) {
    case NormStatus::Norm: rep.verdict = StandardRepReport::Verdict::Defined; break;
    case NormStatus::NotNorm: rep.verdict = StandardRepReport::Verdict::NotDefined; break;
    case NormStatus::Unknown: rep.verdict = StandardRepReport::Verdict::Undetermined; break;
  }
  return rep;
}

}  // namespace halfspin
