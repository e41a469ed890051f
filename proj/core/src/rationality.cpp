#include "halfspin/rationality.hpp"

#include <algorithm>

namespace halfspin {

namespace {

RepVerdict verdict_from(const NormVerdict& nv) {
  RepVerdict v;
  switch (nv.status) {
    case NormStatus::Norm: v.status = DefinedStatus::Defined; break;
    case NormStatus::NotNorm: v.status = DefinedStatus::NotDefined; break;
    case NormStatus::Unknown: v.status = DefinedStatus::Undetermined; break;
  }
  v.witness = nv.witness;
  v.note = nv.certificate;
  return v;
}

}  // namespace

RationalityVerdict classify_rationality(int m, const FieldElement& D, const FieldElement& lambda,
                                        const NormOracle& oracle) {
  if (D.is_zero() || lambda.is_zero()) throw std::invalid_argument("D and lambda must be nonzero");
  const FieldElement s1 = m % 2 == 0 ? D : -D;  // (-1)^m D
  const FieldElement s2 = s1 * lambda;          // (-1)^m D lambda

  RationalityVerdict v;
  v.scalar_plus = m % 2 == 0 ? s1 : s2;
  v.scalar_minus = m % 2 == 0 ? s2 : s1;
  v.s_plus = verdict_from(oracle(v.scalar_plus));
  v.s_minus = verdict_from(oracle(v.scalar_minus));

  const auto d = [](const RepVerdict& r) { return r.status == DefinedStatus::Defined; };
  const auto u = [](const RepVerdict& r) { return r.status == DefinedStatus::Undetermined; };
  if (u(v.s_plus) || u(v.s_minus)) {
    v.case_label = "unknown";
  } else if (d(v.s_plus) && d(v.s_minus)) {
    v.case_label = "i";
  } else if (d(v.s_plus)) {
    v.case_label = "ii";
  } else if (d(v.s_minus)) {
    v.case_label = "iii";
  } else {
    v.case_label = "iv";
  }
  return v;
}

std::vector<std::uint32_t> weights_half_spin(int n, Parity sign) {
  std::vector<std::uint32_t> out;
  out.reserve(1u << (n - 1));
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (parity_of(mask) == sign) out.push_back(mask);
  return out;
}

FlipReport flip_weights_check(int n, std::uint32_t flip_mask) {
  auto plus = weights_half_spin(n, Parity::Even);
  std::vector<std::uint32_t> image;
  image.reserve(plus.size());
  for (std::uint32_t w : plus) image.push_back(w ^ flip_mask);
  std::sort(image.begin(), image.end());

  FlipReport rep;
  if (image == weights_half_spin(n, Parity::Even)) {
    rep.image_of_plus = Parity::Even;
  } else if (image == weights_half_spin(n, Parity::Odd)) {
    rep.image_of_plus = Parity::Odd;
  } else {
    rep.rule_holds = false;
    return rep;
  }
  const Parity expected = parity_of(flip_mask) == Parity::Even ? Parity::Even : Parity::Odd;
  rep.rule_holds = rep.image_of_plus == expected;
  return rep;
}

std::string RealFormReport::label() const {
  if (cls == RealFormClass::SOstar) return "SOstar(" + std::to_string(p) + ")";
  return "SOpq(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

RealFormReport real_form(const TowerSpec& t, int n, int k, const FieldElement& delta,
                         int embedding) {
  if (k < 1 || k > n) throw std::invalid_argument("k out of range");
  RealFormReport rep;
  rep.embedding = embedding;
  rep.delta_sign = embed_sign(delta, embedding);
  if (rep.delta_sign == 0) throw std::invalid_argument("delta embeds to zero");
  if (rep.delta_sign > 0) {
    rep.cls = RealFormClass::SOstar;
    rep.p = 2 * n;
    rep.q = 0;
  } else {
    rep.cls = RealFormClass::SOpq;
    rep.p = std::min(2 * n - 2 * k, 2 * k);
    rep.q = std::max(2 * n - 2 * k, 2 * k);
  }
  const HermitianData h = build_psi_delta_k(t, n, k, delta);
  for (int i = 1; i <= 2 * n; ++i) {
    (embed_sign(h.a(i), embedding) > 0 ? rep.psi_pos : rep.psi_neg) += 1;
  }
  return rep;
}

WPlusReport w_plus_analysis(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("k out of range");
  const TowerSpec t(std::nullopt, Rational(-1));  // E = Q(i)
  const HermitianData h = build_psi_delta_k(t, n, k, t.from_int(-1));
  const LinOp j = build_J(h);
  const FieldElement im = t.sqrt_m2();
  const int dim = 2 * n;

  // Real basis of the +1 eigenspace of J: for i > k, e_i + e_{n+i} and
  // i(e_i - e_{n+i}); for i <= k, i(e_i + e_{n+i}) and e_i - e_{n+i}.
  std::vector<std::vector<FieldElement>> vs;
  for (int i = 1; i <= n; ++i) {
    auto ei = basis_vector(t, dim, i);
    auto eni = basis_vector(t, dim, n + i);
    std::vector<FieldElement> sum(dim, t.zero()), diff(dim, t.zero());
    for (int p = 0; p < dim; ++p) {
      sum[p] = ei[p] + eni[p];
      diff[p] = ei[p] - eni[p];
    }
    if (i > k) {
      vs.push_back(sum);
      for (auto& c : diff) c = im * c;
      vs.push_back(diff);
    } else {
      for (auto& c : sum) c = im * c;
      vs.push_back(sum);
      vs.push_back(diff);
    }
  }

  WPlusReport rep;
  rep.j_fixes_basis = true;
  rep.orthogonal = true;
  rep.diagonal_pm2 = true;
  const FieldElement two = t.from_int(2);
  for (size_t p = 0; p < vs.size(); ++p) {
    if (j.apply(vs[p]) != vs[p]) rep.j_fixes_basis = false;
    const FieldElement bpp = b_form(vs[p], vs[p]);
    if (bpp == two) {
      ++rep.positives;
    } else if (bpp == -two) {
      ++rep.negatives;
    } else {
      rep.diagonal_pm2 = false;
    }
    for (size_t q = p + 1; q < vs.size(); ++q)
      if (!b_form(vs[p], vs[q]).is_zero()) rep.orthogonal = false;
  }
  return rep;
}

RealCaseRow realcase_table(int m, int k) {
  const TowerSpec t(std::nullopt, Rational(-1));
  const NormOracle oracle = embedding_sign_oracle(1);
  RealCaseRow row;
  row.m = m;
  row.k = k;

  // SO*(4m): psi_0 has D = 1, lambda = -1.
  const auto star = classify_rationality(m, t.one(), t.from_int(-1), oracle);
  row.sostar_plus = star.s_plus.status == DefinedStatus::Defined;
  row.sostar_minus = star.s_minus.status == DefinedStatus::Defined;

  // SO(2n-2k, 2k): psi_{-1,k} has D = (-1)^k, lambda = 1.
  const auto pq = classify_rationality(m, t.from_int(k % 2 == 0 ? 1 : -1), t.one(), oracle);
  row.sopq_plus = pq.s_plus.status == DefinedStatus::Defined;
  row.sopq_minus = pq.s_minus.status == DefinedStatus::Defined;

  const bool parity_match = (k - m) % 2 == 0;
  row.matches_expected = row.sostar_plus && !row.sostar_minus &&
                         row.sopq_plus == parity_match && row.sopq_minus == parity_match;
  return row;
}

MainScenarioReport main_scenario(const TowerSpec& tower, int n, int k, const FieldElement& delta,
                                 std::optional<std::pair<int, int>> perm,
                                 const NormOracle& oracle) {
  if (n % 2 != 0) throw std::invalid_argument("n must be even");
  MainScenarioReport rep;
  rep.n = n;
  rep.k = k;
  rep.m = n / 2;
  rep.a = perm ? perm->first : k;
  rep.r = perm ? perm->second : n - k;

  auto [h, p] = permute_good_basis(tower, n, k, delta, rep.a, rep.r);
  rep.t = p.t;
  rep.s = p.s;
  rep.swap_parity_odd = (p.t + p.s) % 2 != 0;
  rep.preconditions_hold = (rep.m - k) % 2 == 0 && (rep.a + rep.s) % 2 == 0;

  rep.lambda = compatibility_lambda(h);
  rep.disc_permuted = discriminant(h);

  // The block that transports back to S+(e): S+(e') when the swap count is
  // even, S-(e') when odd.
  rep.l_parity = rep.swap_parity_odd ? Parity::Odd : Parity::Even;
  const LOperator l = build_L(h, rep.l_parity);
  rep.l_scalar = l.scalar_expected;
  rep.l_square_ok = l_square_matches(l);
  if (!rep.l_square_ok) rep.failure = "L^2 differs from its expected scalar";

  const auto basis = g0_basis(h);
  const CommuteCheck cc = check_commutes_g0(l, basis);
  rep.commutes_ok = cc.ok;
  rep.commute_checked = cc.checked;
  if (!cc.ok) rep.failure = "L fails to commute with g0 element " + cc.first_failure;

  const RationalityVerdict rv = classify_rationality(rep.m, rep.disc_permuted, rep.lambda, oracle);
  rep.s_plus = rep.swap_parity_odd ? rv.s_minus : rv.s_plus;
  rep.s_minus = rep.swap_parity_odd ? rv.s_plus : rv.s_minus;
  rep.case_label = rv.case_label;
  if (rep.swap_parity_odd) {
    // transporting through an odd swap exchanges the two blocks
    if (rep.case_label == "ii") rep.case_label = "iii";
    else if (rep.case_label == "iii") rep.case_label = "ii";
  }

  for (int e = 1; e <= tower.embeddings(); ++e)
    rep.real_forms.push_back(real_form(tower, n, k, delta, e));
  return rep;
}

}  // namespace halfspin
