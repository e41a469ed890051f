#include "halfspin/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

namespace halfspin {

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names = {"L",    "clifford",    "forms", "lie",    "spin",
                                                 "star", "rationality", "real",  "weights"};
  return names;
}

std::vector<std::string> expand_suites(const std::vector<std::string>& requested) {
  std::set<std::string> out;
  const auto& known = known_suites();
  for (const auto& name : requested) {
    if (name == "all") {
      out.insert(known.begin(), known.end());
    } else if (std::find(known.begin(), known.end(), name) != known.end()) {
      out.insert(name);
    } else {
      throw ConfigError("suites", "unknown suite name: " + name);
    }
  }
  return {out.begin(), out.end()};
}

namespace {

struct Ctx {
  TowerSpec tower;
  int n;
  int k;
  FieldElement delta;
  std::optional<std::pair<int, int>> perm;
  std::uint64_t seed;
  int trials;
};

// A suite body reports its checks through this recorder; the first failed
// check freezes the counterexample.
struct Recorder {
  long checks = 0;
  bool failed = false;
  bool unknown = false;
  std::map<std::string, std::string> counterexample;

  void check(bool ok, const std::function<std::map<std::string, std::string>()>& details) {
    ++checks;
    if (ok || failed) return;
    failed = true;
    counterexample = details();
  }
  void check(bool ok, const std::string& what) {
    check(ok, [&] { return std::map<std::string, std::string>{{"check", what}}; });
  }
};

Ctx make_ctx(const ScenarioConfig& cfg) {
  TowerSpec tower(cfg.m1, cfg.m2[0], cfg.m2[1]);
  FieldElement delta = tower.base_element(cfg.delta[0], cfg.delta[1]);
  return Ctx{std::move(tower), cfg.n, cfg.k, std::move(delta), cfg.permutation, cfg.seed,
             cfg.trials};
}

// ---- clifford ----------------------------------------------------------

void suite_clifford(const Ctx& c, Recorder& rec) {
  const int n = c.n;
  const TowerSpec& t = c.tower;
  const int dim = 1 << n;

  std::vector<LinOp> gamma;
  gamma.reserve(2 * n);
  for (int i = 1; i <= n; ++i) gamma.push_back(wedge_op(i, n, t));
  for (int i = 1; i <= n; ++i) gamma.push_back(contraction_op(i, n, t));

  const LinOp id = LinOp::identity(dim, t);
  for (int p = 1; p <= 2 * n; ++p)
    for (int q = 1; q <= 2 * n; ++q) {
      const LinOp anti = compose(gamma[p - 1], gamma[q - 1]) + compose(gamma[q - 1], gamma[p - 1]);
      const bool paired = q == b_dual_index(p, n);
      rec.check(paired ? anti == id : anti.is_zero(),
                "anticommutator relation at generators " + std::to_string(p) + "," +
                    std::to_string(q));
    }

  for (int i = 1; i <= n; ++i) {
    rec.check(compose(wedge_op(i, n, t), wedge_op(i, n, t)).is_zero(),
              "wedge squares to zero at " + std::to_string(i));
    rec.check(compose(contraction_op(i, n, t), contraction_op(i, n, t)).is_zero(),
              "contraction squares to zero at " + std::to_string(i));
    rec.check(degree_profile(wedge_op(i, n, t), n) == std::vector<int>{1},
              "wedge raises degree by one at " + std::to_string(i));
    rec.check(degree_profile(contraction_op(i, n, t), n) == std::vector<int>{-1},
              "contraction lowers degree by one at " + std::to_string(i));
  }

  // Tagged composition agrees with sequential application.
  Rng rng(c.seed + 0xc11f);
  const int small = 4;
  for (int trial = 0; trial < c.trials; ++trial) {
    auto rand_op = [&](Linearity lin) {
      LinOp op(small, lin, t);
      for (int i = 0; i < small; ++i)
        for (int j = 0; j < small; ++j) op.set(i, j, rand_element(rng, t));
      return op;
    };
    const Linearity la = rand_below(rng, 2) ? Linearity::Conjugate : Linearity::Linear;
    const Linearity lb = rand_below(rng, 2) ? Linearity::Conjugate : Linearity::Linear;
    const LinOp a = rand_op(la), b = rand_op(lb);
    std::vector<FieldElement> v;
    for (int i = 0; i < small; ++i) v.push_back(rand_element(rng, t));
    rec.check(compose(a, b).apply(v) == a.apply(b.apply(v)),
              "composition respects linearity tags");
  }
}

// ---- forms -------------------------------------------------------------

void suite_forms(const Ctx& c, Recorder& rec) {
  const TowerSpec& t = c.tower;
  const int n = c.n, k = c.k;
  const HermitianData h = build_psi_delta_k(t, n, k, c.delta);

  const FieldElement lambda = compatibility_lambda(h);
  rec.check(lambda == -c.delta, "lambda of psi_{delta,k} equals -delta");
  rec.check(compose(build_J(h), build_J(h)).is_scalar_multiple_of_identity(lambda),
            "J^2 = lambda Id");
  rec.check(dual_form_check(h), "dual form identity on psi_{delta,k}");
  rec.check(discriminant(h) == field_pow(c.delta, k), "discriminant of psi_{delta,k} is delta^k");

  for (int a = 0; a <= k; ++a)
    for (int r = 0; r <= n - k; ++r) {
      auto [hp, perm] = permute_good_basis(t, n, k, c.delta, a, r);
      const FieldElement expected = (perm.t + perm.s) % 2 == 0
                                        ? field_pow(c.delta, a + perm.s)
                                        : -field_pow(c.delta, a + perm.s);
      rec.check(discriminant(hp) == expected, [&] {
        return std::map<std::string, std::string>{
            {"check", "permuted discriminant"},
            {"a", std::to_string(a)},
            {"r", std::to_string(r)},
            {"expected", expected.str()},
            {"got", discriminant(hp).str()}};
      });
      rec.check(compatibility_lambda(hp) == lambda, "lambda unchanged by permutation");
      rec.check(static_cast<int>(perm.swapped.size()) == perm.t + perm.s,
                "swap count equals t+s");
    }

  Rng rng(c.seed + 0xf0);
  for (int trial = 0; trial < c.trials; ++trial) {
    std::vector<FieldElement> a;
    const FieldElement lam = rand_nonzero_base_element(rng, t);
    for (int i = 0; i < n; ++i) a.push_back(rand_nonzero_base_element(rng, t));
    for (int i = 0; i < n; ++i) a.push_back(lam / a[i]);
    HermitianData hr(t, n, a);
    rec.check(dual_form_check(hr), "dual form identity on a random compatible form");
    rec.check(compose(build_J(hr), build_J(hr)).is_scalar_multiple_of_identity(lam),
              "J^2 on a random compatible form");
    if (n >= 2) {
      a[n] = a[n] + lam;  // breaks a_1 a_{n+1} while keeping it nonzero: (a_1+...)1
      if (!a[n].is_zero() && a[n] * a[0] != lam) {
        HermitianData hbad(t, n, a);
        rec.check(!dual_form_check(hbad), "dual form identity fails on an incompatible form");
        bool threw = false;
        try {
          compatibility_lambda(hbad);
        } catch (const NotCompatible&) {
          threw = true;
        }
        rec.check(threw, "compatibility_lambda rejects an incompatible form");
      }
    }
  }
}

// ---- lie ---------------------------------------------------------------

void suite_lie(const Ctx& c, Recorder& rec) {
  const TowerSpec& t = c.tower;
  const int n = c.n;
  const HermitianData h = build_psi_delta_k(t, n, c.k, c.delta);

  for (int r = 1; r <= 2 * n; ++r)
    for (int s = r + 1; s <= 2 * n; ++s)
      rec.check(preserves_b_infinitesimally(so_generator(r, s, n, t).matrix),
                "so generator preserves b at (" + std::to_string(r) + "," + std::to_string(s) +
                    ")");

  const auto basis = g0_basis(h);
  rec.check(static_cast<int>(basis.size()) == 2 * n * n - n, "g0 basis has 2n^2-n elements");
  for (const auto& e : basis) {
    rec.check(preserves_b_infinitesimally(e.w_matrix), "g0 element preserves b: " + e.label);
    rec.check(preserves_psi_infinitesimally(e.w_matrix, h),
              "g0 element preserves psi: " + e.label);
  }
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      const LinOp comm = commutator(basis[i].w_matrix, basis[j].w_matrix);
      rec.check(
          preserves_b_infinitesimally(comm) && preserves_psi_infinitesimally(comm, h), [&] {
            return std::map<std::string, std::string>{
                {"check", "g0 closure under commutator"},
                {"pair", basis[i].label + "," + basis[j].label}};
          });
    }
}

// ---- spin --------------------------------------------------------------

void suite_spin(const Ctx& c, Recorder& rec) {
  const TowerSpec& t = c.tower;
  const int n = c.n;

  struct Gen {
    int r, s;
    LinOp w;
    LinOp plus, minus;
  };
  std::vector<Gen> gens;
  for (int r = 1; r <= 2 * n; ++r)
    for (int s = r + 1; s <= 2 * n; ++s) {
      SpinLift lift = spin_lift_generator(r, s, n, t);
      gens.push_back({r, s, so_generator(r, s, n, t).matrix, std::move(lift.plus),
                      std::move(lift.minus)});
    }

  auto lift_blocks = [&](const LinOp& so_elem) {
    auto coords = so_coordinates(so_elem);
    LinOp plus(1 << (n - 1), Linearity::Linear, t);
    LinOp minus(1 << (n - 1), Linearity::Linear, t);
    for (const auto& [rs, coeff] : coords) {
      for (const auto& g : gens)
        if (g.r == rs.first && g.s == rs.second) {
          plus = plus + coeff * g.plus;
          minus = minus + coeff * g.minus;
          break;
        }
    }
    return std::make_pair(std::move(plus), std::move(minus));
  };

  // H1: the lift is a Lie algebra homomorphism on generator pairs.
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      const LinOp w_comm = commutator(gens[i].w, gens[j].w);
      const auto lifted = lift_blocks(w_comm);
      rec.check(commutator(gens[i].plus, gens[j].plus) == lifted.first &&
                    commutator(gens[i].minus, gens[j].minus) == lifted.second,
                [&] {
                  return std::map<std::string, std::string>{
                      {"check", "spin lift homomorphism"},
                      {"pair", "(" + std::to_string(gens[i].r) + "," + std::to_string(gens[i].s) +
                                   ")x(" + std::to_string(gens[j].r) + "," +
                                   std::to_string(gens[j].s) + ")"}};
                });
    }

  // H2: equivariance against the Clifford action of basis vectors.
  std::vector<LinOp> gamma;
  for (int p = 1; p <= 2 * n; ++p)
    gamma.push_back(p <= n ? wedge_op(p, n, t) : contraction_op(p - n, n, t));
  for (int r = 1; r <= 2 * n; ++r)
    for (int s = r + 1; s <= 2 * n; ++s) {
      const LinOp full = spin_lift_generator(r, s, n, t).full;
      const LinOp w = so_generator(r, s, n, t).matrix;
      for (int p = 1; p <= 2 * n; ++p) {
        std::vector<FieldElement> image;
        for (int row = 1; row <= 2 * n; ++row) image.push_back(w.at(row - 1, p - 1));
        rec.check(commutator(full, gamma[p - 1]) == clifford_gamma(image, n),
                  "spin lift equivariance at (" + std::to_string(r) + "," + std::to_string(s) +
                      "), vector " + std::to_string(p));
      }
    }
}

// ---- star --------------------------------------------------------------

void check_star_square(const HermitianData& h, Recorder& rec, const std::string& tag) {
  const int n = h.n();
  const FieldElement D = discriminant(h);
  const LinOp ss = compose(hodge_star(h).op, hodge_star(h).op);
  for (int k = 0; k <= n; ++k) {
    const int sign = (k * (n - k)) % 2 == 0 ? 1 : -1;
    const FieldElement expected = sign > 0 ? D : -D;
    rec.check(
        equal_on_degree(ss, LinOp::scalar_op(1 << n, expected), n, k), [&] {
          return std::map<std::string, std::string>{
              {"check", "star square scalar (" + tag + ")"}, {"degree", std::to_string(k)}};
        });
  }
}

void suite_star(const Ctx& c, Recorder& rec) {
  const TowerSpec& t = c.tower;
  const int n = c.n;
  const HermitianData h = build_psi_delta_k(t, n, c.k, c.delta);
  check_star_square(h, rec, "psi_delta_k");

  if (c.perm) {
    auto [hp, perm] = permute_good_basis(t, n, c.k, c.delta, c.perm->first, c.perm->second);
    check_star_square(hp, rec, "permuted basis");
    for (int k = 0; k <= n; ++k) {
      std::string diag;
      rec.check(check_star_exchange(hp, k, &diag),
                [&] { return std::map<std::string, std::string>{{"check", diag}}; });
    }
  }

  for (int k = 0; k <= n; ++k) {
    std::string diag;
    rec.check(check_star_exchange(h, k, &diag),
              [&] { return std::map<std::string, std::string>{{"check", diag}}; });
  }

  if (n % 2 == 0) {
    for (int k = 0; k <= n; ++k)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          std::string diag;
          rec.check(check_l_commutation_chain(h, k, i, j, &diag),
                    [&] { return std::map<std::string, std::string>{{"check", diag}}; });
        }
  }

  Rng rng(c.seed + 0x57a7);
  for (int trial = 0; trial < c.trials; ++trial) {
    std::vector<FieldElement> a;
    for (int i = 0; i < n; ++i) a.push_back(rand_nonzero_base_element(rng, t));
    for (int i = 0; i < n; ++i) a.push_back(t.one());
    check_star_square(HermitianData(t, n, std::move(a)), rec, "random diagonal form");
  }
}

// ---- L -----------------------------------------------------------------

void suite_L(const Ctx& c, Recorder& rec) {
  const TowerSpec& t = c.tower;
  const int n = c.n;

  // Scalar law across every k and every admissible good-basis permutation.
  for (int k = 1; k <= n; ++k)
    for (int a = 0; a <= k; ++a)
      for (int r = 0; r <= n - k; ++r) {
        auto [hp, perm] = permute_good_basis(t, n, k, c.delta, a, r);
        for (Parity par : {Parity::Even, Parity::Odd}) {
          const LOperator l = build_L(hp, par);
          rec.check(l_square_matches(l), [&] {
            return std::map<std::string, std::string>{
                {"check", "L^2 scalar"},
                {"k", std::to_string(k)},
                {"a", std::to_string(a)},
                {"r", std::to_string(r)},
                {"parity", par == Parity::Even ? "+" : "-"},
                {"expected", l.scalar_expected.str()}};
          });
        }
      }

  // Commutation with the spin-lifted g0 basis for the configured scenario.
  const auto pr = c.perm.value_or(std::make_pair(c.k, n - c.k));
  auto [hp, perm] = permute_good_basis(t, n, c.k, c.delta, pr.first, pr.second);
  const auto basis = g0_basis(hp);
  for (Parity par : {Parity::Even, Parity::Odd}) {
    const LOperator l = build_L(hp, par);
    const CommuteCheck cc = check_commutes_g0(l, basis);
    rec.checks += cc.checked - 1;
    rec.check(cc.ok, [&] {
      return std::map<std::string, std::string>{{"check", "L commutes with g0"},
                                                {"element", cc.first_failure}};
    });
  }
}

// ---- rationality -------------------------------------------------------

void suite_rationality(const Ctx& c, Recorder& rec) {
  const TowerSpec& t = c.tower;
  const int n = c.n, k = c.k;
  const NormOracle oracle = exact_norm_oracle();

  const MainScenarioReport rep = main_scenario(t, n, k, c.delta, c.perm, oracle);
  rec.check(rep.l_square_ok, "main scenario: L^2 scalar");
  rec.checks += rep.commute_checked - 1;
  rec.check(rep.commutes_ok, [&] {
    return std::map<std::string, std::string>{{"check", "main scenario: g0 commutation"},
                                              {"detail", rep.failure}};
  });
  for (const auto& v : {rep.s_plus, rep.s_minus}) {
    if (v.status == DefinedStatus::Undetermined) rec.unknown = true;
  }
  // Defined verdicts carry verified witnesses.
  const RationalityVerdict direct =
      classify_rationality(rep.m, rep.disc_permuted, rep.lambda, oracle);
  for (const auto* v : {&direct.s_plus, &direct.s_minus}) {
    if (v->status == DefinedStatus::Defined) {
      rec.check(v->witness.has_value(), "Defined verdict carries a witness");
    }
  }
  rec.check(norm_to_base(direct.s_plus.witness ? *direct.s_plus.witness : t.one()) ==
                    (direct.s_plus.witness ? direct.scalar_plus : t.one()),
            "S+ witness re-verifies");
  rec.check(norm_to_base(direct.s_minus.witness ? *direct.s_minus.witness : t.one()) ==
                    (direct.s_minus.witness ? direct.scalar_minus : t.one()),
            "S- witness re-verifies");

  // Verdict invariance across admissible even-swap permutations.
  if (n % 2 == 0 && (n / 2 - k) % 2 == 0) {
    for (int a = 0; a <= k; ++a)
      for (int r = 0; r <= n - k; ++r) {
        const int s = n - k - r;
        if ((a + s) % 2 != 0) continue;
        auto [hp, perm] = permute_good_basis(t, n, k, c.delta, a, r);
        const FieldElement d_expected =
            k % 2 == 0 ? field_pow(c.delta, a + s) : -field_pow(c.delta, a + s);
        rec.check(discriminant(hp) == d_expected,
                  "even-swap discriminant is (-1)^k delta^{2N}");
        const RationalityVerdict rv =
            classify_rationality(n / 2, discriminant(hp), compatibility_lambda(hp), oracle);
        const RepVerdict transported = (perm.t + perm.s) % 2 != 0 ? rv.s_minus : rv.s_plus;
        rec.check(transported.status == rep.s_plus.status, [&] {
          return std::map<std::string, std::string>{
              {"check", "transported verdict invariance"},
              {"a", std::to_string(a)},
              {"r", std::to_string(r)}};
        });
        if (transported.status == DefinedStatus::Undetermined) rec.unknown = true;
      }
  }
}

// ---- real --------------------------------------------------------------

void suite_real(const Ctx& c, Recorder& rec) {
  const TowerSpec& t = c.tower;
  const int n = c.n, k = c.k;

  for (int e = 1; e <= t.embeddings(); ++e) {
    const RealFormReport rf = real_form(t, n, k, c.delta, e);
    if (rf.cls == RealFormClass::SOstar) {
      rec.check(rf.psi_pos == n && rf.psi_neg == n,
                "embedded psi has signature (n, n) in the SO* case");
    } else {
      rec.check(rf.psi_pos == 2 * n - 2 * k && rf.psi_neg == 2 * k,
                "embedded psi has signature (2n-2k, 2k) in the SOpq case");
    }
  }

  const WPlusReport wp = w_plus_analysis(n, k);
  rec.check(wp.j_fixes_basis, "J fixes the real basis of W(+1)");
  rec.check(wp.orthogonal, "the real basis diagonalizes b");
  rec.check(wp.diagonal_pm2, "diagonal b-values are +-2");
  rec.check(wp.positives == 2 * n - 2 * k && wp.negatives == 2 * k,
            "signature of b on W(+1) is (2n-2k, 2k)");

  for (int m = 1; m <= 3; ++m)
    for (int kk = 0; kk <= 2 * m; ++kk) {
      const RealCaseRow row = realcase_table(m, kk);
      rec.check(row.matches_expected, [&] {
        return std::map<std::string, std::string>{{"check", "archimedean rationality table"},
                                                  {"m", std::to_string(m)},
                                                  {"k", std::to_string(kk)}};
      });
    }
}

// ---- weights -----------------------------------------------------------

void suite_weights(const Ctx& c, Recorder& rec) {
  const int n = c.n;
  rec.check(weights_half_spin(n, Parity::Even).size() == (1u << (n - 1)),
            "S+ has 2^{n-1} weights");
  rec.check(weights_half_spin(n, Parity::Odd).size() == (1u << (n - 1)),
            "S- has 2^{n-1} weights");
  for (std::uint32_t flip = 0; flip < (1u << n); ++flip) {
    const FlipReport fr = flip_weights_check(n, flip);
    rec.check(fr.rule_holds, [&] {
      return std::map<std::string, std::string>{{"check", "weight flip parity rule"},
                                                {"subset_mask", std::to_string(flip)}};
    });
  }
}

using SuiteFn = void (*)(const Ctx&, Recorder&);

const std::map<std::string, SuiteFn>& suite_registry() {
  static const std::map<std::string, SuiteFn> reg = {
      {"L", suite_L},           {"clifford", suite_clifford},
      {"forms", suite_forms},   {"lie", suite_lie},
      {"spin", suite_spin},     {"star", suite_star},
      {"rationality", suite_rationality}, {"real", suite_real},
      {"weights", suite_weights}};
  return reg;
}

}  // namespace

void validate_config(const ScenarioConfig& cfg) {
  if (cfg.n < 1 || cfg.n > 8) throw ConfigError("n", "n must be between 1 and 8");
  if (cfg.k < 1 || cfg.k > cfg.n) throw ConfigError("k", "k must satisfy 1 <= k <= n");
  const auto suites = expand_suites(cfg.suites);
  if (suites.empty()) throw ConfigError("suites", "no suites requested");
  const bool needs_even = std::find(suites.begin(), suites.end(), "L") != suites.end() ||
                          std::find(suites.begin(), suites.end(), "rationality") != suites.end();
  if (needs_even && cfg.n % 2 != 0) throw ConfigError("n", "n must be even");
  if (cfg.trials < 0 || cfg.trials > 100000)
    throw ConfigError("trials", "trials must be between 0 and 100000");

  try {
    TowerSpec tower(cfg.m1, cfg.m2[0], cfg.m2[1]);
    if (!cfg.m1 && sgn(cfg.delta[1]) != 0)
      throw ConfigError("delta", "delta has a sqrt(m1) component but the tower has no m1");
    FieldElement delta = tower.base_element(cfg.delta[0], cfg.delta[1]);
    if (delta.is_zero()) throw ConfigError("delta", "delta must be nonzero");
  } catch (const std::invalid_argument& e) {
    throw ConfigError("tower", e.what());
  }

  if (cfg.permutation) {
    const auto [a, r] = *cfg.permutation;
    if (a < 0 || a > cfg.k) throw ConfigError("permutation.a", "need 0 <= a <= k");
    if (r < 0 || r > cfg.n - cfg.k) throw ConfigError("permutation.r", "need 0 <= r <= n-k");
  }
}

std::vector<SuiteReport> run_suites(const ScenarioConfig& cfg,
                                    const std::vector<std::string>& filter) {
  validate_config(cfg);
  std::vector<std::string> names = expand_suites(cfg.suites);
  if (!filter.empty()) {
    const auto wanted = expand_suites(filter);
    std::vector<std::string> kept;
    for (const auto& name : names)
      if (std::find(wanted.begin(), wanted.end(), name) != wanted.end()) kept.push_back(name);
    names = std::move(kept);
  }

  const Ctx ctx = make_ctx(cfg);
  std::vector<SuiteReport> reports;
  reports.reserve(names.size());
  for (const auto& name : names) {
    const auto start = std::chrono::steady_clock::now();
    Recorder rec;
    suite_registry().at(name)(ctx, rec);
    const auto stop = std::chrono::steady_clock::now();

    SuiteReport rep;
    rep.suite = name;
    rep.checks_run = rec.checks;
    if (rec.failed) {
      rep.status = SuiteStatus::Fail;
      rep.counterexample = rec.counterexample;
    } else if (rec.unknown) {
      rep.status = SuiteStatus::Unknown;
    } else {
      rep.status = SuiteStatus::Pass;
    }
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    reports.push_back(std::move(rep));
  }
  return reports;
}

int exit_code_for(const std::vector<SuiteReport>& reports) {
  bool unknown = false;
  for (const auto& r : reports) {
    if (r.status == SuiteStatus::Fail) return 1;
    if (r.status == SuiteStatus::Unknown) unknown = true;
  }
  return unknown ? 2 : 0;
}

}  // namespace halfspin
