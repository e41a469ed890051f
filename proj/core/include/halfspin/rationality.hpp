#pragma once

#include "halfspin/hodgestar.hpp"

#include <cstdint>
#include <optional>

namespace halfspin {

enum class DefinedStatus { Defined, NotDefined, Undetermined };

struct RepVerdict {
  DefinedStatus status = DefinedStatus::Undetermined;
  std::optional<FieldElement> witness;  // norm witness of the L^2 scalar when Defined
  std::string note;
};

// The four-case classification: which of S+ / S- descends to E0, decided by
// norm membership of the scalars (-1)^m D and (-1)^m D lambda, with the
// scalar-to-block assignment switching with the parity of m.
struct RationalityVerdict {
  RepVerdict s_plus, s_minus;
  FieldElement scalar_plus, scalar_minus;  // the L^2 scalars of S+ and S-
  std::string case_label;                  // "i".."iv", or "unknown"
};

RationalityVerdict classify_rationality(int m, const FieldElement& D, const FieldElement& lambda,
                                        const NormOracle& oracle);

// Weights of the half-spin representations: all vectors (+-1/2, ..., +-1/2)
// with an even (S+) or odd (S-) number of minus signs, encoded as the mask of
// minus positions. Sorted ascending.
std::vector<std::uint32_t> weights_half_spin(int n, Parity sign);

struct FlipReport {
  Parity image_of_plus = Parity::Even;  // which weight set phi(X(S+)) equals
  bool rule_holds = false;              // image parity == |I| mod 2
};

/// Applies the weight-lattice isometry negating the coordinates in
/// flip_mask and compares image multisets against both weight sets.
FlipReport flip_weights_check(int n, std::uint32_t flip_mask);

enum class RealFormClass { SOstar, SOpq };

struct RealFormReport {
  int embedding = 1;
  int delta_sign = 0;
  RealFormClass cls = RealFormClass::SOstar;
  int p = 0, q = 0;          // SOpq parameters, ascending; (2n, 0) for SOstar
  int psi_pos = 0, psi_neg = 0;  // signature of the embedded psi
  std::string label() const;
};

// Real form of the isometry group of (b, psi_{delta,k}) under one embedding:
// SO*(2n) when delta embeds positive, SO(2n-2k, 2k) when negative.
RealFormReport real_form(const TowerSpec& t, int n, int k, const FieldElement& delta,
                         int embedding);

struct WPlusReport {
  int positives = 0, negatives = 0;
  bool diagonal_pm2 = false;   // every basis vector has b(v, v) = +-2
  bool orthogonal = false;     // the basis diagonalizes b
  bool j_fixes_basis = false;  // every basis vector lies in the +1 eigenspace of J
};

// The delta = -1 specialization (J^2 = Id) over Q(i): builds the explicit
// real basis of the +1 eigenspace of J and reads off the signature of b,
// expected (2n-2k, 2k).
WPlusReport w_plus_analysis(int n, int k);

struct RealCaseRow {
  int m = 0, k = 0;
  bool sostar_plus = false, sostar_minus = false;
  bool sopq_plus = false, sopq_minus = false;
  bool matches_expected = false;
};

// Archimedean rationality table for n = 2m, via classify_rationality with the
// sign oracle: the SO*(4m) row uses (D, lambda) = (1, -1), the
// SO(2n-2k, 2k) row uses ((-1)^k, 1). Expectations: SO* always (yes, no);
// SOpq (yes, yes) iff k = m mod 2, else (no, no).
RealCaseRow realcase_table(int m, int k);

struct MainScenarioReport {
  int n = 0, k = 0, m = 0;
  int a = 0, r = 0, t = 0, s = 0;
  bool preconditions_hold = false;  // m = k (mod 2) and a+s even
  FieldElement lambda;
  FieldElement disc_permuted;
  Parity l_parity = Parity::Even;  // the L on the permuted basis that transports to S+(e)
  FieldElement l_scalar;
  bool l_square_ok = false;
  bool commutes_ok = false;
  int commute_checked = 0;
  std::string failure;
  bool swap_parity_odd = false;
  RepVerdict s_plus, s_minus;  // transported back to the original basis
  std::string case_label;
  std::vector<RealFormReport> real_forms;

  bool all_checks_pass() const { return l_square_ok && commutes_ok && failure.empty(); }
};

// End-to-end pipeline: build psi_{delta,k}, permute the good basis, build the
// Hodge star and the L of the parity that transports to S+(e), verify its
// square and its commutation with the spin-lifted g0 basis, classify via the
// norm oracle, and transport the verdicts through the swap parity.
MainScenarioReport main_scenario(const TowerSpec& tower, int n, int k, const FieldElement& delta,
                                 std::optional<std::pair<int, int>> perm,
                                 const NormOracle& oracle);

}  // namespace halfspin
