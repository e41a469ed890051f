#pragma once

#include "halfspin/spinrep.hpp"

namespace halfspin {

// The conjugate-linear Hodge star on the exterior algebra of the good
// isotropic subspace, defined by the pairing alpha ^ star(beta) =
// psi_k(alpha, beta) * vol with vol = e_1 ^ ... ^ e_n. On blades this forces
// star(e_I) = sgn(I, I') a_I e_{I'}.
struct StarOperator {
  LinOp op;  // conjugate-linear, size 2^n
};

StarOperator hodge_star(const HermitianData& h);

/// floor((k - m)/2), valid for negative arguments.
inline int floor_div2(int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

/// x^e with exact inversion for negative exponents.
FieldElement field_pow(const FieldElement& x, int e);

/// Entrywise equality of a and b on columns indexed by blades of degree k.
bool equal_on_degree(const LinOp& a, const LinOp& b, int n, int k);

// Exact operator identities on blades of degree k, for every index i:
//   star l(e_i) star = (-1)^{n(k+1)} D a_i iota(e_{n+i})
//   star iota(e_{n+i}) star = (-1)^{nk+1} D lambda^{-1} a_{n+i} l(e_i)
// and the one-star variants
//   star l(e_i) = (-1)^k a_i iota(e_{n+i}) star
//   star iota(e_{n+i}) = (-1)^{k+n+1} lambda^{-1} a_{n+i} l(e_i) star.
// Requires a compatible pair (throws NotCompatible otherwise).
bool check_star_exchange(const HermitianData& h, int k, std::string* diagnostic = nullptr);

// The cross-term identity used when commuting L past the wedge-wedge /
// contraction-contraction part of the g0 action, on blades of degree k:
//   (-1)^{d-1} lambda^{-d+1} a_j star iota(e_{n+i}) iota(e_{n+j})
//     = (-1)^d lambda^{-d} a_{n+i} l(e_i) l(e_j) star,   d = floor((k-m)/2).
bool check_l_commutation_chain(const HermitianData& h, int k, int i, int j,
                               std::string* diagnostic = nullptr);

// The conjugate-linear operator on one half-spin block acting on blades of
// degree k as (-1)^d lambda^{-d} star with d = floor((k - m)/2); its square
// is the recorded scalar.
struct LOperator {
  Parity parity = Parity::Even;          // Even: acts on S+, Odd: on S-
  LinOp op;                              // conjugate-linear, size 2^{n-1}
  FieldElement scalar_expected;          // (-1)^m D or (-1)^m D lambda per parity of m
};

/// Requires n = 2m even and a compatible pair.
LOperator build_L(const HermitianData& h, Parity parity);

/// L^2 == scalar_expected * Id, as an exact matrix identity.
bool l_square_matches(const LOperator& l);

struct CommuteCheck {
  bool ok = true;
  std::string first_failure;
  int checked = 0;
};

/// L T = T L for every supplied g0 basis element, on L's parity block.
CommuteCheck check_commutes_g0(const LOperator& l, const std::vector<G0BasisElement>& basis);

}  // namespace halfspin
