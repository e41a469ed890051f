#pragma once

#include "halfspin/linop.hpp"
#include "halfspin/norms.hpp"
#include "halfspin/random.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace halfspin {

// The pair (b, psi) fails to admit the scalar lambda with J^2 = lambda*Id.
struct NotCompatible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Diagonal Hermitian data in a good basis e_1..e_2n: the bilinear form is
// always the standard hyperbolic one, b(e_i, e_{n+j}) = delta_ij, and psi is
// determined by its 2n diagonal coefficients a_i, nonzero elements of E0.
class HermitianData {
 public:
  HermitianData(const TowerSpec& t, int n, std::vector<FieldElement> a);

  int n() const { return n_; }
  const TowerSpec& tower() const { return *tower_; }
  /// 1-based, i in 1..2n.
  const FieldElement& a(int i) const;
  const std::vector<FieldElement>& coefficients() const { return a_; }

 private:
  const TowerSpec* tower_;
  int n_;
  std::vector<FieldElement> a_;
};

/// 1-based index pairing of the hyperbolic form: i <-> n+i.
inline int b_dual_index(int p, int n) { return p <= n ? p + n : p - n; }

/// b(z, w) for coordinate vectors of length 2n.
FieldElement b_form(const std::vector<FieldElement>& z, const std::vector<FieldElement>& w);

/// psi(z, w) = sum a_i z_i conj(w_i).
FieldElement psi_form(const HermitianData& h, const std::vector<FieldElement>& z,
                      const std::vector<FieldElement>& w);

/// e_p as a coordinate vector of length dim (1-based p).
std::vector<FieldElement> basis_vector(const TowerSpec& t, int dim, int p);

// psi_{delta,k}: a_i = delta (i <= k), 1 (k < i <= n), -1 (n < i <= n+k),
// -delta (n+k < i <= 2n). Accepts 0 <= k <= n; delta must be nonzero in E0.
HermitianData build_psi_delta_k(const TowerSpec& t, int n, int k, const FieldElement& delta);

/// The scalar lambda with a_i * a_{n+i} = lambda for all i; throws
/// NotCompatible when the products differ.
FieldElement compatibility_lambda(const HermitianData& h);

/// The conjugate-linear operator J = B^{-1} Psi: J(e_i) = a_i e_{n+i},
/// J(e_{n+i}) = a_{n+i} e_i.
LinOp build_J(const HermitianData& h);

// Materializes the dual form b_dual on W* and the conjugate-induced form
// bbar_Psi(xi, eta) = conj(b(Psi^{-1} xi, Psi^{-1} eta)), and tests the exact
// equality bbar_Psi = lambda^{-1} b_dual with lambda = a_1 a_{n+1}. True
// precisely when the pair is compatible.
bool dual_form_check(const HermitianData& h);

/// D = a_1 ... a_n, the determinant of psi restricted to the good isotropic
/// subspace spanned by e_1..e_n.
FieldElement discriminant(const HermitianData& h);

// A re-choice of good basis swapping e_i <-> e_{n+i} on the recorded index
// set; t and s count the swaps inside and outside {1..k}.
struct GoodBasisPerm {
  std::set<int> swapped;
  int a = 0, r = 0, t = 0, s = 0;
};

// Starting from psi_{delta,k}, keeps e_i for i <= a and k < i <= k+r and
// swaps the rest; the new discriminant is (-1)^{t+s} delta^{a+s} with
// t = k-a, s = n-k-r, and lambda is unchanged.
std::pair<HermitianData, GoodBasisPerm> permute_good_basis(const TowerSpec& t, int n, int k,
                                                           const FieldElement& delta, int a,
                                                           int r);

struct StandardRepReport {
  FieldElement lambda;
  bool product_identity_ok = false;
  bool j_commutes = false;
  std::string first_failure;
  NormVerdict lambda_norm;
  enum class Verdict { Defined, NotDefined, Undetermined } verdict = Verdict::Undetermined;
};

// Rationality analysis of the standard representation on Res_{E/E0} W
// (dimension 4n over E0): the E[J]-product identity on random pairs, the
// commutation of J with the supplied g0 action matrices, and the norm
// criterion for lambda.
StandardRepReport standard_rep_analysis(const HermitianData& h,
                                        const std::vector<LinOp>& g0_w_matrices, Rng& rng,
                                        int trials, const NormOracle& oracle);

}  // namespace halfspin
