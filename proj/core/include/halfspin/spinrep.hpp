#pragma once

#include "halfspin/exterior.hpp"
#include "halfspin/forms.hpp"

#include <map>
#include <utility>

namespace halfspin {

// The generator of so(W, b) attached to e_r ^ e_s (1-based, r < s), acting as
// x -> b(e_s, x) e_r - b(e_r, x) e_s with the unscaled hyperbolic b.
struct SoGenerator {
  int r = 0, s = 0;
  LinOp matrix;  // E-linear on W, size 2n
};

SoGenerator so_generator(int r, int s, int n, const TowerSpec& t);

/// b(Tz, w) + b(z, Tw) = 0 on all basis pairs.
bool preserves_b_infinitesimally(const LinOp& op);

/// psi(Tz, w) = -conj(psi(Tw, z)) on all basis pairs.
bool preserves_psi_infinitesimally(const LinOp& op, const HermitianData& h);

// Coordinates of an element of so(W, b) on the X_{rs} basis; c_{rs} is read
// off the (r, dual(s)) entry and the reconstruction is verified exactly.
// Throws std::invalid_argument when the operator is not in so(W, b).
std::map<std::pair<int, int>, FieldElement> so_coordinates(const LinOp& op);

// The image of X_{rs} under the spin representation:
// gamma(e_r) gamma(e_s) - b'(e_r, e_s) with the rescaled b' = b/2, acting on
// the full exterior algebra and on the two half-spin blocks.
struct SpinLift {
  LinOp full;   // on all of the exterior algebra, size 2^n
  LinOp plus;   // block on even blades, size 2^{n-1}
  LinOp minus;  // block on odd blades
};

SpinLift spin_lift_generator(int r, int s, int n, const TowerSpec& t);

/// Lift of an arbitrary element of so(W, b) by linearity through so_coordinates.
SpinLift spin_lift(const LinOp& so_element);

// One member of the E0-basis of g0 = Lie(G(W, b, psi)) together with its spin
// action. label records the family and indices, e.g. "A(1,2)".
struct G0BasisElement {
  std::string label;
  LinOp w_matrix;
  LinOp spin_plus, spin_minus;
};

// The five families spanning g0 over E0 (2n^2 - n elements), built with the
// purely imaginary unit alpha = sqrt(m2):
//   A(i,j) = a_{n+i} X_{ij} + a_j X_{n+i,n+j}
//   B(i,j) = alpha (a_{n+i} X_{ij} - a_j X_{n+i,n+j})
//   C(i,j) = a_{n+i} X_{i,n+j} - a_{n+j} X_{j,n+i}
//   D(i,j) = alpha (a_{n+i} X_{i,n+j} + a_{n+j} X_{j,n+i})
//   E(i)   = alpha X_{i,n+i}
std::vector<G0BasisElement> g0_basis(const HermitianData& h);

}  // namespace halfspin
