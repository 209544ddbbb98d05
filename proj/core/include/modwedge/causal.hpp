#pragma once

// Causal homogeneous spaces and their wedge geometry: positivity-region
// predicates, the Rindler compression semigroup, de Sitter and AdS^2 wedges,
// group-type wedges, the conformal embedding into the isotropic quadric, and
// the SL2 -> SO(1,2) covering.
//
// Conventions: Minkowski R^{1,d-1} carries coordinates (x0, x1, ..),
// eta(x,y) = x0 y0 - x.y, boost in the (x0,x1)-plane, Rindler wedge
// W_R = { x1 > |x0| }. De Sitter dS^d sits in R^{1,d} with the same boost;
// its wedge base point is e1.

#include <Eigen/Dense>
#include <optional>
#include <random>

#include "modwedge/cones.hpp"
#include "modwedge/lie_algebra.hpp"

namespace modwedge::causal {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using liealg::ConePtr;

// ---- affine positivity regions -------------------------------------------

// x lies in W_E^+(h) = C_+° ⊕ E_0 ⊕ C_-°, evaluated through the graded
// decomposition of h (spectral projections); equivalent to h·x ∈ C°.
// Cone invariance under e^{th} and -tau_h is asserted on `samples` points.
bool affine_positivity_contains(const MatrixXd& h, const ConePtr& cone,
                                const VectorXd& x, double tol = 1e-12);
void assert_affine_cone_invariance(const MatrixXd& h, const ConePtr& cone,
                                   int samples, std::mt19937_64& rng,
                                   double tol = 1e-9);

// Spectral projections of a diagonalizable matrix with spectrum in {-1,0,1}.
struct GradedDecomposition {
  MatrixXd p_minus, p_zero, p_plus;
};
GradedDecomposition graded_decomposition(const MatrixXd& h, double tol = 1e-9);

// ---- Rindler wedge in Minkowski space ------------------------------------

struct PoincareElement {
  VectorXd translation;  // v in R^{1,d-1}
  MatrixXd lorentz;      // Lambda in O(1,d-1)
};

double rindler_margin(const VectorXd& x);  // x1 - |x0|
bool in_rindler_wedge(const VectorXd& x, double margin = 0.0);

// Exact membership in S_{W_R} = cl(W_R) ⋊ O(1,d-1)_{W_R}: v in cl(W_R) and
// Lambda commutes with tau_h = diag(-1,-1,1,..,1), its (x0,x1)-block is a
// boost or boost·(time flip), the rest orthogonal.
bool rindler_compression_contains(const PoincareElement& g, double tol = 1e-9);

// For g outside the semigroup, a wedge point escaping under g.
std::optional<VectorXd> rindler_escape_witness(const PoincareElement& g,
                                               std::mt19937_64& rng,
                                               int attempts = 512,
                                               double tol = 1e-9);

// ---- de Sitter space dS^d ------------------------------------------------

double ds_surface_defect(const VectorXd& x);  // eta(x,x) + 1
bool ds_on_surface(const VectorXd& x, double tol = 1e-8);
// x in wedge of the (0,1)-boost: on-surface and x1 > |x0|.
bool ds_positivity_contains(const VectorXd& x, double tol = 1e-8);

// Geodesic exponential at the base point e1: tangent x with eta(x, e1) = 0,
// result C(eta(x,x)) e1 + S(eta(x,x)) x on dS^d.
VectorXd ds_exp(const VectorXd& tangent, double tol = 1e-8);

// Modular flow exp(t h) on ambient R^{1,d}.
VectorXd ds_boost_flow(const VectorXd& x, double t);

// Newton steps on the quadric constraint eta(x,x) = -1, keeping flow
// iterations on-manifold.
VectorXd ds_project(const VectorXd& x, int steps = 2);

// q_k direction R(y): rotation generators mixing e1 with e2..ed; sample the
// wedge as g0 · exp(R(y)) · e1.
struct DsWedgeSample {
  VectorXd point;
  bool inside = false;
};
DsWedgeSample ds_wedge_sample(const MatrixXd& g0, const VectorXd& y,
                              double tol = 1e-8);
MatrixXd ds_rotation_generator(const VectorXd& y);  // R(y), (d+1)x(d+1)

// ---- AdS^2 ----------------------------------------------------------------

struct Ads2Result {
  bool inside = false;
  int component = 0;  // sign of x1 when inside
};
// Surface x1^2 + x2^2 - x3^2 = 1; region x1 x3 > 0, |x2| < |x3|.
Ads2Result ads2_positivity_contains(const VectorXd& x, double tol = 1e-8);

// ---- group-type wedges -----------------------------------------------------

// W_G^+(h) = { g : Ad(g) h0 - h0 in -C° } and S(h0,C) = { g : h0 - Ad(g) h0 in C }.
bool group_type_wedge_contains(const liealg::LieAlgebraSpec& g,
                               const MatrixXd& group_element, const VectorXd& h0,
                               const ConePtr& cone, double tol = 1e-9);
bool s_h_cg_contains(const liealg::LieAlgebraSpec& g, const MatrixXd& group_element,
                     const VectorXd& h0, const ConePtr& cone, double tol = 1e-9);

// ---- conformal embedding and the flag-manifold wedge ----------------------

// eta(v) = [ (1 - beta(v,v))/2 : v : -(1 + beta(v,v))/2 ] on the isotropic
// quadric of R^{2,d}; normalized to unit norm, first nonzero coordinate > 0.
VectorXd conformal_embed(const VectorXd& v);
double quadric_form(const VectorXd& p);  // p1^2 + p2^2 - rest
// Preimage in the affine chart lies in the open forward cone C_+°.
bool flag_wedge_contains(const VectorXd& p, double tol = 1e-9);

// ---- SL2(R) -> SO(1,2)_e covering ------------------------------------------

// phi: R^3 -> sl2, x -> [[x1, -x0-x2],[x0-x2, -x1]]/2; Lambda(g) = phi^{-1} Ad(g) phi.
MatrixXd sl2_phi(const VectorXd& x);        // 2x2 from (x0,x1,x2)
VectorXd sl2_phi_inverse(const MatrixXd& m);
MatrixXd sl2_to_so12(const MatrixXd& g, double tol = 1e-9);

// ---- Cayley transform on the circle ---------------------------------------

// C(x) = (i - x)/(i + x), C(inf) = -1; inverse i (1-z)/(1+z).
std::complex<double> cayley_circle(double x);
double cayley_circle_inverse(std::complex<double> z);

// ---- catalog of causal spaces ---------------------------------------------

enum class SpaceKind { Affine, Minkowski, DeSitter, AntiDeSitter2, GroupType, FlagQuadric, Circle };

struct CausalSpace {
  SpaceKind kind;
  int dim = 0;          // ambient/point dimension
  double surface_tol = 1e-8;
  bool on_space(const VectorXd& x) const;
};

struct WedgeDescriptor {
  CausalSpace space;
  MatrixXd h;        // matrix of the Euler element acting on the ambient space
  VectorXd anchor;   // a point strictly inside the selected component
  ConePtr cone;      // for affine kinds

  // Validates the anchor on construction.
  static WedgeDescriptor make(CausalSpace space, MatrixXd h, VectorXd anchor,
                              ConePtr cone = nullptr);
  bool contains(const VectorXd& x, double tol = 1e-9) const;
};

}  // namespace modwedge::causal
