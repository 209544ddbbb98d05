#pragma once

// Matrix Lie algebras with brackets and adjoint calculus, Euler-element
// detection via spectral projections, the involution tau_h, graded cone
// parts, and positive-cone membership for finite-dimensional representations.

#include <Eigen/Dense>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "modwedge/cones.hpp"
#include "modwedge/errors.hpp"

namespace modwedge::liealg {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

class LieAlgebraSpec {
 public:
  LieAlgebraSpec(std::string name, std::vector<MatrixXd> basis, double tol = 1e-9);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int matrix_size() const { return static_cast<int>(basis_.front().rows()); }
  const std::vector<MatrixXd>& basis() const { return basis_; }

  // Coordinates <-> matrices. to_coordinates throws NotInAlgebra when the
  // matrix is not in the span (residual above tol * ||m||).
  MatrixXd to_matrix(const VectorXd& coords) const;
  VectorXd to_coordinates(const MatrixXd& m) const;
  bool in_algebra(const MatrixXd& m, double* residual = nullptr) const;

  VectorXd bracket(const VectorXd& x, const VectorXd& y) const;
  // Structure constants c_{ij}^k as a flat d*d*d array, c[ (i*d+j)*d + k ].
  const std::vector<double>& structure_constants() const { return c_; }

  double closure_defect() const { return closure_defect_; }
  double jacobi_defect() const { return jacobi_defect_; }
  double tol() const { return tol_; }

 private:
  std::string name_;
  std::vector<MatrixXd> basis_;
  double tol_;
  // Least-squares solve data for to_coordinates.
  MatrixXd basis_flat_;  // (N*N) x d
  Eigen::CompleteOrthogonalDecomposition<MatrixXd> solver_;
  std::vector<double> c_;
  double closure_defect_ = 0;
  double jacobi_defect_ = 0;
};

// Matrix of ad(x) : y -> [x,y] in the given basis.
MatrixXd ad_matrix(const LieAlgebraSpec& g, const VectorXd& x);

struct EulerDatum {
  VectorXd h;                      // coordinates
  std::vector<double> spectrum;    // sorted eigenvalues of ad h actually present
  MatrixXd p_minus, p_zero, p_plus;  // spectral projections (d x d)
  MatrixXd tau_h;                  // p_zero - p_plus - p_minus

  MatrixXd graded_projection(int eigenvalue) const;
};

struct EulerCheckResult {
  bool is_euler = false;
  std::optional<EulerDatum> datum;
  std::string reason;  // when not Euler
};

// ad h nonzero, diagonalizable over R, spectrum within {-1,0,1}.
// Projections by Lagrange interpolation over the eigenvalues present.
EulerCheckResult euler_check(const LieAlgebraSpec& g, const VectorXd& h,
                             double tol = 1e-7);

MatrixXd tau_h_matrix(const EulerDatum& datum);

// tau_h as automorphism / grading-law defects, for tests and validation.
double automorphism_defect(const LieAlgebraSpec& g, const MatrixXd& tau);
double grading_defect(const LieAlgebraSpec& g, const EulerDatum& datum);

struct GradedCones {
  ConePtr plus;
  ConePtr minus;
};

// C_± = ±C ∩ g_±1(h). Preconditions e^{t ad h} C = C and -tau_h C = C are
// asserted on `samples` random cone points; the projection identity
// p_±1(C) = ±C_± is spot-checked the same way.
GradedCones cone_graded_parts(const ConePtr& cone, const LieAlgebraSpec& g,
                              const EulerDatum& datum, int samples,
                              std::mt19937_64& rng, double tol = 1e-9);

// x in C_U iff -i sum_i x_i pi(X_i) >= 0 for skew-Hermitian generators pi(X_i).
bool rep_positive_cone_contains(const std::vector<MatrixXcd>& generators,
                                const VectorXd& x, double tol = 1e-9);

enum class TriState { CONFIRMED, REFUTED, UNKNOWN };

struct SymmetricSearchResult {
  TriState state = TriState::UNKNOWN;
  std::optional<std::vector<VectorXd>> witness;  // exp word with Ad(w)h = -h
  double best_residual = 0;
  std::string obstruction;  // why REFUTED
};

struct SearchBudget {
  int restarts = 24;
  int iterations = 400;
  uint64_t seed = 0;
};

// Numeric search for -h in Inn(g)h. REFUTED only on exact invariants
// (matrix or ad eigenvalue multisets not symmetric), CONFIRMED only when a
// witness word reaches residual < tol.
SymmetricSearchResult symmetric_euler_search(const LieAlgebraSpec& g,
                                             const EulerDatum& datum,
                                             const SearchBudget& budget = {},
                                             double tol = 1e-8);

// ---- Built-in algebra catalog -------------------------------------------

LieAlgebraSpec make_sl(int n);
LieAlgebraSpec make_gl(int n);
LieAlgebraSpec make_so_pq(int p, int q);
LieAlgebraSpec make_sp(int n);        // sp_{2n}(R)
LieAlgebraSpec make_affine_line();    // R ⋊ R
LieAlgebraSpec make_poincare(int d);  // R^{1,d-1} ⋊ so(1,d-1), affine matrices
LieAlgebraSpec make_oscillator();     // heis(R^2) ⋊ R h, split oscillator
LieAlgebraSpec make_hcsp(int n = 1);  // heis(R^2n) ⋊ csp(R^2n)

// Standard Euler candidates, as coordinates in the catalog bases.
VectorXd sl_euler_element(const LieAlgebraSpec& sl, int k);  // h_k block element
VectorXd so_boost_element(const LieAlgebraSpec& so_1d);      // boost in (0,1)
VectorXd sp_euler_element(const LieAlgebraSpec& sp);         // h_n, diag(1,-1)/2 blocks
VectorXd poincare_boost_element(const LieAlgebraSpec& poincare);
VectorXd oscillator_euler_element(const LieAlgebraSpec& osc);
VectorXd hcsp_euler_element(const LieAlgebraSpec& hcsp);

// Catalog lookup by name: "sl2".."sl9", "gl2".., "so(1,4)", "sp4", "poincare4",
// "oscillator", "hcsp", "affine". Throws UnknownAlgebra.
LieAlgebraSpec algebra_by_name(const std::string& name);
// Named element in an algebra: "h1".."hk" for sl/gl, "boost", "h".
VectorXd element_by_name(const LieAlgebraSpec& g, const std::string& element);

}  // namespace modwedge::liealg
