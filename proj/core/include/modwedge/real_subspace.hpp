#pragma once

// Closed real subspaces of C^n, stored as frames that are orthonormal for the
// real inner product Re<.,.>, plus antilinear operators z -> M conj(z).
// This is the dense linear-algebra substrate everything else builds on.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "modwedge/errors.hpp"

namespace modwedge::hilbert {

using Complex = std::complex<double>;
using MatrixXcd = Eigen::MatrixXcd;
using VectorXcd = Eigen::VectorXcd;
using MatrixXd = Eigen::MatrixXd;
using VectorXd = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-9;        // algebraic identities
inline constexpr double kSubspaceTol = 1e-8;       // subspace round trips

// Re<x,y> on C^n.
double re_inner(const VectorXcd& x, const VectorXcd& y);

// C^n -> R^{2n}, stacking real over imaginary parts. Isometric for Re<.,.>.
VectorXd realify(const VectorXcd& v);
MatrixXd realify_columns(const MatrixXcd& m);
VectorXcd complexify(const VectorXd& v);

// The 2n x 2n real matrix of a complex-linear map.
MatrixXd realify_linear(const MatrixXcd& m);
// The 2n x 2n real matrix of the antilinear map z -> M conj(z).
MatrixXd realify_antilinear(const MatrixXcd& m);

class RealSubspace {
 public:
  // Builds from a frame whose columns are already Re-orthonormal; validated.
  RealSubspace(int ambient_dim, MatrixXcd frame, double tol = kDefaultTol);

  // The zero subspace.
  static RealSubspace zero(int ambient_dim, double tol = kDefaultTol);
  // R^n inside C^n.
  static RealSubspace real_form(int n, double tol = kDefaultTol);
  // All of C^n as a real space (real dimension 2n).
  static RealSubspace full(int n, double tol = kDefaultTol);

  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(frame_.cols()); }  // real dimension
  const MatrixXcd& frame() const { return frame_; }
  double tol() const { return tol_; }

  // Re-orthogonal projector onto the subspace, as a 2n x 2n real matrix.
  MatrixXd real_projector() const;

  bool contains(const VectorXcd& v, double tol) const;
  bool contains(const RealSubspace& other, double tol) const;

  // i.V — multiplication by i preserves Re-orthonormality.
  RealSubspace multiply_by_i() const;
  // U.V for unitary (or just complex-linear invertible) U; re-orthonormalized.
  RealSubspace apply(const MatrixXcd& u) const;

 private:
  int n_;
  MatrixXcd frame_;
  double tol_;
};

// Antilinear operator z -> M conj(z). Compositions of two antilinear maps are
// linear with matrix M1 conj(M2); the antilinear adjoint has matrix M^T.
class AntilinearOp {
 public:
  explicit AntilinearOp(MatrixXcd m) : m_(std::move(m)) {}

  static AntilinearOp conjugation(int n) {
    return AntilinearOp(MatrixXcd::Identity(n, n));
  }

  const MatrixXcd& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

  VectorXcd apply(const VectorXcd& z) const { return m_ * z.conjugate(); }
  AntilinearOp adjoint() const { return AntilinearOp(m_.transpose()); }
  bool is_involution(double tol = kDefaultTol) const;
  // J L J for a linear map L (the result is linear): M conj(L) conj(M).
  MatrixXcd conjugate_linear(const MatrixXcd& l) const;
  // Composition with a linear map on the right: z -> M conj(L z).
  AntilinearOp after_linear(const MatrixXcd& l) const {
    return AntilinearOp(m_ * l.conjugate());
  }

 private:
  MatrixXcd m_;
};

// Re-orthonormalizes the real span of the given vectors; rank decided by
// singular values against tol * sigma_max, ties toward smaller rank.
RealSubspace real_orthonormalize(const std::vector<VectorXcd>& vectors,
                                 double tol = kDefaultTol);
RealSubspace real_orthonormalize(const MatrixXcd& columns, double tol = kDefaultTol);

RealSubspace real_intersect(const RealSubspace& v, const RealSubspace& w);
RealSubspace real_sum(const RealSubspace& v, const RealSubspace& w);

bool is_cyclic(const RealSubspace& v);
bool is_separating(const RealSubspace& v);
bool is_standard(const RealSubspace& v);

// Operator-norm distance of the Re-orthogonal projectors.
double subspace_distance(const RealSubspace& v, const RealSubspace& w);

// Re-orthogonal complement inside C^n.
RealSubspace real_orthogonal_complement(const RealSubspace& v);

}  // namespace modwedge::hilbert
