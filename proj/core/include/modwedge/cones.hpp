#pragma once

// Catalog of pointed generating closed convex cones used as causal data:
// Lorentz cones, the PSD cone, polyhedral cones, the invariant cone of sl2,
// cones of nonnegative quadratics, products, graded parts C_± = ±C ∩ g_±1.

#include <Eigen/Dense>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "modwedge/errors.hpp"

namespace modwedge::liealg {

using Eigen::MatrixXd;
using Eigen::VectorXd;

class ConeSpec {
 public:
  virtual ~ConeSpec() = default;

  virtual int dim() const = 0;
  virtual bool contains(const VectorXd& x, double tol = 1e-9) const = 0;
  virtual bool interior_contains(const VectorXd& x, double tol = 1e-9) const = 0;
  // A random point of the cone (for sampled convexity/invariance checks).
  virtual VectorXd sample(std::mt19937_64& rng) const = 0;
  virtual std::string kind() const = 0;

  double margin_tol = 1e-6;
};

using ConePtr = std::shared_ptr<const ConeSpec>;

// { x : x[time_axis] >= || other coordinates || }
class LorentzCone : public ConeSpec {
 public:
  LorentzCone(int dim, int time_axis = 0) : d_(dim), t_(time_axis) {}
  int dim() const override { return d_; }
  bool contains(const VectorXd& x, double tol) const override;
  bool interior_contains(const VectorXd& x, double tol) const override;
  VectorXd sample(std::mt19937_64& rng) const override;
  std::string kind() const override { return "lorentz"; }
  int time_axis() const { return t_; }

 private:
  int d_;
  int t_;
};

// Positive-semidefinite cone on Sym_n(R), coordinates row-major n x n.
class PsdCone : public ConeSpec {
 public:
  explicit PsdCone(int n) : n_(n) {}
  int dim() const override { return n_ * n_; }
  bool contains(const VectorXd& x, double tol) const override;
  bool interior_contains(const VectorXd& x, double tol) const override;
  VectorXd sample(std::mt19937_64& rng) const override;
  std::string kind() const override { return "psd"; }

 private:
  int n_;
};

// Conical hull of finitely many generators (columns). Membership by NNLS.
class PolyhedralCone : public ConeSpec {
 public:
  explicit PolyhedralCone(MatrixXd generators);
  int dim() const override { return static_cast<int>(gen_.rows()); }
  bool contains(const VectorXd& x, double tol) const override;
  bool interior_contains(const VectorXd& x, double tol) const override;
  VectorXd sample(std::mt19937_64& rng) const override;
  std::string kind() const override { return "polyhedral"; }
  const MatrixXd& generators() const { return gen_; }

 private:
  MatrixXd gen_;
  bool full_dimensional_;
};

// Invariant cone of sl2(R) in coordinates (a, b, c) for x = a.h + b.e + c.f,
// h = diag(1,-1)/2. The Killing quadratic is tr(x^2) = a^2/2 + 2bc, so
// C = { a^2 + 4bc <= 0, b - c >= 0 }, the image of the light cone under the
// sl2 <-> so(1,2) identification; sign = -1 gives -C. Contains (e - f)/2.
class Sl2InvariantCone : public ConeSpec {
 public:
  explicit Sl2InvariantCone(int sign = +1) : sign_(sign) {}
  int dim() const override { return 3; }
  bool contains(const VectorXd& x, double tol) const override;
  bool interior_contains(const VectorXd& x, double tol) const override;
  VectorXd sample(std::mt19937_64& rng) const override;
  std::string kind() const override { return "sl2_invariant"; }
  int sign() const { return sign_; }

 private:
  int sign_;
};

// Nonnegative polynomials of degree <= 2 on R^d:
// f(xi) = c + b.xi + xi^T Q xi / 2 >= 0 for all xi.
// Coordinates: (c, b_1..b_d, Q row-major d x d).
class NonnegQuadraticCone : public ConeSpec {
 public:
  explicit NonnegQuadraticCone(int d) : d_(d) {}
  int dim() const override { return 1 + d_ + d_ * d_; }
  bool contains(const VectorXd& x, double tol) const override;
  bool interior_contains(const VectorXd& x, double tol) const override;
  VectorXd sample(std::mt19937_64& rng) const override;
  std::string kind() const override { return "nonneg_quadratic"; }

 private:
  int d_;
};

class ProductCone : public ConeSpec {
 public:
  explicit ProductCone(std::vector<ConePtr> factors);
  int dim() const override { return total_; }
  bool contains(const VectorXd& x, double tol) const override;
  bool interior_contains(const VectorXd& x, double tol) const override;
  VectorXd sample(std::mt19937_64& rng) const override;
  std::string kind() const override { return "product"; }

 private:
  std::vector<ConePtr> factors_;
  int total_;
};

// Preimage T^{-1}(C): membership of x tested as T x in C. Used to express a
// cone in different linear coordinates (e.g. catalog algebra bases).
class PullbackCone : public ConeSpec {
 public:
  PullbackCone(ConePtr parent, MatrixXd transform)
      : parent_(std::move(parent)), t_(std::move(transform)) {
    tinv_ = t_.completeOrthogonalDecomposition().pseudoInverse();
  }
  int dim() const override { return static_cast<int>(t_.cols()); }
  bool contains(const VectorXd& x, double tol) const override {
    return parent_->contains(t_ * x, tol);
  }
  bool interior_contains(const VectorXd& x, double tol) const override {
    return parent_->interior_contains(t_ * x, tol);
  }
  VectorXd sample(std::mt19937_64& rng) const override {
    return tinv_ * parent_->sample(rng);
  }
  std::string kind() const override { return "pullback"; }

 private:
  ConePtr parent_;
  MatrixXd t_;
  MatrixXd tinv_;
};

// Image L(C) of a cone under a linear map with a right inverse supplied;
// membership of y tested as pinv(L) y in C plus L pinv(L) y = y.
class ImageCone : public ConeSpec {
 public:
  ImageCone(ConePtr parent, MatrixXd map);
  int dim() const override { return static_cast<int>(map_.rows()); }
  bool contains(const VectorXd& x, double tol) const override;
  bool interior_contains(const VectorXd& x, double tol) const override;
  VectorXd sample(std::mt19937_64& rng) const override;
  std::string kind() const override { return "image_under_linear_map"; }

 private:
  ConePtr parent_;
  MatrixXd map_;
  MatrixXd pinv_;
};

// C_s = s.C ∩ span(basis): x must lie in the subspace and s.x in the parent.
// Relative interior decided by probing along the subspace directions with the
// margin tolerance; exact for the ray and simplicial cases in the catalog.
class GradedPartCone : public ConeSpec {
 public:
  GradedPartCone(ConePtr parent, int sign, MatrixXd subspace_basis);
  int dim() const override { return static_cast<int>(basis_.rows()); }
  bool contains(const VectorXd& x, double tol) const override;
  bool interior_contains(const VectorXd& x, double tol) const override;  // relative
  VectorXd sample(std::mt19937_64& rng) const override;
  std::string kind() const override { return "graded_part"; }
  const MatrixXd& basis() const { return basis_; }

 private:
  ConePtr parent_;
  int sign_;
  MatrixXd basis_;  // columns orthonormal
};

// min || G lambda - x || over lambda >= 0 (Lawson-Hanson active set).
VectorXd nnls(const MatrixXd& g, const VectorXd& x, double tol = 1e-12);

}  // namespace modwedge::liealg
