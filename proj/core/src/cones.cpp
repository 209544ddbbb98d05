#include "modwedge/cones.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <set>

namespace modwedge::liealg {

namespace {

double scale_of(const VectorXd& x) { return std::max(1.0, x.norm()); }

Eigen::MatrixXd sym_from_coords(const VectorXd& x, int n, int offset = 0) {
  Eigen::MatrixXd q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q(i, j) = x(offset + i * n + j);
  return 0.5 * (q + q.transpose());
}

}  // namespace

VectorXd nnls(const MatrixXd& g, const VectorXd& x, double tol) {
  // Lawson-Hanson active set on the normal equations.
  const int m = static_cast<int>(g.cols());
  VectorXd lambda = VectorXd::Zero(m);
  std::set<int> passive;
  VectorXd w = g.transpose() * (x - g * lambda);
  const double wtol = tol * std::max(1.0, x.norm()) * std::max(1.0, g.norm());
  int guard = 0;
  while (guard++ < 30 * m + 100) {
    int best = -1;
    double bestw = wtol;
    for (int j = 0; j < m; ++j)
      if (!passive.count(j) && w(j) > bestw) {
        bestw = w(j);
        best = j;
      }
    if (best < 0) break;
    passive.insert(best);
    while (true) {
      MatrixXd gp(g.rows(), passive.size());
      std::vector<int> idx(passive.begin(), passive.end());
      for (size_t k = 0; k < idx.size(); ++k) gp.col(k) = g.col(idx[k]);
      VectorXd z = gp.colPivHouseholderQr().solve(x);
      bool feasible = true;
      for (int i = 0; i < z.size(); ++i)
        if (z(i) <= 0) feasible = false;
      if (feasible) {
        lambda.setZero();
        for (size_t k = 0; k < idx.size(); ++k) lambda(idx[k]) = z(k);
        break;
      }
      // Step back to the feasibility boundary and drop a variable.
      double alpha = 1.0;
      for (size_t k = 0; k < idx.size(); ++k)
        if (z(k) <= 0) alpha = std::min(alpha, lambda(idx[k]) / (lambda(idx[k]) - z(k)));
      for (size_t k = 0; k < idx.size(); ++k)
        lambda(idx[k]) += alpha * (z(k) - lambda(idx[k]));
      for (size_t k = 0; k < idx.size(); ++k)
        if (lambda(idx[k]) <= tol) passive.erase(idx[k]);
      if (passive.empty()) break;
    }
    w = g.transpose() * (x - g * lambda);
  }
  return lambda;
}

bool LorentzCone::contains(const VectorXd& x, double tol) const {
  double rest = 0;
  for (int i = 0; i < d_; ++i)
    if (i != t_) rest += x(i) * x(i);
  return x(t_) >= std::sqrt(rest) - tol * scale_of(x);
}

bool LorentzCone::interior_contains(const VectorXd& x, double tol) const {
  double rest = 0;
  for (int i = 0; i < d_; ++i)
    if (i != t_) rest += x(i) * x(i);
  return x(t_) > std::sqrt(rest) + tol * scale_of(x);
}

VectorXd LorentzCone::sample(std::mt19937_64& rng) const {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  VectorXd s(d_);
  for (int i = 0; i < d_; ++i) s(i) = gauss(rng);
  s(t_) = 0;
  const double r = s.norm();
  VectorXd x = s;
  x(t_) = r <= 0 ? 1.0 : r / std::max(1e-6, unif(rng));
  return x;
}

bool PsdCone::contains(const VectorXd& x, double tol) const {
  const Eigen::MatrixXd q = sym_from_coords(x, n_);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol * scale_of(x);
}

bool PsdCone::interior_contains(const VectorXd& x, double tol) const {
  const Eigen::MatrixXd q = sym_from_coords(x, n_);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > tol * scale_of(x);
}

VectorXd PsdCone::sample(std::mt19937_64& rng) const {
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd b(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) b(i, j) = gauss(rng);
  const Eigen::MatrixXd q = b.transpose() * b;
  VectorXd x(n_ * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) x(i * n_ + j) = q(i, j);
  return x;
}

PolyhedralCone::PolyhedralCone(MatrixXd generators) : gen_(std::move(generators)) {
  Eigen::JacobiSVD<MatrixXd> svd(gen_);
  const double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-12 * smax) ++rank;
  full_dimensional_ = rank == gen_.rows();
}

bool PolyhedralCone::contains(const VectorXd& x, double tol) const {
  if (x.norm() <= tol) return true;
  const VectorXd lambda = nnls(gen_, x);
  return (gen_ * lambda - x).norm() <= tol * scale_of(x);
}

bool PolyhedralCone::interior_contains(const VectorXd& x, double tol) const {
  if (!full_dimensional_) return false;
  if (!contains(x, tol)) return false;
  const double eps = std::max(margin_tol * x.norm(), 10 * tol);
  for (int i = 0; i < dim(); ++i) {
    VectorXd probe = x;
    probe(i) += eps;
    if (!contains(probe, tol)) return false;
    probe(i) -= 2 * eps;
    if (!contains(probe, tol)) return false;
  }
  return true;
}

VectorXd PolyhedralCone::sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  VectorXd x = VectorXd::Zero(dim());
  for (int j = 0; j < gen_.cols(); ++j) x += unif(rng) * gen_.col(j);
  return x;
}

bool Sl2InvariantCone::contains(const VectorXd& x, double tol) const {
  const double a = sign_ * x(0), b = sign_ * x(1), c = sign_ * x(2);
  const double s = b - c;
  const double r = std::sqrt((b + c) * (b + c) + a * a);
  return s >= r - tol * scale_of(x);
}

bool Sl2InvariantCone::interior_contains(const VectorXd& x, double tol) const {
  const double a = sign_ * x(0), b = sign_ * x(1), c = sign_ * x(2);
  const double s = b - c;
  const double r = std::sqrt((b + c) * (b + c) + a * a);
  return s > r + tol * scale_of(x);
}

VectorXd Sl2InvariantCone::sample(std::mt19937_64& rng) const {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double u = gauss(rng), a = gauss(rng);
  const double s = std::sqrt(u * u + a * a) / std::max(1e-6, unif(rng));
  VectorXd x(3);
  x << sign_ * a, sign_ * 0.5 * (u + s), sign_ * 0.5 * (u - s);
  return x;
}

bool NonnegQuadraticCone::contains(const VectorXd& x, double tol) const {
  const double c = x(0);
  const VectorXd b = x.segment(1, d_);
  const Eigen::MatrixXd q = sym_from_coords(x, d_, 1 + d_);
  const double s = scale_of(x);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q);
  if (es.eigenvalues().minCoeff() < -tol * s) return false;
  // Unbounded below unless b lies in the range of Q.
  VectorXd y = VectorXd::Zero(d_);
  VectorXd resid = b;
  for (int i = 0; i < d_; ++i) {
    const double ev = es.eigenvalues()(i);
    const double comp = es.eigenvectors().col(i).dot(b);
    if (ev > tol * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff())) {
      y += comp / ev * es.eigenvectors().col(i);
      resid -= comp * es.eigenvectors().col(i);
    }
  }
  if (resid.norm() > tol * s) return false;
  // min f = c - b.Q^+ b / 2 attained at xi = -Q^+ b.
  return c - 0.5 * b.dot(y) >= -tol * s;
}

bool NonnegQuadraticCone::interior_contains(const VectorXd& x, double tol) const {
  const double c = x(0);
  const VectorXd b = x.segment(1, d_);
  const Eigen::MatrixXd q = sym_from_coords(x, d_, 1 + d_);
  const double s = scale_of(x);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q);
  if (es.eigenvalues().minCoeff() <= tol * s) return false;
  const VectorXd y = es.eigenvectors() *
                     (es.eigenvectors().transpose() * b).cwiseQuotient(es.eigenvalues());
  return c - 0.5 * b.dot(y) > tol * s;
}

VectorXd NonnegQuadraticCone::sample(std::mt19937_64& rng) const {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Eigen::MatrixXd bmat(d_, d_);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) bmat(i, j) = gauss(rng);
  const Eigen::MatrixXd q = bmat.transpose() * bmat;
  VectorXd y(d_);
  for (int i = 0; i < d_; ++i) y(i) = gauss(rng);
  const double m = unif(rng);
  VectorXd x(dim());
  x(0) = 0.5 * y.dot(q * y) + m;
  x.segment(1, d_) = q * y;
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) x(1 + d_ + i * d_ + j) = q(i, j);
  return x;
}

ProductCone::ProductCone(std::vector<ConePtr> factors)
    : factors_(std::move(factors)), total_(0) {
  for (const auto& f : factors_) total_ += f->dim();
}

bool ProductCone::contains(const VectorXd& x, double tol) const {
  int off = 0;
  for (const auto& f : factors_) {
    if (!f->contains(x.segment(off, f->dim()), tol)) return false;
    off += f->dim();
  }
  return true;
}

bool ProductCone::interior_contains(const VectorXd& x, double tol) const {
  int off = 0;
  for (const auto& f : factors_) {
    if (!f->interior_contains(x.segment(off, f->dim()), tol)) return false;
    off += f->dim();
  }
  return true;
}

VectorXd ProductCone::sample(std::mt19937_64& rng) const {
  VectorXd x(total_);
  int off = 0;
  for (const auto& f : factors_) {
    x.segment(off, f->dim()) = f->sample(rng);
    off += f->dim();
  }
  return x;
}

ImageCone::ImageCone(ConePtr parent, MatrixXd map)
    : parent_(std::move(parent)), map_(std::move(map)) {
  pinv_ = map_.completeOrthogonalDecomposition().pseudoInverse();
}

bool ImageCone::contains(const VectorXd& x, double tol) const {
  const VectorXd pre = pinv_ * x;
  if ((map_ * pre - x).norm() > tol * scale_of(x)) return false;
  return parent_->contains(pre, tol);
}

bool ImageCone::interior_contains(const VectorXd& x, double tol) const {
  if (!contains(x, tol)) return false;
  const double eps = std::max(margin_tol * x.norm(), 10 * tol);
  for (int i = 0; i < dim(); ++i) {
    VectorXd probe = x;
    probe(i) += eps;
    if (!contains(probe, tol)) return false;
    probe(i) -= 2 * eps;
    if (!contains(probe, tol)) return false;
  }
  return true;
}

VectorXd ImageCone::sample(std::mt19937_64& rng) const {
  return map_ * parent_->sample(rng);
}

GradedPartCone::GradedPartCone(ConePtr parent, int sign, MatrixXd subspace_basis)
    : parent_(std::move(parent)), sign_(sign), basis_(std::move(subspace_basis)) {
  // Orthonormalize the supplied basis.
  Eigen::HouseholderQR<MatrixXd> qr(basis_);
  basis_ = qr.householderQ() * MatrixXd::Identity(basis_.rows(), basis_.cols());
}

bool GradedPartCone::contains(const VectorXd& x, double tol) const {
  const VectorXd in_plane = basis_ * (basis_.transpose() * x);
  if ((x - in_plane).norm() > tol * scale_of(x)) return false;
  return parent_->contains(sign_ * x, tol);
}

bool GradedPartCone::interior_contains(const VectorXd& x, double tol) const {
  if (!contains(x, tol)) return false;
  const double eps = std::max(margin_tol * x.norm(), 10 * tol);
  for (int j = 0; j < basis_.cols(); ++j) {
    if (!parent_->contains(sign_ * (x + eps * basis_.col(j)), tol)) return false;
    if (!parent_->contains(sign_ * (x - eps * basis_.col(j)), tol)) return false;
  }
  return true;
}

VectorXd GradedPartCone::sample(std::mt19937_64& rng) const {
  // Project parent samples into the slice; keep only points that stay inside.
  for (int attempt = 0; attempt < 64; ++attempt) {
    const VectorXd p = sign_ * parent_->sample(rng);
    const VectorXd proj = basis_ * (basis_.transpose() * p);
    if (contains(proj, 1e-9)) return proj;
  }
  return VectorXd::Zero(dim());
}

}  // namespace modwedge::liealg
