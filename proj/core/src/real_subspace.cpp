#include "modwedge/real_subspace.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>

namespace modwedge::hilbert {

double re_inner(const VectorXcd& x, const VectorXcd& y) {
  return x.dot(y).real();  // Eigen's dot conjugates the first argument
}

VectorXd realify(const VectorXcd& v) {
  const auto n = v.size();
  VectorXd r(2 * n);
  r.head(n) = v.real();
  r.tail(n) = v.imag();
  return r;
}

MatrixXd realify_columns(const MatrixXcd& m) {
  const auto n = m.rows();
  MatrixXd r(2 * n, m.cols());
  r.topRows(n) = m.real();
  r.bottomRows(n) = m.imag();
  return r;
}

VectorXcd complexify(const VectorXd& v) {
  const auto n = v.size() / 2;
  VectorXcd z(n);
  z.real() = v.head(n);
  z.imag() = v.tail(n);
  return z;
}

MatrixXd realify_linear(const MatrixXcd& m) {
  const auto n = m.rows();
  MatrixXd r(2 * n, 2 * n);
  r.topLeftCorner(n, n) = m.real();
  r.topRightCorner(n, n) = -m.imag();
  r.bottomLeftCorner(n, n) = m.imag();
  r.bottomRightCorner(n, n) = m.real();
  return r;
}

MatrixXd realify_antilinear(const MatrixXcd& m) {
  // z -> M conj(z): (x + iy) -> M(x - iy) = (Re M x + Im M y) + i(Im M x - Re M y)
  const auto n = m.rows();
  MatrixXd r(2 * n, 2 * n);
  r.topLeftCorner(n, n) = m.real();
  r.topRightCorner(n, n) = m.imag();
  r.bottomLeftCorner(n, n) = m.imag();
  r.bottomRightCorner(n, n) = -m.real();
  return r;
}

RealSubspace::RealSubspace(int ambient_dim, MatrixXcd frame, double tol)
    : n_(ambient_dim), frame_(std::move(frame)), tol_(tol) {
  if (frame_.size() > 0 && frame_.rows() != n_)
    throw DimensionMismatch(static_cast<int>(frame_.rows()), n_);
  if (frame_.cols() > 0) {
    const MatrixXd gram = realify_columns(frame_).transpose() * realify_columns(frame_);
    const double defect =
        (gram - MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
    if (defect > 100 * tol_)
      throw Error("frame is not Re-orthonormal, Gram defect " + std::to_string(defect));
  }
}

RealSubspace RealSubspace::zero(int ambient_dim, double tol) {
  return RealSubspace(ambient_dim, MatrixXcd(ambient_dim, 0), tol);
}

RealSubspace RealSubspace::real_form(int n, double tol) {
  return RealSubspace(n, MatrixXcd::Identity(n, n), tol);
}

RealSubspace RealSubspace::full(int n, double tol) {
  MatrixXcd f(n, 2 * n);
  f.leftCols(n) = MatrixXcd::Identity(n, n);
  f.rightCols(n) = Complex(0, 1) * MatrixXcd::Identity(n, n);
  return RealSubspace(n, f, tol);
}

MatrixXd RealSubspace::real_projector() const {
  const MatrixXd f = realify_columns(frame_);
  return f * f.transpose();
}

bool RealSubspace::contains(const VectorXcd& v, double tol) const {
  if (v.size() != n_) throw DimensionMismatch(static_cast<int>(v.size()), n_);
  const VectorXd r = realify(v);
  const MatrixXd f = realify_columns(frame_);
  const VectorXd res = r - f * (f.transpose() * r);
  return res.norm() <= tol * std::max(1.0, r.norm());
}

bool RealSubspace::contains(const RealSubspace& other, double tol) const {
  for (int j = 0; j < other.dim(); ++j)
    if (!contains(other.frame().col(j), tol)) return false;
  return true;
}

RealSubspace RealSubspace::multiply_by_i() const {
  return RealSubspace(n_, Complex(0, 1) * frame_, tol_);
}

RealSubspace RealSubspace::apply(const MatrixXcd& u) const {
  if (u.cols() != n_) throw DimensionMismatch(static_cast<int>(u.cols()), n_);
  return real_orthonormalize(MatrixXcd(u * frame_), tol_);
}

bool AntilinearOp::is_involution(double tol) const {
  const MatrixXcd sq = m_ * m_.conjugate();
  return (sq - MatrixXcd::Identity(sq.rows(), sq.cols())).cwiseAbs().maxCoeff() <= tol;
}

MatrixXcd AntilinearOp::conjugate_linear(const MatrixXcd& l) const {
  return m_ * l.conjugate() * m_.conjugate();
}

RealSubspace real_orthonormalize(const MatrixXcd& columns, double tol) {
  if (columns.cols() == 0)
    return RealSubspace::zero(static_cast<int>(columns.rows()), tol);
  const int n = static_cast<int>(columns.rows());
  const MatrixXd r = realify_columns(columns);
  if (r.cwiseAbs().maxCoeff() <= tol) throw ZeroInput();
  Eigen::JacobiSVD<MatrixXd> svd(r, Eigen::ComputeThinU);
  const double smax = svd.singularValues()(0);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol * smax) ++rank;
  MatrixXcd frame(n, rank);
  for (int j = 0; j < rank; ++j) frame.col(j) = complexify(svd.matrixU().col(j));
  return RealSubspace(n, frame, tol);
}

RealSubspace real_orthonormalize(const std::vector<VectorXcd>& vectors, double tol) {
  if (vectors.empty()) throw ZeroInput();
  const int n = static_cast<int>(vectors.front().size());
  MatrixXcd cols(n, static_cast<Eigen::Index>(vectors.size()));
  for (size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != n)
      throw DimensionMismatch(static_cast<int>(vectors[j].size()), n);
    cols.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  return real_orthonormalize(cols, tol);
}

RealSubspace real_intersect(const RealSubspace& v, const RealSubspace& w) {
  if (v.ambient_dim() != w.ambient_dim())
    throw DimensionMismatch(v.ambient_dim(), w.ambient_dim());
  const int n = v.ambient_dim();
  const double tol = std::max(v.tol(), w.tol());
  if (v.dim() == 0 || w.dim() == 0) return RealSubspace::zero(n, tol);
  // Intersection = eigenvalue-2 eigenspace of P_V + P_W (symmetric).
  const MatrixXd s = v.real_projector() + w.real_projector();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(s);
  std::vector<VectorXcd> kept;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > 2.0 - 1e3 * tol)
      kept.push_back(complexify(es.eigenvectors().col(i)));
  if (kept.empty()) return RealSubspace::zero(n, tol);
  return real_orthonormalize(kept, tol);
}

RealSubspace real_sum(const RealSubspace& v, const RealSubspace& w) {
  if (v.ambient_dim() != w.ambient_dim())
    throw DimensionMismatch(v.ambient_dim(), w.ambient_dim());
  const double tol = std::max(v.tol(), w.tol());
  if (v.dim() == 0) return w;
  if (w.dim() == 0) return v;
  MatrixXcd cols(v.ambient_dim(), v.dim() + w.dim());
  cols.leftCols(v.dim()) = v.frame();
  cols.rightCols(w.dim()) = w.frame();
  return real_orthonormalize(cols, tol);
}

bool is_cyclic(const RealSubspace& v) {
  if (v.dim() == 0) return v.ambient_dim() == 0;
  return real_sum(v, v.multiply_by_i()).dim() == 2 * v.ambient_dim();
}

bool is_separating(const RealSubspace& v) {
  if (v.dim() == 0) return true;
  return real_intersect(v, v.multiply_by_i()).dim() == 0;
}

bool is_standard(const RealSubspace& v) { return is_cyclic(v) && is_separating(v); }

double subspace_distance(const RealSubspace& v, const RealSubspace& w) {
  if (v.ambient_dim() != w.ambient_dim())
    throw DimensionMismatch(v.ambient_dim(), w.ambient_dim());
  const MatrixXd d = v.real_projector() - w.real_projector();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(d);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

RealSubspace real_orthogonal_complement(const RealSubspace& v) {
  const int n = v.ambient_dim();
  const MatrixXd p =
      MatrixXd::Identity(2 * n, 2 * n) - v.real_projector();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(p);
  std::vector<VectorXcd> kept;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > 0.5) kept.push_back(complexify(es.eigenvectors().col(i)));
  if (kept.empty()) return RealSubspace::zero(n, v.tol());
  return real_orthonormalize(kept, v.tol());
}

}  // namespace modwedge::hilbert
