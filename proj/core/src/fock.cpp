#include "modwedge/fock.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>

namespace modwedge::fock {

namespace {

void enumerate(int modes, int budget, std::vector<int>& current,
               std::vector<std::vector<int>>& out) {
  if (current.size() == static_cast<size_t>(modes)) {
    out.push_back(current);
    return;
  }
  for (int k = 0; k <= budget; ++k) {
    current.push_back(k);
    enumerate(modes, budget - k, current, out);
    current.pop_back();
  }
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

}  // namespace

TruncatedFock::TruncatedFock(int modes, int max_degree) : d_(modes), n_(max_degree) {
  std::vector<int> current;
  enumerate(d_, n_, current, basis_);
  // Order by degree, then lexicographic, so degree projectors are blocks.
  std::sort(basis_.begin(), basis_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int da = 0, db = 0;
              for (int x : a) da += x;
              for (int x : b) db += x;
              if (da != db) return da < db;
              return a < b;
            });
  degree_.resize(basis_.size());
  for (size_t i = 0; i < basis_.size(); ++i) {
    int deg = 0;
    for (int x : basis_[i]) deg += x;
    degree_[i] = deg;
  }
}

int TruncatedFock::index_of(const std::vector<int>& alpha) const {
  const auto it = std::find(basis_.begin(), basis_.end(), alpha);
  return it == basis_.end() ? -1 : static_cast<int>(it - basis_.begin());
}

int TruncatedFock::degree(int index) const { return degree_[index]; }

MatrixXcd TruncatedFock::annihilation(int mode) const {
  MatrixXcd a = MatrixXcd::Zero(dim(), dim());
  for (int col = 0; col < dim(); ++col) {
    if (basis_[col][mode] == 0) continue;
    std::vector<int> target = basis_[col];
    target[mode] -= 1;
    const int row = index_of(target);
    a(row, col) = std::sqrt(static_cast<double>(basis_[col][mode]));
  }
  return a;
}

MatrixXcd TruncatedFock::creation(int mode) const {
  return annihilation(mode).adjoint();
}

MatrixXcd TruncatedFock::degree_projector(int k) const {
  MatrixXcd p = MatrixXcd::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    if (degree_[i] <= k) p(i, i) = 1.0;
  return p;
}

VectorXcd TruncatedFock::exp_vector(const VectorXcd& v) const {
  VectorXcd out(dim());
  for (int i = 0; i < dim(); ++i) {
    Complex coeff = 1.0;
    double lognorm = 0.0;
    for (int m = 0; m < d_; ++m) {
      for (int k = 0; k < basis_[i][m]; ++k) coeff *= v(m);
      lognorm += log_factorial(basis_[i][m]);
    }
    out(i) = coeff * std::exp(-0.5 * lognorm);
  }
  return out;
}

double TruncatedFock::exp_vector_tail_bound(const VectorXcd& v) const {
  // ||tail||^2 = sum_{k>N} ||v||^{2k}/k! <= ||v||^{2(N+1)}/(N+1)! e^{||v||^2}
  const double s = v.squaredNorm();
  return std::sqrt(std::exp(static_cast<double>(n_ + 1) * std::log(std::max(s, 1e-300)) -
                            log_factorial(n_ + 1) + s));
}

MatrixXcd TruncatedFock::weyl_matrix(const VectorXcd& x) const {
  MatrixXcd k = MatrixXcd::Zero(dim(), dim());
  for (int m = 0; m < d_; ++m) {
    const MatrixXcd a = annihilation(m);
    k += x(m) * a.adjoint() - std::conj(x(m)) * a;
  }
  // K is anti-Hermitian; exponentiate through the Hermitian -iK.
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(Complex(0, -1) * k);
  VectorXcd phases(dim());
  for (int i = 0; i < dim(); ++i)
    phases(i) = std::exp(Complex(0, es.eigenvalues()(i)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

VectorXcd TruncatedFock::weyl_apply_exp(const VectorXcd& x, const VectorXcd& v) const {
  const Complex phase = std::exp(-x.dot(v) - 0.5 * x.squaredNorm());
  return phase * exp_vector(v + x);
}

ExpInnerResult exp_inner(const VectorXcd& v, const VectorXcd& w, int max_degree) {
  const Complex s = v.dot(w);
  Complex sum = 1.0;
  Complex term = 1.0;
  for (int k = 1; k <= max_degree; ++k) {
    term *= s / static_cast<double>(k);
    sum += term;
  }
  const double nv = v.norm(), nw = w.norm();
  const double bound =
      std::exp(static_cast<double>(max_degree + 1) *
                   std::log(std::max(nv * nw, 1e-300)) -
               log_factorial(max_degree + 1) + nv * nw);
  return ExpInnerResult{sum, bound};
}

WeylApplyResult weyl_apply(const TruncatedFock& fock, const VectorXcd& x,
                           const VectorXcd& v, double budget_tol) {
  const double phase_mag = std::exp(-x.dot(v).real() - 0.5 * x.squaredNorm());
  const double bound =
      phase_mag * fock.exp_vector_tail_bound(v + x) + fock.exp_vector_tail_bound(v);
  if (bound > budget_tol) throw TruncationBudgetExceeded(bound);
  WeylApplyResult out;
  out.formula_path = fock.weyl_apply_exp(x, v);
  out.matrix_path = fock.weyl_matrix(x) * fock.exp_vector(v);
  out.tail_bound = bound;
  return out;
}

double weyl_relation_residual(const TruncatedFock& fock, const VectorXcd& x,
                              const VectorXcd& y) {
  const MatrixXcd ux = fock.weyl_matrix(x);
  const MatrixXcd uy = fock.weyl_matrix(y);
  const MatrixXcd uxy = fock.weyl_matrix(x + y);
  const Complex phase = std::exp(Complex(0, -(x.dot(y)).imag()));
  const MatrixXcd p = fock.degree_projector(fock.max_degree() / 2);
  const MatrixXcd r = p * (ux * uy - phase * uxy) * p;
  return r.operatorNorm();
}

double heisenberg_law_check(const TruncatedFock& fock, Complex z1,
                            const VectorXcd& v1, Complex z2, const VectorXcd& v2) {
  const MatrixXcd u1 = z1 * fock.weyl_matrix(v1);
  const MatrixXcd u2 = z2 * fock.weyl_matrix(v2);
  const Complex zprod = z1 * z2 * std::exp(Complex(0, -(v1.dot(v2)).imag()));
  const MatrixXcd uprod = zprod * fock.weyl_matrix(v1 + v2);
  const MatrixXcd p = fock.degree_projector(fock.max_degree() / 2);
  const MatrixXcd r = p * (u1 * u2 - uprod) * p;
  return r.operatorNorm();
}

}  // namespace modwedge::fock
