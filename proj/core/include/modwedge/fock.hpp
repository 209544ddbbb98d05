#pragma once

// Truncated bosonic Fock space over C^d: occupation basis by total degree,
// Exp vectors, displacement (Weyl) operators by two independent routes, and
// Weyl-relation / Heisenberg-law residuals with explicit tail bounds.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "modwedge/errors.hpp"

namespace modwedge::fock {

using Complex = std::complex<double>;
using MatrixXcd = Eigen::MatrixXcd;
using VectorXcd = Eigen::VectorXcd;

class TruncatedFock {
 public:
  TruncatedFock(int modes, int max_degree);

  int modes() const { return d_; }
  int max_degree() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::vector<int>>& basis() const { return basis_; }
  int index_of(const std::vector<int>& alpha) const;  // -1 if |alpha| > N
  int degree(int index) const;

  // a_i and a_i^dagger, truncated at total degree N.
  MatrixXcd annihilation(int mode) const;
  MatrixXcd creation(int mode) const;

  // Projector onto degree <= k.
  MatrixXcd degree_projector(int k) const;

  // Exp(v): coefficient at alpha is prod v_i^{alpha_i} / sqrt(alpha!).
  VectorXcd exp_vector(const VectorXcd& v) const;
  double exp_vector_tail_bound(const VectorXcd& v) const;

  // Displacement U(x) = exp(a^dag(x) - a(x)) on the truncated space;
  // exactly unitary by Hermitian exponentiation.
  MatrixXcd weyl_matrix(const VectorXcd& x) const;

  // Formula route: U(x) Exp(v) = e^{-<x,v> - |x|^2/2} Exp(v+x), re-truncated.
  VectorXcd weyl_apply_exp(const VectorXcd& x, const VectorXcd& v) const;

 private:
  int d_, n_;
  std::vector<std::vector<int>> basis_;
  std::vector<int> degree_;
};

struct ExpInnerResult {
  Complex value;
  double tail_bound;  // |value - e^{<v,w>}| <= bound
};

struct WeylApplyResult {
  VectorXcd formula_path;  // displaced Exp vector, re-truncated
  VectorXcd matrix_path;   // truncated exponential applied to Exp(v)
  double tail_bound;
};

// Both routes for U(x) Exp(v); throws TruncationBudgetExceeded if the tail
// bound of the displaced vector exceeds budget_tol.
WeylApplyResult weyl_apply(const TruncatedFock& fock, const VectorXcd& x,
                           const VectorXcd& v, double budget_tol = 1e-6);

// sum_{k<=N} <v,w>^k / k!, inner product antilinear in the first slot.
ExpInnerResult exp_inner(const VectorXcd& v, const VectorXcd& w, int max_degree);

// Operator-norm residual of U(x)U(y) = e^{-i Im<x,y>} U(x+y), compressed to
// the degree <= N/2 subspace where truncation error is controlled.
double weyl_relation_residual(const TruncatedFock& fock, const VectorXcd& x,
                              const VectorXcd& y);

// Residual of the Heisenberg law (z,v)(z',v') = (zz' e^{-i Im<v,v'>}, v+v')
// through hat-U(z,v) = z U(v), on the same controlled subspace.
double heisenberg_law_check(const TruncatedFock& fock, Complex z1,
                            const VectorXcd& v1, Complex z2, const VectorXcd& v2);

}  // namespace modwedge::fock
