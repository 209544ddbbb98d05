#pragma once

// Modular calculus of standard subspaces: Tomita operator, (delta, J) pairs,
// symplectic complements, graph subspaces, KMS checks, finite spectral models.
//
// Sign convention, fixed once and inherited by nets::bgl_pair:
//   delta = e^{-beta A},  delta^{-it/beta} = e^{itA},  beta = 2*pi by default.

#include <complex>
#include <optional>
#include <vector>

#include "modwedge/real_subspace.hpp"

namespace modwedge::modular {

using hilbert::AntilinearOp;
using hilbert::Complex;
using hilbert::MatrixXcd;
using hilbert::RealSubspace;
using hilbert::VectorXcd;

struct ModularPair {
  MatrixXcd delta;  // Hermitian, strictly positive
  AntilinearOp j;   // conjugation (antilinear involution)

  int dim() const { return static_cast<int>(delta.rows()); }
  // ||J delta J - delta^{-1}||_max
  double modular_relation_residual() const;
  void validate(double tol = hilbert::kDefaultTol) const;
};

// Tomita involution of a standard subspace, as the antilinear map with matrix
// B inv(conj(B)) for the n x n frame matrix B.
AntilinearOp tomita_operator(const RealSubspace& v);

ModularPair modular_pair(const RealSubspace& v);

RealSubspace standard_from_pair(const ModularPair& pair,
                                double tol = hilbert::kDefaultTol);

RealSubspace symplectic_complement(const RealSubspace& v);

// Hermitian functional calculus helpers for positive-definite delta.
// Eigenvalues are clamped below at tol * max before inversion; `clamped`
// reports when that happened.
MatrixXcd hermitian_power(const MatrixXcd& delta, double exponent,
                          bool* clamped = nullptr);
// delta^{-iz/beta} for complex z, entire in finite dimension.
MatrixXcd modular_flow(const MatrixXcd& delta, Complex z, double beta = 2 * EIGEN_PI,
                       bool* clamped = nullptr);

// The real subspace {(v, A conj(v)) : v in C^m} of C^{2m}, for real symmetric
// positive-definite A. This realizes the graph of A with the flipped complex
// structure I(v,w) = (iv,-iw) inside the standard C^{2m}.
RealSubspace graph_subspace(const Eigen::MatrixXd& a,
                            double tol = hilbert::kDefaultTol);

struct KmsOrbitReport {
  bool member = false;
  double residual = 0.0;                // ||delta^{1/2} xi - J xi|| / ||xi||
  std::vector<double> grid_residuals;   // ||alpha(pi*i + conj z) - J alpha(z)||
};

// Membership test xi in Fix(J delta^{1/2}) via the KMS boundary value
// alpha^xi(pi i) = J xi, with per-grid-point equivariance diagnostics.
KmsOrbitReport kms_orbit_check(const ModularPair& pair, const VectorXcd& xi,
                               const std::vector<Complex>& grid,
                               double tol = hilbert::kSubspaceTol);
std::vector<Complex> default_kms_grid();  // 21 points on [-3,3], pi*i/2, pi*i

struct SpectralModel {
  std::vector<std::pair<double, double>> atoms;  // (p, w), w > 0
  double beta = 2 * EIGEN_PI;
};

struct SpectralModelBuild {
  Eigen::MatrixXd generator;  // A = diag(p)
  ModularPair pair;           // delta = e^{-beta A}, J f(p) = conj(f(-p))
  RealSubspace v;             // Fix(J delta^{1/2})
};

SpectralModelBuild spectral_model_build(const SpectralModel& model,
                                        double tol = hilbert::kDefaultTol);

struct KMSFunctionData {
  std::vector<std::pair<double, double>> atoms;  // (lambda, mu), mu >= 0
  double beta = 2 * EIGEN_PI;
};

struct KmsClassification {
  bool is_kms = false;
  double max_violation = 0.0;
  // Present when is_kms: spectral realization and the embedding j(1).
  std::optional<SpectralModel> realization;
  std::optional<Eigen::VectorXd> embedding;  // components sqrt(mu_j)
};

// psi(z) = sum_j mu_j e^{i z lambda_j}; the KMS condition for beta is
// mu(-lambda) = e^{-beta lambda} mu(lambda) for every atom.
Complex kms_psi(const KMSFunctionData& data, Complex z);
KmsClassification kms_measure_classify(const KMSFunctionData& data,
                                       double tol = hilbert::kDefaultTol);

}  // namespace modwedge::modular
