#include "modwedge/lie_algebra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <set>
#include <unsupported/Eigen/MatrixFunctions>

namespace modwedge::liealg {

namespace {

VectorXd flatten(const MatrixXd& m) {
  return Eigen::Map<const VectorXd>(m.data(), m.size());
}

}  // namespace

LieAlgebraSpec::LieAlgebraSpec(std::string name, std::vector<MatrixXd> basis,
                               double tol)
    : name_(std::move(name)), basis_(std::move(basis)), tol_(tol) {
  if (basis_.empty()) throw Error("empty basis");
  const int nn = static_cast<int>(basis_.front().size());
  const int d = dim();
  basis_flat_.resize(nn, d);
  for (int j = 0; j < d; ++j) basis_flat_.col(j) = flatten(basis_[j]);
  solver_.compute(basis_flat_);

  // Structure constants and closure defect.
  c_.assign(static_cast<size_t>(d) * d * d, 0.0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const MatrixXd br = basis_[i] * basis_[j] - basis_[j] * basis_[i];
      const VectorXd coords = solver_.solve(flatten(br));
      const double resid = (basis_flat_ * coords - flatten(br)).norm();
      closure_defect_ = std::max(closure_defect_, resid);
      for (int k = 0; k < d; ++k) c_[(static_cast<size_t>(i) * d + j) * d + k] = coords(k);
    }
  }
  if (closure_defect_ > 1e3 * tol_)
    throw Error("basis is not closed under brackets, defect " +
                std::to_string(closure_defect_));

  // Jacobi identity on basis triples (holds automatically for matrix
  // algebras; recorded as a defect for validation).
  for (int i = 0; i < d && i < 12; ++i)
    for (int j = i + 1; j < d && j < 12; ++j)
      for (int k = j + 1; k < d && k < 12; ++k) {
        const MatrixXd s = basis_[i] * (basis_[j] * basis_[k] - basis_[k] * basis_[j]) -
                           (basis_[j] * basis_[k] - basis_[k] * basis_[j]) * basis_[i] +
                           basis_[j] * (basis_[k] * basis_[i] - basis_[i] * basis_[k]) -
                           (basis_[k] * basis_[i] - basis_[i] * basis_[k]) * basis_[j] +
                           basis_[k] * (basis_[i] * basis_[j] - basis_[j] * basis_[i]) -
                           (basis_[i] * basis_[j] - basis_[j] * basis_[i]) * basis_[k];
        jacobi_defect_ = std::max(jacobi_defect_, s.cwiseAbs().maxCoeff());
      }
}

MatrixXd LieAlgebraSpec::to_matrix(const VectorXd& coords) const {
  MatrixXd m = MatrixXd::Zero(basis_.front().rows(), basis_.front().cols());
  for (int j = 0; j < dim(); ++j) m += coords(j) * basis_[j];
  return m;
}

VectorXd LieAlgebraSpec::to_coordinates(const MatrixXd& m) const {
  const VectorXd coords = solver_.solve(flatten(m));
  const double resid = (basis_flat_ * coords - flatten(m)).norm();
  if (resid > tol_ * std::max(1.0, m.norm())) throw NotInAlgebra(resid);
  return coords;
}

bool LieAlgebraSpec::in_algebra(const MatrixXd& m, double* residual) const {
  const VectorXd coords = solver_.solve(flatten(m));
  const double resid = (basis_flat_ * coords - flatten(m)).norm();
  if (residual) *residual = resid;
  return resid <= tol_ * std::max(1.0, m.norm());
}

VectorXd LieAlgebraSpec::bracket(const VectorXd& x, const VectorXd& y) const {
  const int d = dim();
  VectorXd out = VectorXd::Zero(d);
  for (int i = 0; i < d; ++i) {
    if (x(i) == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (y(j) == 0) continue;
      const double xy = x(i) * y(j);
      const size_t base = (static_cast<size_t>(i) * d + j) * d;
      for (int k = 0; k < d; ++k) out(k) += xy * c_[base + k];
    }
  }
  return out;
}

MatrixXd ad_matrix(const LieAlgebraSpec& g, const VectorXd& x) {
  const int d = g.dim();
  MatrixXd ad(d, d);
  for (int j = 0; j < d; ++j) ad.col(j) = g.bracket(x, VectorXd::Unit(d, j));
  return ad;
}

MatrixXd EulerDatum::graded_projection(int eigenvalue) const {
  switch (eigenvalue) {
    case -1: return p_minus;
    case 0: return p_zero;
    case 1: return p_plus;
    default: throw Error("graded projection index must be -1, 0 or 1");
  }
}

EulerCheckResult euler_check(const LieAlgebraSpec& g, const VectorXd& h, double tol) {
  EulerCheckResult out;
  const int d = g.dim();
  const MatrixXd ad = ad_matrix(g, h);
  const double norm = ad.cwiseAbs().maxCoeff();
  if (norm <= tol) {
    out.reason = "ad h = 0";
    return out;
  }
  Eigen::EigenSolver<MatrixXd> es(ad);
  std::set<int> present;
  for (int i = 0; i < d; ++i) {
    const std::complex<double> lam = es.eigenvalues()(i);
    if (std::abs(lam.imag()) > tol * std::max(1.0, norm)) {
      out.reason = "ad h has a non-real eigenvalue";
      return out;
    }
    const double re = lam.real();
    const int nearest = static_cast<int>(std::lround(re));
    if (nearest < -1 || nearest > 1 ||
        std::abs(re - nearest) > tol * std::max(1.0, norm)) {
      out.reason = "spectrum not contained in {-1,0,1}";
      return out;
    }
    present.insert(nearest);
  }
  // Diagonalizability over R: kernel dimensions must add up to d.
  int total = 0;
  std::vector<int> kdims;
  for (int lam : present) {
    const MatrixXd shifted = ad - lam * MatrixXd::Identity(d, d);
    Eigen::JacobiSVD<MatrixXd> svd(shifted);
    int kdim = 0;
    const double smax = std::max(svd.singularValues()(0), 1.0);
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) <= tol * smax) ++kdim;
    kdims.push_back(kdim);
    total += kdim;
  }
  if (total != d) {
    out.reason = "ad h is not diagonalizable (eigenspace dims sum to " +
                 std::to_string(total) + " of " + std::to_string(d) + ")";
    return out;
  }

  EulerDatum datum;
  datum.h = h;
  for (int lam : present) datum.spectrum.push_back(lam);
  // Spectral projections by Lagrange interpolation over the present spectrum.
  auto lagrange = [&](int lam) {
    MatrixXd p = MatrixXd::Identity(d, d);
    for (int mu : present) {
      if (mu == lam) continue;
      p = p * (ad - mu * MatrixXd::Identity(d, d)) / static_cast<double>(lam - mu);
    }
    return p;
  };
  datum.p_minus = present.count(-1) ? lagrange(-1) : MatrixXd::Zero(d, d);
  datum.p_zero = present.count(0) ? lagrange(0) : MatrixXd::Zero(d, d);
  datum.p_plus = present.count(1) ? lagrange(1) : MatrixXd::Zero(d, d);
  datum.tau_h = datum.p_zero - datum.p_plus - datum.p_minus;

  out.is_euler = true;
  out.datum = datum;
  return out;
}

MatrixXd tau_h_matrix(const EulerDatum& datum) { return datum.tau_h; }

double automorphism_defect(const LieAlgebraSpec& g, const MatrixXd& tau) {
  const int d = g.dim();
  double defect = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const VectorXd lhs = tau * g.bracket(VectorXd::Unit(d, i), VectorXd::Unit(d, j));
      const VectorXd rhs = g.bracket(VectorXd(tau.col(i)), VectorXd(tau.col(j)));
      defect = std::max(defect, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  return defect;
}

double grading_defect(const LieAlgebraSpec& g, const EulerDatum& datum) {
  const int d = g.dim();
  const MatrixXd projs[3] = {datum.p_minus, datum.p_zero, datum.p_plus};
  double defect = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const int target = (a - 1) + (b - 1);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          const VectorXd x = projs[a] * VectorXd::Unit(d, i);
          const VectorXd y = projs[b] * VectorXd::Unit(d, j);
          if (x.norm() < 1e-14 || y.norm() < 1e-14) continue;
          const VectorXd br = g.bracket(x, y);
          VectorXd out_of_grade = br;
          if (target >= -1 && target <= 1)
            out_of_grade = br - datum.graded_projection(target) * br;
          const double denom = std::max(1e-12, x.norm() * y.norm());
          defect = std::max(defect, out_of_grade.norm() / denom);
        }
    }
  return defect;
}

GradedCones cone_graded_parts(const ConePtr& cone, const LieAlgebraSpec& g,
                              const EulerDatum& datum, int samples,
                              std::mt19937_64& rng, double tol) {
  const MatrixXd ad = ad_matrix(g, datum.h);
  // Sampled preconditions: e^{t ad h} C = C and -tau_h C = C.
  const double tgrid[] = {-1.5, -0.5, 0.5, 1.5};
  for (int s = 0; s < samples; ++s) {
    const VectorXd x = cone->sample(rng);
    if (x.norm() < 1e-12) continue;
    for (const double t : tgrid) {
      const VectorXd moved = (t * ad).exp() * x;
      if (!cone->contains(moved, 1e3 * tol))
        throw ConeInvarianceViolated("e^{t ad h} sample, t = " + std::to_string(t));
    }
    if (!cone->contains(-(datum.tau_h * x), 1e3 * tol))
      throw ConeInvarianceViolated("-tau_h sample");
  }

  auto eigenbasis = [&](const MatrixXd& p) {
    Eigen::JacobiSVD<MatrixXd> svd(p, Eigen::ComputeThinU);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > 0.5) ++rank;
    return MatrixXd(svd.matrixU().leftCols(rank));
  };
  auto plus = std::make_shared<GradedPartCone>(cone, +1, eigenbasis(datum.p_plus));
  auto minus = std::make_shared<GradedPartCone>(cone, -1, eigenbasis(datum.p_minus));

  // Spot-check the projection identity p_{±1}(C) ⊆ ±C_±.
  for (int s = 0; s < samples; ++s) {
    const VectorXd x = cone->sample(rng);
    const VectorXd xp = datum.p_plus * x;
    const VectorXd xm = datum.p_minus * x;
    if (xp.norm() > 1e-9 && !plus->contains(xp, 1e3 * tol))
      throw ConeInvarianceViolated("p_{+1} projection sample");
    if (xm.norm() > 1e-9 && !minus->contains(-xm, 1e3 * tol))
      throw ConeInvarianceViolated("p_{-1} projection sample");
  }
  return GradedCones{plus, minus};
}

bool rep_positive_cone_contains(const std::vector<MatrixXcd>& generators,
                                const VectorXd& x, double tol) {
  if (generators.empty()) throw Error("no generators");
  const int n = static_cast<int>(generators.front().rows());
  for (size_t i = 0; i < generators.size(); ++i) {
    const double defect = (generators[i] + generators[i].adjoint()).cwiseAbs().maxCoeff();
    if (defect > tol * std::max(1.0, generators[i].cwiseAbs().maxCoeff()))
      throw NotSkewHermitian(static_cast<int>(i));
  }
  MatrixXcd a = MatrixXcd::Zero(n, n);
  for (size_t i = 0; i < generators.size(); ++i)
    a += std::complex<double>(0, -1) * x(static_cast<Eigen::Index>(i)) * generators[i];
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(a, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  return es.eigenvalues().minCoeff() >= -tol * scale;
}

}  // namespace modwedge::liealg
