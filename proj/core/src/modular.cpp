#include "modwedge/modular.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>

namespace modwedge::modular {

using hilbert::complexify;
using hilbert::realify;
using hilbert::realify_antilinear;

double ModularPair::modular_relation_residual() const {
  const MatrixXcd lhs = j.conjugate_linear(delta);
  const MatrixXcd rhs = delta.inverse();
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

void ModularPair::validate(double tol) const {
  const double herm = (delta - delta.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol)
    throw Error("delta is not Hermitian, defect " + std::to_string(herm));
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(delta, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 0)
    throw Error("delta has a non-positive eigenvalue");
  if (!j.is_involution(tol)) throw Error("J is not an involution");
  const double rel = modular_relation_residual();
  // Relative scale: delta^{-1} entries can be large when delta is stiff.
  const double scale = std::max(1.0, delta.inverse().cwiseAbs().maxCoeff());
  if (rel > tol * scale) throw ModularRelationViolated(rel);
}

AntilinearOp tomita_operator(const RealSubspace& v) {
  const int n = v.ambient_dim();
  if (v.dim() != n || !is_standard(v)) {
    const int cyclic_defect =
        2 * n - hilbert::real_sum(v, v.multiply_by_i()).dim();
    const int sep_defect = hilbert::real_intersect(v, v.multiply_by_i()).dim();
    throw NotStandard(cyclic_defect, sep_defect);
  }
  const MatrixXcd b = v.frame();
  Eigen::JacobiSVD<MatrixXcd> svd(b);
  const double cond =
      svd.singularValues()(0) / svd.singularValues()(svd.singularValues().size() - 1);
  if (cond > 1.0 / v.tol()) throw IllConditioned(cond);
  return AntilinearOp(b * b.conjugate().inverse());
}

MatrixXcd hermitian_power(const MatrixXcd& delta, double exponent, bool* clamped) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(delta);
  const double emax = es.eigenvalues().maxCoeff();
  Eigen::VectorXd ev = es.eigenvalues();
  // Clamp below before inversion so near-degenerate input stays deterministic.
  const double floor = hilbert::kDefaultTol * emax;
  if (clamped) *clamped = false;
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) < floor && clamped) *clamped = true;
    ev(i) = std::max(ev(i), floor);
  }
  Eigen::VectorXd powed(ev.size());
  for (int i = 0; i < ev.size(); ++i) powed(i) = std::pow(ev(i), exponent);
  return es.eigenvectors() * powed.asDiagonal() * es.eigenvectors().adjoint();
}

MatrixXcd modular_flow(const MatrixXcd& delta, Complex z, double beta, bool* clamped) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(delta);
  const double floor = hilbert::kDefaultTol * es.eigenvalues().maxCoeff();
  if (clamped) *clamped = false;
  VectorXcd phases(es.eigenvalues().size());
  for (int i = 0; i < phases.size(); ++i) {
    if (es.eigenvalues()(i) < floor && clamped) *clamped = true;
    const double loglam = std::log(std::max(es.eigenvalues()(i), floor));
    phases(i) = std::exp(Complex(0, -1) * z / beta * loglam);
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

ModularPair modular_pair(const RealSubspace& v) {
  const AntilinearOp t = tomita_operator(v);
  const MatrixXcd m = t.matrix();
  const MatrixXcd delta = m.transpose() * m.conjugate();  // T^dag T
  const MatrixXcd delta_inv_sqrt = hermitian_power(delta, -0.5);
  const AntilinearOp j(m * delta_inv_sqrt.conjugate());
  return ModularPair{delta, j};
}

RealSubspace standard_from_pair(const ModularPair& pair, double tol) {
  const double rel = pair.modular_relation_residual();
  const double scale = std::max(1.0, pair.delta.inverse().cwiseAbs().maxCoeff());
  if (rel > tol * scale) throw ModularRelationViolated(rel);
  const int n = pair.dim();
  const MatrixXcd s = pair.j.matrix() * hermitian_power(pair.delta, 0.5).conjugate();
  // Fix(S) = range of the real-linear projector (1 + S)/2.
  const Eigen::MatrixXd sr = realify_antilinear(s);
  const Eigen::MatrixXd p = 0.5 * (Eigen::MatrixXd::Identity(2 * n, 2 * n) + sr);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(p, Eigen::ComputeThinU);
  std::vector<VectorXcd> cols;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 0.5)
      cols.push_back(complexify(svd.matrixU().col(i)));
  if (cols.empty()) return RealSubspace::zero(n, tol);
  return hilbert::real_orthonormalize(cols, tol);
}

RealSubspace symplectic_complement(const RealSubspace& v) {
  // V' = i . (Re-orthogonal complement of V)
  return hilbert::real_orthogonal_complement(v).multiply_by_i();
}

RealSubspace graph_subspace(const Eigen::MatrixXd& a, double tol) {
  const int m = static_cast<int>(a.rows());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > tol)
    throw Error("graph_subspace expects a symmetric matrix");
  MatrixXcd cols(2 * m, 2 * m);
  // Real span of (v, A conj v) for v = e_j and v = i e_j.
  for (int j = 0; j < m; ++j) {
    VectorXcd c1 = VectorXcd::Zero(2 * m);
    c1(j) = 1.0;
    c1.tail(m) = a.col(j).cast<Complex>();
    cols.col(j) = c1;
    VectorXcd c2 = VectorXcd::Zero(2 * m);
    c2(j) = Complex(0, 1);
    c2.tail(m) = Complex(0, -1) * a.col(j).cast<Complex>();
    cols.col(m + j) = c2;
  }
  return hilbert::real_orthonormalize(cols, tol);
}

std::vector<Complex> default_kms_grid() {
  std::vector<Complex> grid;
  for (int i = 0; i < 21; ++i) grid.emplace_back(-3.0 + 6.0 * i / 20.0, 0.0);
  grid.emplace_back(0.0, EIGEN_PI / 2);
  grid.emplace_back(0.0, EIGEN_PI);
  return grid;
}

KmsOrbitReport kms_orbit_check(const ModularPair& pair, const VectorXcd& xi,
                               const std::vector<Complex>& grid, double tol) {
  KmsOrbitReport report;
  const double norm = xi.norm();
  const VectorXcd jxi = pair.j.apply(xi);
  const VectorXcd bv = hermitian_power(pair.delta, 0.5) * xi;
  report.residual = norm > 0 ? (bv - jxi).norm() / norm : 0.0;
  report.member = report.residual <= tol;
  const MatrixXcd mj = pair.j.matrix();
  for (const Complex& z : grid) {
    const VectorXcd az = modular_flow(pair.delta, z) * xi;
    const VectorXcd top =
        modular_flow(pair.delta, Complex(0, EIGEN_PI) + std::conj(z)) * xi;
    report.grid_residuals.push_back((top - mj * az.conjugate()).norm());
  }
  return report;
}

SpectralModelBuild spectral_model_build(const SpectralModel& model, double tol) {
  const int m = static_cast<int>(model.atoms.size());
  // Match every atom p with an atom at -p.
  std::vector<int> partner(m, -1);
  for (int i = 0; i < m; ++i) {
    if (partner[i] >= 0) continue;
    const double p = model.atoms[i].first;
    if (std::abs(p) <= tol) {
      partner[i] = i;
      continue;
    }
    int found = -1;
    for (int k = 0; k < m; ++k) {
      if (k == i || partner[k] >= 0) continue;
      if (std::abs(model.atoms[k].first + p) <= tol) {
        found = k;
        break;
      }
    }
    if (found < 0) throw AsymmetricAtoms(p);
    partner[i] = found;
    partner[found] = i;
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) a(i, i) = model.atoms[i].first;
  MatrixXcd delta = MatrixXcd::Zero(m, m);
  for (int i = 0; i < m; ++i) delta(i, i) = std::exp(-model.beta * a(i, i));
  MatrixXcd jm = MatrixXcd::Zero(m, m);
  for (int i = 0; i < m; ++i) jm(partner[i], i) = 1.0;  // f(p) -> conj(f(-p))
  ModularPair pair{delta, AntilinearOp(jm)};
  pair.validate(tol);
  // J A J = -A by construction; keep the check as a guard.
  const MatrixXcd jaj = pair.j.conjugate_linear(a.cast<Complex>());
  if ((jaj + a.cast<Complex>()).cwiseAbs().maxCoeff() > tol)
    throw Error("spectral model violates J A J = -A");
  return SpectralModelBuild{a, pair, standard_from_pair(pair, tol)};
}

Complex kms_psi(const KMSFunctionData& data, Complex z) {
  Complex s = 0;
  for (const auto& [lambda, mu] : data.atoms)
    s += mu * std::exp(Complex(0, 1) * z * lambda);
  return s;
}

KmsClassification kms_measure_classify(const KMSFunctionData& data, double tol) {
  KmsClassification out;
  for (const auto& [lambda, mu] : data.atoms) {
    (void)lambda;
    if (mu < 0) throw NegativeWeight();
  }
  // Aggregate weights per lambda (atoms may repeat), then test
  // mu(-lambda) = e^{-beta lambda} mu(lambda). The conditions at ±lambda are
  // the same equation up to the factor e^{beta lambda}, so one check per
  // |lambda| suffices and fixes the normalization of max_violation.
  std::map<double, double> weight;
  for (const auto& [lambda, mu] : data.atoms) weight[lambda] += mu;
  auto weight_at = [&](double lambda) {
    for (const auto& [l, mu] : weight)
      if (std::abs(l - lambda) <= tol) return mu;
    return 0.0;
  };
  double violation = 0.0;
  for (const auto& [lambda, mu] : weight) {
    (void)mu;
    if (lambda < 0) continue;
    violation = std::max(violation, std::abs(weight_at(-lambda) -
                                             std::exp(-data.beta * lambda) *
                                                 weight_at(lambda)));
  }
  // A negative atom with no positive partner is its own violation.
  for (const auto& [lambda, mu] : weight)
    if (lambda < -tol && weight_at(-lambda) == 0.0)
      violation = std::max(violation, mu);
  out.max_violation = violation;
  out.is_kms = violation <= 1e3 * tol;
  if (out.is_kms) {
    SpectralModel model;
    model.beta = data.beta;
    std::vector<double> emb;
    for (const auto& [lambda, mu] : weight) {
      if (mu <= tol) continue;  // zero-weight atoms carry nothing
      model.atoms.emplace_back(lambda, mu);
      emb.push_back(std::sqrt(mu));
    }
    out.realization = model;
    out.embedding =
        Eigen::Map<Eigen::VectorXd>(emb.data(), static_cast<Eigen::Index>(emb.size()));
  }
  return out;
}

}  // namespace modwedge::modular
