#include "modwedge/nets.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace modwedge::nets {

namespace {

const RepElement& find_element(const RepSample& rep, const std::string& label) {
  for (const auto& e : rep.elements)
    if (e.label == label) return e;
  throw Error("unknown element label '" + label + "' in scenario");
}

}  // namespace

void RepSample::validate(double tol) const {
  if ((generator - generator.adjoint()).cwiseAbs().maxCoeff() >
      tol * std::max(1.0, generator.cwiseAbs().maxCoeff()))
    throw Error("generator is not Hermitian");
  if (!j.is_involution(1e3 * tol)) throw Error("J is not an involution");
  const MatrixXcd jaj = j.conjugate_linear(generator);
  const double eq = (jaj + generator).cwiseAbs().maxCoeff();
  if (eq > 1e3 * tol * std::max(1.0, generator.cwiseAbs().maxCoeff()))
    throw EquivarianceViolated(eq);
  for (const auto& e : elements) {
    const double defect =
        (e.unitary.adjoint() * e.unitary - MatrixXcd::Identity(n, n))
            .cwiseAbs()
            .maxCoeff();
    if (defect > 1e3 * tol) throw NotUnitary(defect);
  }
}

BglResult bgl_pair(const MatrixXcd& a, const AntilinearOp& j, double tol) {
  const MatrixXcd jaj = j.conjugate_linear(a);
  const double eq = (jaj + a).cwiseAbs().maxCoeff();
  if (eq > 1e3 * tol * std::max(1.0, a.cwiseAbs().maxCoeff()))
    throw EquivarianceViolated(eq);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(a);
  Eigen::VectorXd lam(es.eigenvalues().size());
  for (int i = 0; i < lam.size(); ++i)
    lam(i) = std::exp(-2.0 * EIGEN_PI * es.eigenvalues()(i));
  const MatrixXcd delta =
      es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
  ModularPair pair{delta, j};
  return BglResult{pair, modular::standard_from_pair(pair, hilbert::kSubspaceTol)};
}

bool sv_contains(const MatrixXcd& u, const RealSubspace& v, double tol) {
  const int n = v.ambient_dim();
  const double unit_defect =
      (u.adjoint() * u - MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (unit_defect > 1e-6) throw NotUnitary(unit_defect);
  for (int jcol = 0; jcol < v.dim(); ++jcol)
    if (!v.contains(hilbert::VectorXcd(u * v.frame().col(jcol)), tol)) return false;
  return true;
}

double sv_defect(const MatrixXcd& u, const RealSubspace& v) {
  const Eigen::MatrixXd p = v.real_projector();
  double worst = 0;
  for (int jcol = 0; jcol < v.dim(); ++jcol) {
    const Eigen::VectorXd img = hilbert::realify(u * v.frame().col(jcol));
    worst = std::max(worst, (img - p * img).norm());
  }
  return worst;
}

StandardPairReport standard_pair_check(const MatrixXcd& p, const ModularPair& pair,
                                       const std::vector<double>& t_grid,
                                       bool has_affine_relation, double tol) {
  StandardPairReport report;
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(p);
  const double min_ev = es.eigenvalues().minCoeff();
  report.checks.push_back({"generator_positive", min_ev >= -tol, min_ev});

  const RealSubspace v = modular::standard_from_pair(pair, hilbert::kSubspaceTol);
  auto exp_itp = [&](double t) {
    hilbert::VectorXcd phases(es.eigenvalues().size());
    for (int i = 0; i < phases.size(); ++i)
      phases(i) = std::exp(std::complex<double>(0, t * es.eigenvalues()(i)));
    return MatrixXcd(es.eigenvectors() * phases.asDiagonal() *
                     es.eigenvectors().adjoint());
  };
  double worst = 0;
  bool ok = true;
  for (double t : t_grid) {
    if (t < 0) continue;
    const MatrixXcd u = exp_itp(t);
    const double defect = sv_defect(u, v);
    worst = std::max(worst, defect);
    ok = ok && sv_contains(u, v, tol);
  }
  report.checks.push_back({"semigroup_translations", ok, worst});

  if (has_affine_relation) {
    double worst_comm = 0;
    for (double s : {-1.0, 0.5, 1.0})
      for (double t : t_grid) {
        const MatrixXcd lhs = modular::modular_flow(pair.delta, s) * exp_itp(t) *
                              modular::modular_flow(pair.delta, -s);
        const MatrixXcd rhs = exp_itp(std::exp(s) * t);
        worst_comm = std::max(worst_comm, (lhs - rhs).cwiseAbs().maxCoeff());
      }
    report.checks.push_back({"dilation_covariance", worst_comm <= 1e3 * tol, worst_comm});
  }
  return report;
}

NetAssignment net_max(const std::vector<Region>& regions, const RepSample& rep,
                      const RealSubspace& v) {
  NetAssignment out;
  for (const auto& region : regions) {
    std::vector<std::string> labels = region.covered_by;
    std::sort(labels.begin(), labels.end());
    if (labels.empty()) {
      out.emplace(region.label, RealSubspace::full(v.ambient_dim(), v.tol()));
      continue;
    }
    bool first = true;
    RealSubspace acc = RealSubspace::zero(v.ambient_dim(), v.tol());
    for (const auto& label : labels) {
      const RealSubspace moved = v.apply(find_element(rep, label).unitary);
      acc = first ? moved : hilbert::real_intersect(acc, moved);
      first = false;
    }
    out.emplace(region.label, acc);
  }
  return out;
}

NetAssignment net_min(const std::vector<Region>& regions, const RepSample& rep,
                      const RealSubspace& v) {
  NetAssignment out;
  for (const auto& region : regions) {
    std::vector<std::string> labels = region.contains;
    std::sort(labels.begin(), labels.end());
    RealSubspace acc = RealSubspace::zero(v.ambient_dim(), v.tol());
    for (const auto& label : labels)
      acc = hilbert::real_sum(acc, v.apply(find_element(rep, label).unitary));
    out.emplace(region.label, acc);
  }
  return out;
}

BwCheckResult bw_check(const RepSample& rep, const RealSubspace& v, double tol) {
  BwCheckResult out;
  for (const auto& e : rep.elements) {
    if (!e.in_sw) continue;
    if (!sv_contains(e.unitary, v, tol)) {
      out.holds = false;
      out.witness_label = e.label;
      out.witness_defect = sv_defect(e.unitary, v);
      return out;
    }
  }
  return out;
}

}  // namespace modwedge::nets
