#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "modwedge/lie_algebra.hpp"

namespace modwedge::liealg {

namespace {

// Sorted (re, im) eigenvalue list for multiset comparison.
std::vector<std::pair<double, double>> matrix_spectrum(const MatrixXd& m) {
  Eigen::EigenSolver<MatrixXd> es(m);
  std::vector<std::pair<double, double>> spec;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    spec.emplace_back(es.eigenvalues()(i).real(), es.eigenvalues()(i).imag());
  std::sort(spec.begin(), spec.end());
  return spec;
}

bool spectra_match(const std::vector<std::pair<double, double>>& a,
                   const std::vector<std::pair<double, double>>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i].first - b[i].first) > tol ||
        std::abs(a[i].second - b[i].second) > tol)
      return false;
  return true;
}

double flip_residual(const LieAlgebraSpec& g, const EulerDatum& datum,
                     const std::vector<VectorXd>& word) {
  VectorXd image = datum.h;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    image = MatrixXd(ad_matrix(g, *it).exp()) * image;
  return (image + datum.h).norm() / std::max(1.0, datum.h.norm());
}

}  // namespace

SymmetricSearchResult symmetric_euler_search(const LieAlgebraSpec& g,
                                             const EulerDatum& datum,
                                             const SearchBudget& budget,
                                             double tol) {
  SymmetricSearchResult out;
  const int d = g.dim();

  // Exact refutations first. Inner automorphisms act by matrix conjugation,
  // so the defining-module spectrum of h is an orbit invariant; likewise the
  // multiset Spec(ad h), hence dim g_1 vs dim g_{-1}.
  {
    const MatrixXd hm = g.to_matrix(datum.h);
    if (!spectra_match(matrix_spectrum(hm), matrix_spectrum(MatrixXd(-hm)), 1e-7)) {
      out.state = TriState::REFUTED;
      out.obstruction = "defining-module spectrum of h is not symmetric under negation";
      return out;
    }
    const double dim_plus = datum.p_plus.trace();
    const double dim_minus = datum.p_minus.trace();
    if (std::abs(dim_plus - dim_minus) > 0.5) {
      out.state = TriState::REFUTED;
      out.obstruction = "dim g_1(h) != dim g_{-1}(h)";
      return out;
    }
  }

  std::mt19937_64 rng(budget.seed);
  std::normal_distribution<double> gauss;
  double best = std::numeric_limits<double>::infinity();

  // Structured attempt: complete h to an sl2-triple (h, e, f) with e in g_1,
  // f in g_{-1}, [e,f] = 2h. Then exp(pi ad((e-f)/2)) flips h.
  const MatrixXd p_plus = datum.p_plus;
  const MatrixXd p_minus = datum.p_minus;
  for (int attempt = 0; attempt < budget.restarts; ++attempt) {
    VectorXd seed(d);
    for (int i = 0; i < d; ++i) seed(i) = gauss(rng);
    const VectorXd e = p_plus * seed;
    if (e.norm() < 1e-10) continue;
    // Solve [e, f] = 2h over f in g_{-1}: columns ad(e) * p_minus.
    const MatrixXd ade = ad_matrix(g, e);
    const MatrixXd sys = ade * p_minus;
    const VectorXd f_raw =
        sys.completeOrthogonalDecomposition().solve(VectorXd(2.0 * datum.h));
    const VectorXd f = p_minus * f_raw;
    const VectorXd zk = 0.5 * (e - f);
    const std::vector<VectorXd> word = {VectorXd(EIGEN_PI * zk)};
    const double res = flip_residual(g, datum, word);
    best = std::min(best, res);
    if (res < tol) {
      out.state = TriState::CONFIRMED;
      out.witness = word;
      out.best_residual = res;
      return out;
    }
  }

  // Random polish: Nelder-Mead on a single exponential for small algebras.
  if (d <= 16) {
    auto objective = [&](const VectorXd& x) {
      return flip_residual(g, datum, {x});
    };
    for (int restart = 0; restart < budget.restarts; ++restart) {
      std::vector<VectorXd> simplex;
      std::vector<double> value;
      VectorXd base(d);
      for (int i = 0; i < d; ++i) base(i) = 2.0 * gauss(rng);
      simplex.push_back(base);
      for (int i = 0; i < d; ++i) simplex.push_back(base + 0.5 * VectorXd::Unit(d, i));
      for (auto& p : simplex) value.push_back(objective(p));
      for (int it = 0; it < budget.iterations; ++it) {
        // Order simplex.
        std::vector<size_t> idx(simplex.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](size_t a, size_t b) { return value[a] < value[b]; });
        if (value[idx[0]] < tol) break;
        VectorXd centroid = VectorXd::Zero(d);
        for (size_t i = 0; i + 1 < idx.size(); ++i) centroid += simplex[idx[i]];
        centroid /= static_cast<double>(idx.size() - 1);
        const size_t worst = idx.back();
        const VectorXd refl = centroid + (centroid - simplex[worst]);
        const double frefl = objective(refl);
        if (frefl < value[idx[0]]) {
          const VectorXd expd = centroid + 2.0 * (centroid - simplex[worst]);
          const double fexp = objective(expd);
          if (fexp < frefl) {
            simplex[worst] = expd;
            value[worst] = fexp;
          } else {
            simplex[worst] = refl;
            value[worst] = frefl;
          }
        } else if (frefl < value[idx[idx.size() - 2]]) {
          simplex[worst] = refl;
          value[worst] = frefl;
        } else {
          const VectorXd contr = centroid + 0.5 * (simplex[worst] - centroid);
          const double fcontr = objective(contr);
          if (fcontr < value[worst]) {
            simplex[worst] = contr;
            value[worst] = fcontr;
          } else {
            for (size_t i = 1; i < idx.size(); ++i) {
              simplex[idx[i]] = simplex[idx[0]] + 0.5 * (simplex[idx[i]] - simplex[idx[0]]);
              value[idx[i]] = objective(simplex[idx[i]]);
            }
          }
        }
      }
      const size_t bi = static_cast<size_t>(
          std::min_element(value.begin(), value.end()) - value.begin());
      best = std::min(best, value[bi]);
      if (value[bi] < tol) {
        out.state = TriState::CONFIRMED;
        out.witness = std::vector<VectorXd>{simplex[bi]};
        out.best_residual = value[bi];
        return out;
      }
    }
  }

  out.state = TriState::UNKNOWN;
  out.best_residual = best;
  return out;
}

}  // namespace modwedge::liealg
