#include <doctest.h>

#include <random>

#include "modwedge/real_subspace.hpp"

using namespace modwedge;
using hilbert::Complex;
using hilbert::MatrixXcd;
using hilbert::RealSubspace;
using hilbert::VectorXcd;

namespace {

VectorXcd cvec(std::initializer_list<Complex> values) {
  VectorXcd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& z : values) v(i++) = z;
  return v;
}

VectorXcd random_cvec(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v;
}

// Independent rank oracle: Gaussian row reduction on realified vectors.
int real_rank_oracle(const std::vector<VectorXcd>& vectors) {
  const int n = static_cast<int>(vectors.front().size());
  std::vector<Eigen::VectorXd> rows;
  for (const auto& v : vectors) rows.push_back(hilbert::realify(v));
  int rank = 0;
  for (int col = 0; col < 2 * n && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    double best = 1e-9;
    for (size_t r = rank; r < rows.size(); ++r)
      if (std::abs(rows[r](col)) > best) {
        best = std::abs(rows[r](col));
        pivot = static_cast<int>(r);
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank) continue;
      rows[r] -= rows[r](col) / rows[rank](col) * rows[rank];
    }
    ++rank;
  }
  return rank;
}

// Independent intersection-dimension oracle: nullity of the stacked
// real-linear system V a = W b.
int intersect_dim_oracle(const RealSubspace& v, const RealSubspace& w) {
  const Eigen::MatrixXd fv = hilbert::realify_columns(v.frame());
  const Eigen::MatrixXd fw = hilbert::realify_columns(w.frame());
  Eigen::MatrixXd stacked(fv.rows(), fv.cols() + fw.cols());
  stacked << fv, -fw;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
  const double smax = svd.singularValues()(0);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-10 * smax) ++rank;
  return static_cast<int>(stacked.cols()) - rank;
}

}  // namespace

TEST_CASE("real_orthonormalize on canonical inputs") {
  const VectorXcd e1 = cvec({1.0, 0.0});
  const RealSubspace single = hilbert::real_orthonormalize(std::vector<VectorXcd>{e1});
  CHECK(single.dim() == 1);
  CHECK(single.contains(e1, 1e-12));

  // A complex line is a real plane.
  const RealSubspace line = hilbert::real_orthonormalize(std::vector<VectorXcd>{e1, Complex(0, 1) * e1});
  CHECK(line.dim() == 2);
  CHECK(line.contains(cvec({Complex(0.3, -0.7), 0.0}), 1e-10));
}

TEST_CASE("real_orthonormalize rank matches the row-reduction oracle") {
  std::mt19937_64 rng(7);
  std::vector<VectorXcd> vectors;
  for (int i = 0; i < 4; ++i) vectors.push_back(random_cvec(3, rng));
  vectors.push_back(vectors[1]);  // duplicate
  CHECK(real_rank_oracle(vectors) == 4);
  CHECK(hilbert::real_orthonormalize(vectors).dim() == 4);

  for (int trial = 0; trial < 20; ++trial) {
    std::vector<VectorXcd> vs;
    const int count = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i < count; ++i) vs.push_back(random_cvec(3, rng));
    if (count > 2 && rng() % 2) vs.push_back(vs[0] + vs[1]);  // dependent
    CHECK(hilbert::real_orthonormalize(vs).dim() == real_rank_oracle(vs));
  }
}

TEST_CASE("real_orthonormalize error paths") {
  CHECK_THROWS_AS(hilbert::real_orthonormalize(std::vector<VectorXcd>{cvec({0.0, 0.0})}), ZeroInput);
  CHECK_THROWS_AS(
      hilbert::real_orthonormalize(std::vector<VectorXcd>{cvec({1.0, 0.0}), cvec({1.0, 0.0, 0.0})}),
      DimensionMismatch);
}

TEST_CASE("real_intersect basics and oracle") {
  std::mt19937_64 rng(11);
  const RealSubspace r2 = RealSubspace::real_form(2);
  CHECK(hilbert::subspace_distance(hilbert::real_intersect(r2, r2), r2) < 1e-12);
  CHECK(hilbert::real_intersect(r2, r2.multiply_by_i()).dim() == 0);

  for (int trial = 0; trial < 25; ++trial) {
    std::vector<VectorXcd> a, b;
    for (int i = 0; i < 3; ++i) a.push_back(random_cvec(4, rng));
    for (int i = 0; i < 3; ++i) b.push_back(random_cvec(4, rng));
    if (trial % 3 == 0) b[0] = a[0];  // force a shared direction
    const RealSubspace v = hilbert::real_orthonormalize(a);
    const RealSubspace w = hilbert::real_orthonormalize(b);
    CHECK(hilbert::real_intersect(v, w).dim() == intersect_dim_oracle(v, w));
  }
  CHECK_THROWS_AS(
      hilbert::real_intersect(RealSubspace::real_form(2), RealSubspace::real_form(3)),
      DimensionMismatch);
}

TEST_CASE("cyclic / separating predicates") {
  const RealSubspace rn = RealSubspace::real_form(3);
  CHECK(hilbert::is_cyclic(rn));
  CHECK(hilbert::is_separating(rn));
  CHECK(hilbert::is_standard(rn));

  // V = C e1 inside C^2: separating fails (V ∩ iV = V).
  const RealSubspace cline =
      hilbert::real_orthonormalize(std::vector<VectorXcd>{cvec({1.0, 0.0}), cvec({Complex(0, 1), 0.0})});
  CHECK(!hilbert::is_separating(cline));

  // V = R e1 inside C^2: cyclic fails.
  const RealSubspace rline = hilbert::real_orthonormalize(std::vector<VectorXcd>{cvec({1.0, 0.0})});
  CHECK(!hilbert::is_cyclic(rline));
  CHECK(hilbert::is_separating(rline));
}

TEST_CASE("subspace_distance against principal-angle oracles") {
  const RealSubspace rn = RealSubspace::real_form(4);
  CHECK(hilbert::subspace_distance(rn, rn) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(hilbert::subspace_distance(rn, rn.multiply_by_i()) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Real line in C^1 rotated by theta: distance sin(theta).
  for (double theta : {0.1, 0.4, 1.0, 1.4}) {
    const RealSubspace a = hilbert::real_orthonormalize(std::vector<VectorXcd>{cvec({1.0})});
    const RealSubspace b =
        hilbert::real_orthonormalize(std::vector<VectorXcd>{cvec({std::exp(Complex(0, theta))})});
    CHECK(hilbert::subspace_distance(a, b) ==
          doctest::Approx(std::sin(theta)).epsilon(1e-12));
  }
}

TEST_CASE("sum/intersection containment properties on seeded pairs") {
  std::mt19937_64 rng(23);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<VectorXcd> a, b;
      const int ka = 1 + static_cast<int>(rng() % n);
      const int kb = 1 + static_cast<int>(rng() % n);
      for (int i = 0; i < ka; ++i) a.push_back(random_cvec(n, rng));
      for (int i = 0; i < kb; ++i) b.push_back(random_cvec(n, rng));
      const RealSubspace v = hilbert::real_orthonormalize(a);
      const RealSubspace w = hilbert::real_orthonormalize(b);
      const RealSubspace sum = hilbert::real_sum(v, w);
      const RealSubspace cap = hilbert::real_intersect(v, w);
      CHECK(sum.contains(v, 1e-8));
      CHECK(v.contains(cap, 1e-8));
      // V + iV has even real dimension <= 2n.
      const int closure_dim = hilbert::real_sum(v, v.multiply_by_i()).dim();
      CHECK(closure_dim % 2 == 0);
      CHECK(closure_dim <= 2 * n);
    }
  }
}

TEST_CASE("antilinear operator algebra") {
  std::mt19937_64 rng(5);
  const int n = 3;
  MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i) m.col(i) = random_cvec(n, rng);
  const hilbert::AntilinearOp t(m);

  // Adjoint rule <T† eta, xi> = <T xi, eta>.
  for (int trial = 0; trial < 10; ++trial) {
    const VectorXcd xi = random_cvec(n, rng), eta = random_cvec(n, rng);
    const Complex lhs = xi.dot(t.adjoint().apply(eta));
    const Complex rhs = eta.dot(t.apply(xi));
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
  CHECK(hilbert::AntilinearOp::conjugation(n).is_involution());
}
