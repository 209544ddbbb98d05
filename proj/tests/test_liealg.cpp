#include <doctest.h>

#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "modwedge/lie_algebra.hpp"

using namespace modwedge;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using liealg::LieAlgebraSpec;

namespace {

bool spectrum_contains(const MatrixXd& m, double value, double tol = 1e-7) {
  Eigen::EigenSolver<MatrixXd> es(m);
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i).real() - value) < tol &&
        std::abs(es.eigenvalues()(i).imag()) < tol)
      return true;
  return false;
}

}  // namespace

TEST_CASE("catalog algebras close under brackets") {
  for (const auto& g :
       {liealg::make_sl(3), liealg::make_gl(2), liealg::make_so_pq(1, 3),
        liealg::make_sp(2), liealg::make_poincare(4), liealg::make_oscillator(),
        liealg::make_hcsp(1), liealg::make_affine_line()}) {
    CHECK(g.closure_defect() < 1e-10);
    CHECK(g.jacobi_defect() < 1e-10);
  }
}

TEST_CASE("ad_matrix basics") {
  const auto sl2 = liealg::make_sl(2);
  CHECK(liealg::ad_matrix(sl2, VectorXd::Zero(3)).cwiseAbs().maxCoeff() == 0.0);

  const VectorXd h = liealg::sl_euler_element(sl2, 1);
  const MatrixXd ad = liealg::ad_matrix(sl2, h);
  CHECK(spectrum_contains(ad, 1.0));
  CHECK(spectrum_contains(ad, -1.0));
  CHECK(spectrum_contains(ad, 0.0));

  // Poincare boost: spectrum {-1,0,1}; the eigencount gives dim g_0 = 4
  // (boost, the (2,3) rotation, and two transverse translations).
  const auto poin = liealg::make_poincare(4);
  const VectorXd boost = liealg::poincare_boost_element(poin);
  const auto check = liealg::euler_check(poin, boost);
  REQUIRE(check.is_euler);
  CHECK(std::lround(check.datum->p_zero.trace()) == 4);
  CHECK(std::lround(check.datum->p_plus.trace()) == 3);
  CHECK(std::lround(check.datum->p_minus.trace()) == 3);
}

TEST_CASE("euler_check accepts and rejects correctly") {
  const auto sl2 = liealg::make_sl(2);
  CHECK(liealg::euler_check(sl2, liealg::sl_euler_element(sl2, 1)).is_euler);

  // Nilpotent e: ad e nonzero with (ad e)^2 != 0 rank drop but only
  // eigenvalue 0, so diagonalizability fails.
  MatrixXd em(2, 2);
  em << 0, 1, 0, 0;
  const VectorXd e = sl2.to_coordinates(em);
  const MatrixXd ade = liealg::ad_matrix(sl2, e);
  CHECK(ade.cwiseAbs().maxCoeff() > 0.5);            // ad e != 0
  CHECK((ade * ade).cwiseAbs().maxCoeff() > 0.5);    // not 2-step nilpotent
  CHECK(!liealg::euler_check(sl2, e).is_euler);

  CHECK(!liealg::euler_check(sl2, VectorXd::Zero(3)).is_euler);

  // sl_n block elements: Euler for every k, defining eigenvalues 1-k/n, -k/n.
  for (int n : {3, 4, 5}) {
    const auto sln = liealg::make_sl(n);
    for (int k = 1; k < n; ++k) {
      const VectorXd hk = liealg::sl_euler_element(sln, k);
      CHECK(liealg::euler_check(sln, hk).is_euler);
      const MatrixXd hm = sln.to_matrix(hk);
      CHECK(spectrum_contains(hm, 1.0 - double(k) / n));
      CHECK(spectrum_contains(hm, -double(k) / n));
    }
  }
}

TEST_CASE("tau_h is an involutive automorphism implementing the grading") {
  const auto sl2 = liealg::make_sl(2);
  const auto datum = *liealg::euler_check(sl2, liealg::sl_euler_element(sl2, 1)).datum;
  const MatrixXd tau = liealg::tau_h_matrix(datum);
  CHECK((tau * tau - MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-10);
  // fixes h, negates e and f
  CHECK((tau * datum.h - datum.h).cwiseAbs().maxCoeff() < 1e-10);
  MatrixXd em(2, 2), fm(2, 2);
  em << 0, 1, 0, 0;
  fm << 0, 0, 1, 0;
  CHECK((tau * sl2.to_coordinates(em) + sl2.to_coordinates(em)).cwiseAbs().maxCoeff() <
        1e-10);
  CHECK((tau * sl2.to_coordinates(fm) + sl2.to_coordinates(fm)).cwiseAbs().maxCoeff() <
        1e-10);
  CHECK(liealg::automorphism_defect(sl2, tau) < 1e-9);
  CHECK(liealg::grading_defect(sl2, datum) < 1e-9);

  // Poincare: tau_h acts on translations as diag(-1,-1,1,...).
  const auto poin = liealg::make_poincare(4);
  const auto pd = *liealg::euler_check(poin, liealg::poincare_boost_element(poin)).datum;
  const MatrixXd ptau = liealg::tau_h_matrix(pd);
  // translation basis vectors are the first d coordinates in the catalog
  for (int i = 0; i < 4; ++i) {
    const VectorXd img = ptau * VectorXd::Unit(poin.dim(), i);
    const double expected = (i < 2) ? -1.0 : 1.0;
    CHECK((img - expected * VectorXd::Unit(poin.dim(), i)).cwiseAbs().maxCoeff() <
          1e-10);
  }
  CHECK(liealg::automorphism_defect(poin, ptau) < 1e-9);
  CHECK(liealg::grading_defect(poin, pd) < 1e-9);
}

TEST_CASE("euler elements shift by central elements") {
  const auto gl2 = liealg::make_gl(2);
  MatrixXd h1(2, 2);
  h1 << 0.5, 0, 0, -0.5;
  MatrixXd id = MatrixXd::Identity(2, 2);
  const VectorXd h = gl2.to_coordinates(h1);
  const VectorXd z = gl2.to_coordinates(id);
  CHECK(liealg::euler_check(gl2, h).is_euler);
  CHECK(liealg::euler_check(gl2, VectorXd(h + 0.7 * z)).is_euler);
}

TEST_CASE("cone catalog invariants") {
  std::mt19937_64 rng(3);
  std::vector<liealg::ConePtr> cones = {
      std::make_shared<liealg::LorentzCone>(4),
      std::make_shared<liealg::PsdCone>(2),
      std::make_shared<liealg::Sl2InvariantCone>(),
      std::make_shared<liealg::NonnegQuadraticCone>(2),
  };
  {
    MatrixXd gens(3, 4);
    gens << 1, 1, 0, 0, 1, 0, 1, 0, 0, 1, 1, 1;
    cones.push_back(std::make_shared<liealg::PolyhedralCone>(gens));
  }
  cones.push_back(std::make_shared<liealg::ProductCone>(
      std::vector<liealg::ConePtr>{cones[0], cones[2]}));
  {
    // image of the Lorentz cone under an injection into R^5
    MatrixXd inj = MatrixXd::Zero(5, 4);
    inj(0, 0) = 1.0;
    inj(2, 1) = 1.0;
    inj(3, 2) = 0.5;
    inj(4, 3) = 1.0;
    cones.push_back(std::make_shared<liealg::ImageCone>(cones[0], inj));
  }
  for (const auto& cone : cones) {
    CAPTURE(cone->kind());
    CHECK(cone->contains(VectorXd::Zero(cone->dim()), 1e-9));
    for (int s = 0; s < 200; ++s) {
      const VectorXd x = cone->sample(rng);
      const VectorXd y = cone->sample(rng);
      CHECK(cone->contains(x, 1e-7));
      CHECK(cone->contains(VectorXd(2.0 * x), 1e-7));          // homogeneity
      CHECK(cone->contains(VectorXd(0.5 * (x + y)), 1e-7));    // convexity
    }
  }
}

TEST_CASE("sl2 invariant cone matches its defining inequalities") {
  const liealg::Sl2InvariantCone cone;
  // contains z_k = (e - f)/2 -> (a,b,c) = (0, 1/2, -1/2)
  VectorXd zk(3);
  zk << 0.0, 0.5, -0.5;
  CHECK(cone.contains(zk, 1e-12));
  CHECK(cone.interior_contains(zk, 1e-9));
  // e and f span the boundary rays
  VectorXd e(3), f(3);
  e << 0, 1, 0;
  f << 0, 0, 1;
  CHECK(cone.contains(e, 1e-12));
  CHECK(!cone.interior_contains(e, 1e-9));
  CHECK(!cone.contains(f, 1e-9));
  // invariances: e^{t ad h} scales (b, c) -> (e^t b, e^{-t} c)
  std::mt19937_64 rng(9);
  for (int s = 0; s < 100; ++s) {
    const VectorXd x = cone.sample(rng);
    for (double t : {-1.0, 0.7}) {
      VectorXd moved(3);
      moved << x(0), std::exp(t) * x(1), std::exp(-t) * x(2);
      CHECK(cone.contains(moved, 1e-7));
    }
    VectorXd mtau(3);  // -tau_h: negate a
    mtau << -x(0), x(1), x(2);
    CHECK(cone.contains(mtau, 1e-7));
  }
}

TEST_CASE("cone_graded_parts on the catalog") {
  std::mt19937_64 rng(5);
  SUBCASE("Minkowski light cone under the boost") {
    // The light cone sits inside the Poincare algebra, supported on the
    // translation ideal (the invariant cone of p(d)).
    const auto poin = liealg::make_poincare(4);
    const auto datum =
        *liealg::euler_check(poin, liealg::poincare_boost_element(poin)).datum;
    MatrixXd proj = MatrixXd::Zero(4, poin.dim());
    proj.leftCols(4) = MatrixXd::Identity(4, 4);
    MatrixXd translations = MatrixXd::Zero(poin.dim(), 4);
    translations.topRows(4) = MatrixXd::Identity(4, 4);
    const auto cone = std::make_shared<liealg::GradedPartCone>(
        std::make_shared<liealg::PullbackCone>(
            std::make_shared<liealg::LorentzCone>(4), proj),
        +1, translations);
    const auto parts = liealg::cone_graded_parts(cone, poin, datum, 40, rng);
    // C_+ = R_+ (e0 + e1), C_- = R_+ (e1 - e0) in translation coordinates.
    VectorXd plus = VectorXd::Zero(poin.dim());
    plus(0) = 1.0;
    plus(1) = 1.0;
    VectorXd minus = VectorXd::Zero(poin.dim());
    minus(0) = -1.0;
    minus(1) = 1.0;
    CHECK(parts.plus->contains(plus, 1e-9));
    CHECK(parts.minus->contains(minus, 1e-9));
    CHECK(!parts.plus->contains(minus, 1e-6));
    CHECK(!parts.minus->contains(plus, 1e-6));
    // no Lorentz direction sneaks into the graded parts
    VectorXd boost_dir = VectorXd::Zero(poin.dim());
    boost_dir(4) = 1.0;
    CHECK(!parts.plus->contains(boost_dir, 1e-6));
  }
  SUBCASE("sl2 invariant cone gives the root rays") {
    const auto sl2 = liealg::make_sl(2);
    const auto datum = *liealg::euler_check(sl2, liealg::sl_euler_element(sl2, 1)).datum;
    MatrixXd basis_change(3, 3);
    basis_change << 0, 0, 2, 1, 0, 0, 0, 1, 0;  // (e,f,h') -> (a,b,c)
    const auto cone = std::make_shared<liealg::PullbackCone>(
        std::make_shared<liealg::Sl2InvariantCone>(), basis_change);
    const auto parts = liealg::cone_graded_parts(cone, sl2, datum, 60, rng);
    MatrixXd em(2, 2), fm(2, 2);
    em << 0, 1, 0, 0;
    fm << 0, 0, 1, 0;
    CHECK(parts.plus->contains(sl2.to_coordinates(em), 1e-9));
    CHECK(parts.minus->contains(sl2.to_coordinates(fm), 1e-9));
    CHECK(!parts.plus->contains(sl2.to_coordinates(fm), 1e-6));
  }
  SUBCASE("cone supported in g_0 has trivial graded parts") {
    const auto poin = liealg::make_poincare(4);
    const auto datum =
        *liealg::euler_check(poin, liealg::poincare_boost_element(poin)).datum;
    // linear span of the transverse translations e2, e3 as a (non-pointed) cone
    MatrixXd gens = MatrixXd::Zero(poin.dim(), 4);
    gens(2, 0) = 1.0;
    gens(2, 1) = -1.0;
    gens(3, 2) = 1.0;
    gens(3, 3) = -1.0;
    const auto cone = std::make_shared<liealg::PolyhedralCone>(gens);
    const auto parts = liealg::cone_graded_parts(cone, poin, datum, 40, rng);
    VectorXd lightray = VectorXd::Zero(poin.dim());
    lightray(0) = 1.0;
    lightray(1) = 1.0;
    CHECK(!parts.plus->contains(lightray, 1e-6));
    CHECK(parts.plus->contains(VectorXd::Zero(poin.dim()), 1e-9));
  }
}

TEST_CASE("rep_positive_cone_contains") {
  using liealg::MatrixXcd;
  SUBCASE("u(1) defining representation") {
    const std::vector<MatrixXcd> gen = {MatrixXcd::Identity(1, 1) *
                                        std::complex<double>(0, 1)};
    VectorXd x(1);
    x << 1.0;
    CHECK(liealg::rep_positive_cone_contains(gen, x));
    x << -1.0;
    CHECK(!liealg::rep_positive_cone_contains(gen, x));
    x << 0.0;
    CHECK(liealg::rep_positive_cone_contains(gen, x));
  }
  SUBCASE("truncated oscillator central element") {
    const int dim = 8;
    MatrixXcd a = MatrixXcd::Zero(dim, dim);
    for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(double(k));
    const MatrixXcd x = (a + a.adjoint()) / std::sqrt(2.0);
    const MatrixXcd p = std::complex<double>(0, 1) * (a.adjoint() - a) / std::sqrt(2.0);
    // pi(q) = i x, pi(p) = (a^dag - a)/sqrt(2): [pi(q), pi(p)] = i = pi(z)
    const std::vector<MatrixXcd> gen = {
        std::complex<double>(0, 1) * MatrixXcd::Identity(dim, dim),  // pi(z)
        std::complex<double>(0, 1) * x,                              // pi(q)
        (a.adjoint() - a) / std::sqrt(2.0),                          // pi(p)
    };
    VectorXd z(3);
    z << 1.0, 0.0, 0.0;
    CHECK(liealg::rep_positive_cone_contains(gen, z));
    // the compressed commutator [pi(q), pi(p)] reproduces pi(z) away from
    // the truncation boundary
    const MatrixXcd comm = gen[1] * gen[2] - gen[2] * gen[1];
    const MatrixXcd diff = comm - gen[0];
    CHECK(diff.topLeftCorner(dim - 1, dim - 1).cwiseAbs().maxCoeff() < 1e-12);
    CHECK_THROWS_AS(
        liealg::rep_positive_cone_contains({MatrixXcd::Identity(2, 2)}, z),
        NotSkewHermitian);
  }
}

TEST_CASE("symmetric_euler_search tri-state soundness") {
  SUBCASE("sl2 is confirmed") {
    const auto sl2 = liealg::make_sl(2);
    const auto datum = *liealg::euler_check(sl2, liealg::sl_euler_element(sl2, 1)).datum;
    const auto res = liealg::symmetric_euler_search(sl2, datum);
    CHECK(res.state == liealg::TriState::CONFIRMED);
    REQUIRE(res.witness.has_value());
    // verify the witness directly
    MatrixXd image = datum.h;
    for (auto it = res.witness->rbegin(); it != res.witness->rend(); ++it)
      image = MatrixXd((liealg::ad_matrix(sl2, *it)).exp()) * image;
    CHECK((image + datum.h).norm() < 1e-7);
  }
  SUBCASE("sl3 h1 is refuted by the defining spectrum") {
    const auto sl3 = liealg::make_sl(3);
    const auto datum = *liealg::euler_check(sl3, liealg::sl_euler_element(sl3, 1)).datum;
    const auto res = liealg::symmetric_euler_search(sl3, datum);
    CHECK(res.state == liealg::TriState::REFUTED);
  }
  SUBCASE("gl2 with central shift is refuted") {
    const auto gl2 = liealg::make_gl(2);
    MatrixXd hm(2, 2);
    hm << 0.5 + 0.3, 0, 0, -0.5 + 0.3;  // h1 + 0.3 * id
    const auto check = liealg::euler_check(gl2, gl2.to_coordinates(hm));
    REQUIRE(check.is_euler);
    const auto res = liealg::symmetric_euler_search(gl2, *check.datum);
    CHECK(res.state == liealg::TriState::REFUTED);
  }
}

TEST_CASE("hcsp spectra: Euler with the grading shift, not without") {
  const auto hcsp = liealg::make_hcsp(1);
  const VectorXd h = liealg::hcsp_euler_element(hcsp);
  const auto check = liealg::euler_check(hcsp, h);
  REQUIRE(check.is_euler);
  CHECK(check.datum->spectrum == std::vector<double>({-1.0, 0.0, 1.0}));

  // h_s + lambda z has ad-spectrum containing ±1/2: no Euler element there.
  const int m = hcsp.matrix_size();
  MatrixXd hs = MatrixXd::Zero(m, m);
  hs(0, 0) = 0.5;   // q direction
  hs(1, 1) = -0.5;  // p direction
  for (double lambda : {0.0, 0.7}) {
    MatrixXd z = MatrixXd::Zero(m, m);
    z(m - 1, m - 2) = 1.0;
    const VectorXd x = hcsp.to_coordinates(MatrixXd(hs + lambda * z));
    const MatrixXd ad = liealg::ad_matrix(hcsp, x);
    CHECK(spectrum_contains(ad, 0.5));
    CHECK(spectrum_contains(ad, -0.5));
    CHECK(!liealg::euler_check(hcsp, x).is_euler);
  }
}

TEST_CASE("to_coordinates rejects matrices outside the span") {
  const auto sl2 = liealg::make_sl(2);
  CHECK_THROWS_AS(sl2.to_coordinates(MatrixXd::Identity(2, 2)), NotInAlgebra);
}
