#include <doctest.h>

#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "modwedge/causal.hpp"

using namespace modwedge;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

VectorXd vec(std::initializer_list<double> values) {
  VectorXd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

MatrixXd boost_matrix(int d, double t) {
  MatrixXd b = MatrixXd::Identity(d, d);
  b(0, 0) = std::cosh(t);
  b(0, 1) = std::sinh(t);
  b(1, 0) = std::sinh(t);
  b(1, 1) = std::cosh(t);
  return b;
}

}  // namespace

TEST_CASE("affine positivity region of the boost") {
  MatrixXd h = MatrixXd::Zero(4, 4);
  h(0, 1) = h(1, 0) = 1.0;
  const auto cone = std::make_shared<liealg::LorentzCone>(4);
  CHECK(causal::affine_positivity_contains(h, cone, vec({0, 1, 0, 0})));
  CHECK(!causal::affine_positivity_contains(h, cone, vec({1, 0, 0, 0})));
  // brute-force equivalence with h x in the open cone
  std::mt19937_64 rng(2);
  std::normal_distribution<double> gauss;
  for (int s = 0; s < 2000; ++s) {
    VectorXd x(4);
    for (int i = 0; i < 4; ++i) x(i) = 2.0 * gauss(rng);
    CHECK(causal::affine_positivity_contains(h, cone, x) ==
          cone->interior_contains(h * x, 1e-12));
  }
}

TEST_CASE("rindler compression semigroup membership") {
  const int d = 4;
  const MatrixXd eye = MatrixXd::Identity(d, d);
  // translations by e1 compress, by e0 do not
  CHECK(causal::rindler_compression_contains({vec({0, 1, 0, 0}), eye}));
  CHECK(!causal::rindler_compression_contains({vec({1, 0, 0, 0}), eye}));
  // boosts compress for every t
  for (double t : {-2.0, -0.5, 0.5, 3.0})
    CHECK(causal::rindler_compression_contains({VectorXd::Zero(d), boost_matrix(d, t)}));
  // a rotation mixing e1 and e2 does not, and a witness escapes
  MatrixXd rot = MatrixXd::Identity(d, d);
  const double th = EIGEN_PI / 4;
  rot(1, 1) = std::cos(th);
  rot(1, 2) = -std::sin(th);
  rot(2, 1) = std::sin(th);
  rot(2, 2) = std::cos(th);
  causal::PoincareElement g{VectorXd::Zero(d), rot};
  CHECK(!causal::rindler_compression_contains(g));
  std::mt19937_64 rng(5);
  const auto witness = causal::rindler_escape_witness(g, rng);
  REQUIRE(witness.has_value());
  CHECK(causal::in_rindler_wedge(*witness));
  CHECK(!causal::in_rindler_wedge(VectorXd(rot * *witness)));
  // non-Lorentz input is rejected
  CHECK_THROWS_AS(
      causal::rindler_compression_contains({VectorXd::Zero(d), 2.0 * eye}),
      NotLorentz);
}

TEST_CASE("tangent cone of the compression semigroup (inclusion direction)") {
  const int d = 4;
  // x in C_+ ∪ C_- ∪ g_0 integrates into the semigroup for t in [0,5]
  struct Gen {
    VectorXd translation;
    MatrixXd lorentz_gen;
  };
  MatrixXd zero = MatrixXd::Zero(d, d);
  MatrixXd boost_gen = zero;
  boost_gen(0, 1) = boost_gen(1, 0) = 1.0;
  MatrixXd rot23 = zero;
  rot23(2, 3) = -1.0;
  rot23(3, 2) = 1.0;
  const std::vector<Gen> gens = {
      {vec({1, 1, 0, 0}), zero},    // C_+
      {vec({-1, 1, 0, 0}), zero},   // C_-
      {vec({0, 0, 1, 0}), zero},    // edge translation (g_0)
      {VectorXd::Zero(d), boost_gen},
      {VectorXd::Zero(d), rot23},
  };
  for (const auto& gen : gens)
    for (double t = 0.0; t <= 5.0; t += 0.5) {
      const MatrixXd lam = MatrixXd((t * gen.lorentz_gen).exp());
      CHECK(causal::rindler_compression_contains({t * gen.translation, lam}));
    }
}

TEST_CASE("de Sitter wedge and exponential") {
  CHECK(causal::ds_positivity_contains(vec({0, 1, 0})));
  CHECK(!causal::ds_positivity_contains(vec({0, -1, 0})));
  CHECK_THROWS_AS(causal::ds_positivity_contains(vec({0, 2, 0})), OffSurface);

  // ds_exp(0) = e1
  const VectorXd base = causal::ds_exp(VectorXd::Zero(3));
  CHECK((base - vec({0, 1, 0})).norm() < 1e-14);

  // spacelike, null and timelike tangents all land on the quadric
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  for (int s = 0; s < 500; ++s) {
    VectorXd t(4);
    for (int i = 0; i < 4; ++i) t(i) = gauss(rng);
    t(1) = 0.0;
    CHECK(std::abs(causal::ds_surface_defect(causal::ds_exp(t))) < 1e-10);
  }

  // the tangent must be eta-orthogonal to the base point
  VectorXd badt = vec({0, 1, 0});
  CHECK_THROWS_AS(causal::ds_exp(badt), Error);

  // Newton projection repairs small off-surface drift
  for (int s = 0; s < 200; ++s) {
    VectorXd t(3);
    for (int i = 0; i < 3; ++i) t(i) = gauss(rng);
    t(1) = 0.0;
    VectorXd p = causal::ds_exp(t);
    p += 1e-5 * VectorXd::Ones(3);  // drift off the quadric
    const VectorXd back = causal::ds_project(p);
    CHECK(std::abs(causal::ds_surface_defect(back)) < 1e-12);
    CHECK((back - p).norm() < 1e-4);
  }
}

TEST_CASE("de Sitter wedge sampling through the group") {
  const int d = 2;
  const MatrixXd eye = MatrixXd::Identity(d + 1, d + 1);
  // base point
  const auto at_base = causal::ds_wedge_sample(eye, VectorXd::Zero(d - 1));
  CHECK(at_base.inside);
  CHECK((at_base.point - vec({0, 1, 0})).norm() < 1e-12);
  // inside for ||y|| < pi/2, outside past the boundary
  VectorXd y(1);
  y << EIGEN_PI / 2 - 0.01;
  CHECK(causal::ds_wedge_sample(eye, y).inside);
  y << EIGEN_PI / 2 + 0.3;
  CHECK(!causal::ds_wedge_sample(eye, y).inside);
  // G^h_e = boosts here; they keep the small ball inside and the large outside
  for (double t : {-1.5, 0.8}) {
    y << EIGEN_PI / 2 - 0.2;
    CHECK(causal::ds_wedge_sample(boost_matrix(3, t), y).inside);
    y << EIGEN_PI / 2 + 0.3;
    CHECK(!causal::ds_wedge_sample(boost_matrix(3, t), y).inside);
  }
}

TEST_CASE("AdS2 positivity region") {
  // on-surface point with x1 > 0 inside the + component
  const auto inside = causal::ads2_positivity_contains(vec({std::sqrt(2.0), 0, 1}));
  CHECK(inside.inside);
  CHECK(inside.component == 1);
  // boundary |x2| = |x3| is excluded
  const auto boundary = causal::ads2_positivity_contains(vec({1, 1, 1}));
  CHECK(!boundary.inside);
  // inversion flips the component
  const auto flipped = causal::ads2_positivity_contains(vec({-std::sqrt(2.0), 0, -1}));
  CHECK(flipped.inside);
  CHECK(flipped.component == -1);
  CHECK_THROWS_AS(causal::ads2_positivity_contains(vec({5, 0, 0})), OffSurface);
}

TEST_CASE("group-type wedge for sl2") {
  const auto sl2 = liealg::make_sl(2);
  MatrixXd hm(2, 2), em(2, 2), fm(2, 2);
  hm << 0.5, 0, 0, -0.5;
  em << 0, 1, 0, 0;
  fm << 0, 0, 1, 0;
  const VectorXd h0 = sl2.to_coordinates(hm);
  MatrixXd basis_change(3, 3);
  basis_change << 0, 0, 2, 1, 0, 0, 0, 1, 0;
  const auto cone = std::make_shared<liealg::PullbackCone>(
      std::make_shared<liealg::Sl2InvariantCone>(), basis_change);

  // identity: semigroup yes (0 in C), wedge no (0 not interior)
  CHECK(causal::s_h_cg_contains(sl2, MatrixXd::Identity(2, 2), h0, cone));
  CHECK(!causal::group_type_wedge_contains(sl2, MatrixXd::Identity(2, 2), h0, cone));

  // exp(s e) exp(u f) with s, u > 0 lands in the wedge; closed form
  // Ad(g)h - h = 2su h + (-s - u s^2) e + u f.
  for (double s : {0.3, 1.0}) {
    for (double u : {0.2, 1.5}) {
      const MatrixXd g =
          MatrixXd(MatrixXd(s * em).exp()) * MatrixXd(MatrixXd(u * fm).exp());
      CHECK(causal::group_type_wedge_contains(sl2, g, h0, cone));
      const MatrixXd moved = g * hm * g.inverse();
      MatrixXd expected = 2 * s * u * hm + (-s - u * s * s) * em + u * fm + hm;
      CHECK((moved - expected).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("conformal embedding into the isotropic quadric") {
  // eta(0) = [1/2 : 0 : -1/2], normalized with positive leading coordinate.
  const VectorXd p0 = causal::conformal_embed(VectorXd::Zero(4));
  CHECK(p0(0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(p0(5) == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(std::abs(causal::quadric_form(p0)) < 1e-14);

  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss;
  for (int s = 0; s < 1000; ++s) {
    VectorXd v(4);
    for (int i = 0; i < 4; ++i) v(i) = 2.0 * gauss(rng);
    const VectorXd p = causal::conformal_embed(v);
    CHECK(std::abs(causal::quadric_form(p)) < 1e-12);
    // wedge membership pulls back to the open forward cone
    const bool in_cone = v(0) > std::sqrt(v(1) * v(1) + v(2) * v(2) + v(3) * v(3));
    CHECK(causal::flag_wedge_contains(p) == in_cone);
  }

  // injectivity on samples: distinct vectors give distinct projective points
  std::vector<VectorXd> points;
  for (int s = 0; s < 50; ++s) {
    VectorXd v(4);
    for (int i = 0; i < 4; ++i) v(i) = gauss(rng);
    points.push_back(causal::conformal_embed(v));
  }
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j) {
      const double dist =
          std::min((points[i] - points[j]).norm(), (points[i] + points[j]).norm());
      CHECK(dist > 1e-8);
    }
  CHECK_THROWS_AS(causal::flag_wedge_contains(vec({1, 0, 0, 0, 0, 0})), NotOnQuadric);
}

TEST_CASE("translation equivariance of the embedding at first order") {
  // d/dt eta(v + t w) matches the so(2,d) generator of the translation group.
  const int d = 4;
  std::mt19937_64 rng(13);
  std::normal_distribution<double> gauss;
  auto translation_generator = [&](const VectorXd& w) {
    // rows (a, v, b) with beta(w, .) coupling: da = -beta(w, v),
    // dv = (a - b) w, db = -beta(w, v).
    MatrixXd x = MatrixXd::Zero(d + 2, d + 2);
    VectorXd beta_w(d);
    beta_w(0) = w(0);
    for (int i = 1; i < d; ++i) beta_w(i) = -w(i);
    x.block(0, 1, 1, d) = -beta_w.transpose();
    x.block(d + 1, 1, 1, d) = -beta_w.transpose();
    x.block(1, 0, d, 1) = w;
    x.block(1, d + 1, d, 1) = -w;
    return x;
  };
  for (int s = 0; s < 20; ++s) {
    VectorXd v(d), w(d);
    for (int i = 0; i < d; ++i) {
      v(i) = gauss(rng);
      w(i) = gauss(rng);
    }
    const double t = 1e-5;
    const VectorXd p = causal::conformal_embed(v);
    const VectorXd moved = causal::conformal_embed(v + t * w);
    VectorXd flowed = MatrixXd((t * translation_generator(w)).exp()) * p;
    flowed /= flowed.norm();
    if (flowed.dot(moved) < 0) flowed = -flowed;
    CHECK((flowed - moved).norm() < 50 * t * t + 1e-12);
  }
}

TEST_CASE("sl2 to so(1,2) covering map") {
  const MatrixXd eye2 = MatrixXd::Identity(2, 2);
  CHECK((causal::sl2_to_so12(eye2) - MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <
        1e-14);
  CHECK((causal::sl2_to_so12(MatrixXd(-eye2)) - MatrixXd::Identity(3, 3))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
  CHECK_THROWS_AS(causal::sl2_to_so12(MatrixXd(2.0 * eye2)), NotUnimodular);
  // boosts map to Lorentz boosts preserving the form
  MatrixXd s1(2, 2);
  s1 << 0, 0.5, 0.5, 0;
  const MatrixXd lam = causal::sl2_to_so12(MatrixXd(MatrixXd(0.7 * s1).exp()));
  MatrixXd eta = MatrixXd::Identity(3, 3);
  eta(1, 1) = eta(2, 2) = -1.0;
  CHECK((lam.transpose() * eta * lam - eta).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("cayley transform") {
  using namespace std::complex_literals;
  CHECK(std::abs(causal::cayley_circle(0.0) - 1.0) < 1e-15);
  CHECK(std::abs(causal::cayley_circle(1.0) - 1.0i) < 1e-15);
  CHECK(std::abs(causal::cayley_circle(std::numeric_limits<double>::infinity()) -
                 (-1.0)) < 1e-15);
  for (double x : {-5.0, -0.3, 0.2, 7.0}) {
    CHECK(std::abs(causal::cayley_circle_inverse(causal::cayley_circle(x)) - x) <
          1e-12);
    CHECK(std::abs(std::abs(causal::cayley_circle(x)) - 1.0) < 1e-14);
  }
  // R_+ maps to the upper semicircle
  for (double x : {0.1, 1.0, 4.0, 50.0})
    CHECK(causal::cayley_circle(x).imag() > 0);
}

TEST_CASE("wedge descriptors validate anchors") {
  causal::CausalSpace ds{causal::SpaceKind::DeSitter, 3};
  MatrixXd h = MatrixXd::Zero(3, 3);
  h(0, 1) = h(1, 0) = 1.0;
  const auto wedge = causal::WedgeDescriptor::make(ds, h, vec({0, 1, 0}));
  CHECK(wedge.contains(vec({0.3, std::sqrt(1.0 + 0.09), 0})));
  CHECK_THROWS_AS(causal::WedgeDescriptor::make(ds, h, vec({0, -1, 0})), Error);

  // AdS2 components are told apart by the anchor
  causal::CausalSpace ads{causal::SpaceKind::AntiDeSitter2, 3};
  const auto plus_wedge =
      causal::WedgeDescriptor::make(ads, h, vec({std::sqrt(2.0), 0, 1}));
  CHECK(!plus_wedge.contains(vec({-std::sqrt(2.0), 0, -1})));
}
