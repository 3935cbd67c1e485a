#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "copcut/clique.hpp"
#include "copcut/matrix.hpp"
#include "copcut/mbqp.hpp"

using namespace copcut;

namespace {

Mbqp random_mbqp(std::mt19937_64& rng, int n, int m, int nb) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mbqp p;
  p.n = n;
  p.m = m;
  Eigen::MatrixXd Q(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) Q(i, j) = gauss(rng);
  }
  p.Q = SymMatrix(Q);
  p.c = Eigen::VectorXd::NullaryExpr(n, [&](Eigen::Index) { return gauss(rng); });
  p.A = Eigen::MatrixXd::NullaryExpr(m, n, [&](Eigen::Index, Eigen::Index) {
    return gauss(rng);
  });
  p.b = Eigen::VectorXd::NullaryExpr(m, [&](Eigen::Index) { return gauss(rng); });
  for (int j = 0; j < nb; ++j) p.binary_set.push_back(j);
  validate(p);
  return p;
}

}  // namespace

TEST_CASE("SymMatrix symmetrizes and validates") {
  Eigen::MatrixXd m(2, 2);
  m << 1.0, 2.0, 4.0, 3.0;
  SymMatrix s(m);
  CHECK(s(0, 1) == 3.0);
  CHECK(s(1, 0) == 3.0);
  CHECK(s.max_abs() == 3.0);

  Eigen::VectorXd z(2);
  z << 1.0, 1.0;
  CHECK_THAT(s.quad_form(z), Catch::Matchers::WithinAbs(10.0, 1e-14));

  CHECK_THROWS_AS(SymMatrix(Eigen::MatrixXd::Zero(2, 3)), std::invalid_argument);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(2, 2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(SymMatrix(bad), std::invalid_argument);
}

TEST_CASE("Mbqp validation rejects malformed instances") {
  Mbqp p = ex_mbqp_fixture();
  CHECK_NOTHROW(validate(p));
  CHECK(p.dual_dim() == 3);

  Mbqp bad = p;
  bad.binary_set = {5};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = p;
  bad.binary_set = {1, 1};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = p;
  bad.c = Eigen::VectorXd::Zero(3);
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("evaluate_mbqp feasibility and objective") {
  Mbqp p = ex_mbqp_fixture();
  Eigen::VectorXd x(2);
  x << 1.0 / 3.0, 2.0 / 3.0;
  MbqpEvaluation ev = evaluate_mbqp(p, x);
  CHECK(ev.feasible);
  CHECK_THAT(ev.objective, Catch::Matchers::WithinAbs(-1.0 / 3.0, 1e-12));

  x << 0.5, 0.6;  // violates the equality constraint
  CHECK_FALSE(evaluate_mbqp(p, x).feasible);
  x << -0.1, 1.1;  // violates nonnegativity
  CHECK_FALSE(evaluate_mbqp(p, x).feasible);

  Mbqp pb = p;
  pb.binary_set = {0};
  x << 0.5, 0.5;
  CHECK_FALSE(evaluate_mbqp(pb, x).feasible);
  x << 1.0, 0.0;
  CHECK(evaluate_mbqp(pb, x).feasible);
}

TEST_CASE("assemble_M matches the worked two-variable instance") {
  Mbqp p = ex_mbqp_fixture();
  DualPoint d = DualPoint::zero(p);
  d.mu_lin(0) = 1.0;
  d.mu_quad(0) = 2.0;
  d.gamma = 3.0;
  SymMatrix M = assemble_M(p, d);
  Eigen::MatrixXd want(3, 3);
  want << -1.0, -3.0, -0.5,
          -3.0, -2.0, -0.5,
          -0.5, -0.5, -3.0;
  CHECK((M.mat() - want).lpNorm<Eigen::Infinity>() < 1e-14);
}

TEST_CASE("assemble_M is affine in the dual point") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mbqp p = random_mbqp(rng, 4, 2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd v1 = Eigen::VectorXd::NullaryExpr(
        p.dual_dim(), [&](Eigen::Index) { return gauss(rng); });
    Eigen::VectorXd v2 = Eigen::VectorXd::NullaryExpr(
        p.dual_dim(), [&](Eigen::Index) { return gauss(rng); });
    double t = gauss(rng);
    Eigen::MatrixXd lhs =
        assemble_M(p, DualPoint::from_vector(p, v1 + t * (v2 - v1))).mat();
    Eigen::MatrixXd rhs =
        assemble_M(p, DualPoint::from_vector(p, v1)).mat() +
        t * (assemble_M(p, DualPoint::from_vector(p, v2)).mat() -
             assemble_M(p, DualPoint::from_vector(p, v1)).mat());
    CHECK((lhs - rhs).lpNorm<Eigen::Infinity>() < 1e-10);
  }
}

TEST_CASE("dual objective and gradient") {
  Mbqp p = ex_mbqp_fixture();
  DualPoint d = DualPoint::zero(p);
  d.mu_lin(0) = 1.0;
  d.mu_quad(0) = 1.0;
  CHECK_THAT(dual_objective(p, d), Catch::Matchers::WithinAbs(2.0, 1e-14));

  Eigen::VectorXd g = dual_objective_gradient(p);
  REQUIRE(g.size() == 3);
  CHECK(g(0) == 1.0);  // b
  CHECK(g(1) == 1.0);  // b^2
  CHECK(g(2) == 1.0);  // gamma

  // Gradient is exact for the linear objective.
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v0 = Eigen::VectorXd::NullaryExpr(
      p.dual_dim(), [&](Eigen::Index) { return gauss(rng); });
  Eigen::VectorXd v1 = Eigen::VectorXd::NullaryExpr(
      p.dual_dim(), [&](Eigen::Index) { return gauss(rng); });
  double diff = dual_objective(p, DualPoint::from_vector(p, v1)) -
                dual_objective(p, DualPoint::from_vector(p, v0));
  CHECK_THAT(diff, Catch::Matchers::WithinAbs(g.dot(v1 - v0), 1e-12));
}

TEST_CASE("DualPoint vector round trip") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mbqp p = random_mbqp(rng, 5, 3, 2);
  Eigen::VectorXd v = Eigen::VectorXd::NullaryExpr(
      p.dual_dim(), [&](Eigen::Index) { return gauss(rng); });
  DualPoint d = DualPoint::from_vector(p, v);
  CHECK((d.to_vector() - v).lpNorm<Eigen::Infinity>() == 0.0);
  CHECK_THROWS_AS(DualPoint::from_vector(p, Eigen::VectorXd::Zero(2)),
                  std::invalid_argument);
}

TEST_CASE("homogenized lift preserves matrix and objective") {
  std::mt19937_64 rng(19);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    int m = 1 + static_cast<int>(rng() % 3);
    int nb = static_cast<int>(rng() % (n + 1));
    Mbqp p = random_mbqp(rng, n, m, nb);

    HomDualPoint h;
    h.mu = Eigen::VectorXd::NullaryExpr(m, [&](Eigen::Index) { return gauss(rng); });
    h.lam = Eigen::VectorXd::NullaryExpr(nb, [&](Eigen::Index) { return gauss(rng); });
    h.gamma = gauss(rng);

    DualPoint d = lift_hom_to_inhom(p, h);
    Eigen::MatrixXd Mhom = assemble_M_hom(p, h).mat();
    Eigen::MatrixXd Minh = assemble_M(p, d).mat();
    CHECK((Mhom - Minh).lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK_THAT(dual_objective(p, d), Catch::Matchers::WithinAbs(h.gamma, 1e-12));
  }
}
