#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "copcut/copositivity.hpp"

using namespace copcut;

namespace {

// Exhaustive grid minimum of z^T M z, z in {0, 1/K, ..., 1}^{n+1}.
double grid_min(const SymMatrix& M, const Discretization& d) {
  const int bits_total = static_cast<int>(d.D.cols());
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits_total); ++mask) {
    Eigen::VectorXd hat(bits_total);
    for (int i = 0; i < bits_total; ++i) {
      hat(i) = static_cast<double>((mask >> i) & 1u);
    }
    best = std::min(best, M.quad_form(d.D * hat));
  }
  return best;
}

}  // namespace

TEST_CASE("build_discretization layout") {
  Discretization d = build_discretization(2, 3);
  CHECK(d.K == 7);
  CHECK(d.D.rows() == 2);
  CHECK(d.D.cols() == 6);
  CHECK_THAT(d.D(0, 0), Catch::Matchers::WithinAbs(1.0 / 7.0, 1e-15));
  CHECK_THAT(d.D(0, 2), Catch::Matchers::WithinAbs(4.0 / 7.0, 1e-15));
  CHECK(d.D(0, 3) == 0.0);
  CHECK(d.D(1, 2) == 0.0);
  CHECK_THAT(d.D(1, 5), Catch::Matchers::WithinAbs(4.0 / 7.0, 1e-15));

  // Every grid value in [0, 1] is reachable, all-ones maps to 1 exactly.
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(6);
  CHECK(((d.D * ones).array() - 1.0).abs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(build_discretization(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_discretization(2, 0), std::invalid_argument);
}

TEST_CASE("cop_qubo reproduces the quadratic form on the grid") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd Mraw(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) Mraw(i, j) = gauss(rng);
  }
  SymMatrix M(Mraw);
  Discretization d = build_discretization(3, 2);
  Qubo q = cop_qubo(M, d);
  CHECK(q.offset == 0.0);
  for (std::uint32_t mask = 0; mask < (1u << 6); ++mask) {
    BitVector x(6);
    Eigen::VectorXd hat(6);
    for (int i = 0; i < 6; ++i) {
      x[i] = (mask >> i) & 1u;
      hat(i) = static_cast<double>(x[i]);
    }
    REQUIRE_THAT(qubo_energy(q, x),
                 Catch::Matchers::WithinAbs(M.quad_form(d.D * hat), 1e-12));
  }
  CHECK_THROWS_AS(cop_qubo(M, build_discretization(4, 2)), std::invalid_argument);
}

TEST_CASE("check_copositivity matches grid enumeration") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXd Mraw(3, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) Mraw(i, j) = gauss(rng);
    }
    SymMatrix M(Mraw);
    Discretization d = build_discretization(3, 2);
    CopositivityVerdict v = check_copositivity(M, d, exact_sampler());
    const double gmin = grid_min(M, d);
    if (gmin < 0.0) {
      CHECK_FALSE(v.copositive);
      CHECK_THAT(v.value, Catch::Matchers::WithinAbs(gmin, 1e-10));
      CHECK_THAT(M.quad_form(v.certificate),
                 Catch::Matchers::WithinAbs(v.value, 1e-12));
      CHECK((v.certificate.array() >= 0.0).all());
    } else {
      CHECK(v.copositive);
      CHECK(v.value >= 0.0);
      CHECK(v.certificate.size() == 0);
    }
  }
}

TEST_CASE("identity is copositive, negative identity is not") {
  Discretization d = build_discretization(3, 2);
  CopositivityVerdict v =
      check_copositivity(SymMatrix::Identity(3), d, exact_sampler());
  CHECK(v.copositive);

  SymMatrix neg(Eigen::MatrixXd(-Eigen::MatrixXd::Identity(3, 3)));
  v = check_copositivity(neg, d, exact_sampler());
  CHECK_FALSE(v.copositive);
  CHECK(v.value < 0.0);
  CHECK_FALSE(v.certificates.empty());
  // Certificates are sorted deepest first.
  for (std::size_t i = 1; i < v.certificates.size(); ++i) {
    CHECK(v.certificates[i - 1].second <= v.certificates[i].second);
  }
}

TEST_CASE("certificates remain sound under a lying sampler") {
  // Sampler claims a wildly wrong energy; the verdict must recompute.
  SymMatrix M = SymMatrix::Identity(2);
  Discretization d = build_discretization(2, 1);
  QuboSampler liar = [](const Qubo& q) {
    SampleSet set;
    set.samples.push_back(Sample{BitVector(q.n(), 1), -100.0});
    return set;
  };
  CopositivityVerdict v = check_copositivity(M, d, liar);
  CHECK(v.copositive);  // z = (1,1) has z^T I z = 2 >= 0
  CHECK_THAT(v.value, Catch::Matchers::WithinAbs(2.0, 1e-12));
}

TEST_CASE("check_copositivity rejects empty sample sets") {
  QuboSampler empty = [](const Qubo&) { return SampleSet{}; };
  CHECK_THROWS_AS(check_copositivity(SymMatrix::Identity(2),
                                     build_discretization(2, 1), empty),
                  std::runtime_error);
}

TEST_CASE("required_K worked values") {
  // delta equal to the matrix scale: threshold 1/(2(sqrt 2 - 1)) ~ 1.207.
  CHECK(required_K(1.0, 1.0) == 2);
  // Huge relative depth: any grid including the corners suffices.
  CHECK(required_K(1e6, 1.0) == 1);
  CHECK_THROWS_AS(required_K(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(required_K(1.0, 0.0), std::invalid_argument);
  // Monotone: shallower minima need finer grids.
  int prev = 0;
  for (double delta : {1.0, 0.1, 0.01, 0.001}) {
    int K = required_K(delta, 1.0);
    CHECK(K >= prev);
    prev = K;
  }
}

TEST_CASE("bits_for_K") {
  CHECK(bits_for_K(1) == 1);
  CHECK(bits_for_K(2) == 2);
  CHECK(bits_for_K(3) == 2);
  CHECK(bits_for_K(4) == 3);
  CHECK(bits_for_K(7) == 3);
  CHECK(bits_for_K(8) == 4);
}

TEST_CASE("required_K grid depth exposes a planted negative direction") {
  // M = I - c uu^T with c chosen so the continuous minimum over the box
  // is at most -delta at z = u.
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unif(0.2, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const int n1 = 3;
    Eigen::VectorXd u(n1);
    for (int i = 0; i < n1; ++i) u(i) = unif(rng);
    u /= u.maxCoeff();
    const double delta = 0.5;
    Eigen::MatrixXd B = Eigen::MatrixXd::Identity(n1, n1);
    const double c = (u.dot(B * u) + delta) / std::pow(u.squaredNorm(), 2);
    SymMatrix M(B - c * (u * u.transpose()));
    REQUIRE(M.quad_form(u) <= -delta + 1e-9);

    const int K = required_K(delta, M.max_abs());
    Discretization d = build_discretization(n1, bits_for_K(K));
    CopositivityVerdict v = check_copositivity(M, d, exact_sampler());
    CHECK_FALSE(v.copositive);
    CHECK(M.quad_form(v.certificate) < 0.0);
  }
}
