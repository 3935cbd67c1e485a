#ifndef COPCUT_COPOSITIVITY_HPP
#define COPCUT_COPOSITIVITY_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "copcut/anneal.hpp"
#include "copcut/matrix.hpp"
#include "copcut/qubo.hpp"

namespace copcut {

/// Binary-expansion matrix D mapping hat_z in {0,1}^{k(n+1)} onto the grid
/// {0, 1/K, ..., 1}^{n+1} with K = 2^k - 1. Row i carries the weights
/// 2^0..2^{k-1} scaled by 1/K in its own k-column block.
struct Discretization {
  int bits = 1;
  int K = 1;
  Eigen::Index n_plus_1 = 0;
  Eigen::MatrixXd D;
};

inline Discretization build_discretization(Eigen::Index n_plus_1, int k) {
  if (n_plus_1 < 1 || k < 1) {
    throw std::invalid_argument("build_discretization: arguments must be >= 1");
  }
  Discretization d;
  d.bits = k;
  d.K = (1 << k) - 1;
  d.n_plus_1 = n_plus_1;
  d.D = Eigen::MatrixXd::Zero(n_plus_1, static_cast<Eigen::Index>(k) * n_plus_1);
  for (Eigen::Index i = 0; i < n_plus_1; ++i) {
    for (int bit = 0; bit < k; ++bit) {
      d.D(i, i * k + bit) = static_cast<double>(1 << bit) / d.K;
    }
  }
  return d;
}

/// Compiles the grid copositivity check min z^T M z, z in grid, into a QUBO
/// over the expansion bits: coefficients D^T M D, zero offset.
inline Qubo cop_qubo(const SymMatrix& M, const Discretization& d) {
  if (M.size() != d.n_plus_1) {
    throw std::invalid_argument("cop_qubo: matrix size does not match discretization");
  }
  Qubo q;
  q.coeffs = SymMatrix(d.D.transpose() * M.mat() * d.D);
  q.offset = 0.0;
  return q;
}

/// Either a grid-relative copositivity verdict or a certificate z >= 0 with
/// z^T M z < 0. Certificates are proofs; Copositive verdicts are evidence
/// only (the grid may miss a negative direction).
struct CopositivityVerdict {
  bool copositive = false;
  /// Best value of z^T M z found over the grid; >= 0 iff copositive.
  double value = 0.0;
  /// Primary (deepest) certificate; empty when copositive.
  Eigen::VectorXd certificate;
  /// All distinct negative certificates found, deepest first (multi-cut).
  std::vector<std::pair<Eigen::VectorXd, double>> certificates;
};

/// Handle to a pluggable QUBO/Ising sampler.
using QuboSampler = std::function<SampleSet(const Qubo&)>;

/// Exact sampler backed by brute-force enumeration.
inline QuboSampler exact_sampler(int cap = kBruteForceCap) {
  return [cap](const Qubo& q) {
    BruteForceResult bf = brute_force_solve(q, cap);
    SampleSet set;
    for (const BitVector& x : bf.argmins) {
      set.samples.push_back(Sample{x, bf.min_energy});
    }
    return set;
  };
}

/// Simulated-annealing sampler with the schedule endpoints derived from
/// each incoming QUBO's coefficient scale.
inline QuboSampler sa_sampler(int sweeps = 100, int reads = 1000,
                              std::uint64_t seed = 0) {
  return [sweeps, reads, seed](const Qubo& q) {
    return simulated_anneal(q, default_anneal_params(q, sweeps, reads, seed));
  };
}

inline CopositivityVerdict check_copositivity(const SymMatrix& M,
                                              const Discretization& d,
                                              const QuboSampler& solver) {
  Qubo q = cop_qubo(M, d);
  SampleSet set = solver(q);
  if (set.samples.empty()) {
    throw std::runtime_error("check_copositivity: solver returned no samples");
  }

  CopositivityVerdict verdict;
  double best = std::numeric_limits<double>::infinity();
  for (const Sample& s : set.samples) {
    Eigen::VectorXd hat(q.n());
    for (Eigen::Index i = 0; i < q.n(); ++i) {
      hat(i) = static_cast<double>(s.assignment[i]);
    }
    Eigen::VectorXd z = d.D * hat;
    // Recompute against M itself; certificates must be sound regardless of
    // what the sampler reported.
    const double value = M.quad_form(z);
    best = std::min(best, value);
    if (value < 0.0) {
      bool seen = false;
      for (const auto& [zc, vc] : verdict.certificates) {
        if (zc.size() == z.size() && (zc - z).lpNorm<Eigen::Infinity>() == 0.0) {
          seen = true;
          break;
        }
      }
      if (!seen) verdict.certificates.emplace_back(std::move(z), value);
    }
  }
  std::sort(verdict.certificates.begin(), verdict.certificates.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  if (verdict.certificates.empty()) {
    verdict.copositive = true;
    verdict.value = best;
  } else {
    verdict.copositive = false;
    verdict.certificate = verdict.certificates.front().first;
    verdict.value = verdict.certificates.front().second;
  }
  return verdict;
}

/// Smallest grid resolution K guaranteed to expose a negative point when
/// the continuous minimum over [0,1]^{n+1} is at most -delta:
/// K must exceed 1 / (2 (sqrt(delta/||M||_inf + 1) - 1)).
inline int required_K(double delta, double m_inf_norm) {
  if (!(delta > 0.0) || !(m_inf_norm > 0.0)) {
    throw std::invalid_argument("required_K: arguments must be positive");
  }
  const double threshold =
      1.0 / (2.0 * (std::sqrt(delta / m_inf_norm + 1.0) - 1.0));
  int K = static_cast<int>(std::floor(threshold)) + 1;
  if (static_cast<double>(K) <= threshold) ++K;  // strict inequality
  return std::max(K, 1);
}

/// Smallest bit count k with 2^k - 1 >= K.
inline int bits_for_K(int K) {
  int k = 1;
  while ((1 << k) - 1 < K) ++k;
  return k;
}

}  // namespace copcut

#endif  // COPCUT_COPOSITIVITY_HPP
