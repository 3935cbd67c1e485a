#ifndef COPCUT_ANNEAL_HPP
#define COPCUT_ANNEAL_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "copcut/qubo.hpp"

namespace copcut {

/// Simulated-annealing schedule: geometric inverse-temperature ramp from
/// beta_min to beta_max over `sweeps` full Metropolis sweeps, repeated
/// for `reads` independent restarts.
struct AnnealParams {
  int sweeps = 100;
  int reads = 1000;
  double beta_min = 0.1;
  double beta_max = 10.0;
  std::uint64_t seed = 0;
};

inline void validate(const AnnealParams& p) {
  if (p.sweeps < 1) throw std::invalid_argument("AnnealParams: sweeps >= 1");
  if (p.reads < 1) throw std::invalid_argument("AnnealParams: reads >= 1");
  if (!(p.beta_min > 0.0) || !(p.beta_max > 0.0) || p.beta_min >= p.beta_max) {
    throw std::invalid_argument(
        "AnnealParams: need 0 < beta_min < beta_max");
  }
}

/// Fills the temperature endpoints from the coefficient scale of `q`:
/// hot enough that the largest move is likely accepted, cold enough that
/// the smallest nonzero move is frozen out.
inline AnnealParams default_anneal_params(const Qubo& q, int sweeps = 100,
                                          int reads = 1000,
                                          std::uint64_t seed = 0) {
  AnnealParams p;
  p.sweeps = sweeps;
  p.reads = reads;
  p.seed = seed;
  const Eigen::MatrixXd& C = q.coeffs.mat();
  double max_abs = q.coeffs.max_abs();
  double min_nonzero = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < C.rows(); ++i) {
    for (Eigen::Index j = 0; j < C.cols(); ++j) {
      double a = std::abs(C(i, j));
      if (a > 0.0) min_nonzero = std::min(min_nonzero, a);
    }
  }
  if (max_abs > 0.0 && std::isfinite(min_nonzero)) {
    p.beta_min = 0.1 / max_abs;
    p.beta_max = 10.0 / min_nonzero;
    if (p.beta_min >= p.beta_max) {  // near-uniform coefficient magnitudes
      p.beta_min = 0.1 / max_abs;
      p.beta_max = 100.0 * p.beta_min;
    }
  }
  return p;
}

struct Sample {
  BitVector assignment;
  double energy = 0.0;
};

struct SampleSet {
  std::vector<Sample> samples;
  double anneal_time_per_read = 0.0;  // seconds, total wall time / reads
  AnnealParams params;

  const Sample& best() const {
    const Sample* b = &samples.front();
    for (const Sample& s : samples) {
      if (s.energy < b->energy) b = &s;
    }
    return *b;
  }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Per-read generator derived from (seed, read index) so reads can run
/// in any order or in parallel with identical results.
inline std::mt19937_64 read_rng(std::uint64_t seed, int read) {
  std::uint64_t s = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(read) + 1));
  return std::mt19937_64(s);
}

inline Sample anneal_one_read(const Qubo& q, const AnnealParams& p, int read) {
  const int n = static_cast<int>(q.n());
  const Eigen::MatrixXd& C = q.coeffs.mat();
  std::mt19937_64 rng = read_rng(p.seed, read);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  BitVector x(n, 0);
  for (int i = 0; i < n; ++i) {
    x[i] = static_cast<std::uint8_t>(rng() & 1u);
  }
  // Local fields for O(1) flip deltas; see brute_force_solve.
  Eigen::VectorXd field = C.diagonal();
  for (int j = 0; j < n; ++j) {
    if (!x[j]) continue;
    field += 2.0 * C.col(j);
    field(j) -= 2.0 * C(j, j);
  }

  const double ratio =
      (p.sweeps > 1) ? std::pow(p.beta_max / p.beta_min,
                                1.0 / static_cast<double>(p.sweeps - 1))
                     : 1.0;
  double beta = (p.sweeps > 1) ? p.beta_min : p.beta_max;
  for (int sweep = 0; sweep < p.sweeps; ++sweep) {
    for (int i = 0; i < n; ++i) {
      const double delta = (x[i] ? -1.0 : 1.0) * field(i);
      if (delta <= 0.0 || unif(rng) < std::exp(-beta * delta)) {
        const double sign = x[i] ? -2.0 : 2.0;
        x[i] ^= 1u;
        field += sign * C.col(i);
        field(i) -= sign * C(i, i);
      }
    }
    beta *= ratio;
  }
  Sample s;
  s.energy = qubo_energy(q, x);
  s.assignment = std::move(x);
  return s;
}

}  // namespace detail

/// Deterministic given (q, p) including the seed, independent of how reads
/// are scheduled across threads.
inline SampleSet simulated_anneal(const Qubo& q, const AnnealParams& p) {
  validate(p);
  SampleSet out;
  out.params = p;
  out.samples.resize(p.reads);

  const auto t0 = std::chrono::steady_clock::now();
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (p.reads >= 32 && hw > 1) {
    std::vector<std::thread> workers;
    const unsigned nw = std::min<unsigned>(hw, 8);
    for (unsigned w = 0; w < nw; ++w) {
      workers.emplace_back([&, w]() {
        for (int r = static_cast<int>(w); r < p.reads;
             r += static_cast<int>(nw)) {
          out.samples[r] = detail::anneal_one_read(q, p, r);
        }
      });
    }
    for (auto& t : workers) t.join();
  } else {
    for (int r = 0; r < p.reads; ++r) {
      out.samples[r] = detail::anneal_one_read(q, p, r);
    }
  }
  const auto t1 = std::chrono::steady_clock::now();
  out.anneal_time_per_read =
      std::chrono::duration<double>(t1 - t0).count() / p.reads;
  return out;
}

/// CSV dump of a sample set, one row per read.
inline std::string sample_set_csv(const SampleSet& set) {
  std::ostringstream os;
  os.precision(17);
  os << "read_index,energy,assignment,anneal_time_s\n";
  for (std::size_t r = 0; r < set.samples.size(); ++r) {
    const Sample& s = set.samples[r];
    os << r << ',' << s.energy << ',';
    for (std::uint8_t bit : s.assignment) os << (bit ? '1' : '0');
    os << ',' << set.anneal_time_per_read << '\n';
  }
  return os.str();
}

}  // namespace copcut

#endif  // COPCUT_ANNEAL_HPP
