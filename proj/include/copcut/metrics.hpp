#ifndef COPCUT_METRICS_HPP
#define COPCUT_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "copcut/anneal.hpp"

namespace copcut {

/// Inputs to the time-to-target estimate: confidence s, per-read success
/// probability p, and the wall time of one annealing cycle.
struct TttInputs {
  double confidence = 0.99;
  double success_probability = 0.0;
  double anneal_time_per_read = 0.0;
};

/// TTT_s = T_anneal * log(1 - s) / log(1 - p). Degenerate cases: p = 0
/// never succeeds (+inf); p >= 1 succeeds in a single read (T_anneal).
inline double time_to_target(const TttInputs& in) {
  if (!(in.confidence > 0.0 && in.confidence < 1.0)) {
    throw std::invalid_argument("time_to_target: confidence must be in (0, 1)");
  }
  if (in.success_probability < 0.0) {
    throw std::invalid_argument("time_to_target: negative success probability");
  }
  if (in.success_probability == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  if (in.success_probability >= 1.0) {
    return in.anneal_time_per_read;
  }
  return in.anneal_time_per_read * std::log(1.0 - in.confidence) /
         std::log(1.0 - in.success_probability);
}

/// Target-quality success estimate: mean sample energy divided by the
/// ground-state energy, clamped to [0, 1]. Only meaningful for negative
/// ground states (the ratio flips sense otherwise); use p_succ_exact then.
inline double p_hat_succ(const SampleSet& samples, double ground) {
  if (!(ground < 0.0)) {
    throw std::invalid_argument(
        "p_hat_succ: requires a negative ground state; use p_succ_exact");
  }
  if (samples.samples.empty()) return 0.0;
  double mean = 0.0;
  for (const Sample& s : samples.samples) mean += s.energy;
  mean /= static_cast<double>(samples.samples.size());
  return std::clamp(mean / ground, 0.0, 1.0);
}

/// Exact success estimate: fraction of samples at the ground state.
inline double p_succ_exact(const SampleSet& samples, double ground,
                           double tol = 1e-9) {
  if (samples.samples.empty()) return 0.0;
  int hits = 0;
  for (const Sample& s : samples.samples) {
    if (std::abs(s.energy - ground) <= tol) ++hits;
  }
  return static_cast<double>(hits) /
         static_cast<double>(samples.samples.size());
}

}  // namespace copcut

#endif  // COPCUT_METRICS_HPP
