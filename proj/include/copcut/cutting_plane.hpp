#ifndef COPCUT_CUTTING_PLANE_HPP
#define COPCUT_CUTTING_PLANE_HPP

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "copcut/copositivity.hpp"
#include "copcut/ellipsoid.hpp"
#include "copcut/mbqp.hpp"

namespace copcut {

enum class CutKind { Deep, Neutral, Shallow, Objective };

inline const char* to_string(CutKind k) {
  switch (k) {
    case CutKind::Deep: return "deep";
    case CutKind::Neutral: return "neutral";
    case CutKind::Shallow: return "shallow";
    case CutKind::Objective: return "objective";
  }
  return "?";
}

/// Halfspace a^T d <= rhs in DualPoint coordinate order.
struct Cut {
  Eigen::VectorXd a;
  double rhs = 0.0;
  CutKind kind = CutKind::Deep;
};

/// Sign of the certificate value against a tolerance: strictly negative
/// values cut the test point off (deep), zero passes through it (neutral),
/// positive values remove less than half the region (shallow).
inline CutKind classify_cut(double certificate_value, double tol = 1e-9) {
  if (certificate_value < -tol) return CutKind::Deep;
  if (certificate_value <= tol) return CutKind::Neutral;
  return CutKind::Shallow;
}

/// Expands z^T M(d) z into a halfspace over the dual variables:
///   rhs       = z^T [[Q, c], [c^T, 0]] z
///   a[mu_lin] = z^T (linear block) z,   a[mu_quad] = (A_i z_{1..n})^2
///   a[lam_j]  = -z_j^2 + z_j z_{n+1},   a[gamma]   = z_{n+1}^2
/// so that z^T M(d) z = rhs - a^T d for every dual point d. Feasible points
/// satisfy a^T d <= rhs; the queried point with z^T M z < 0 violates it.
inline Cut certificate_to_cut(const Eigen::VectorXd& z, const Mbqp& p) {
  if (z.size() != p.n + 1) {
    throw std::invalid_argument("certificate_to_cut: certificate length must be n+1");
  }
  if ((z.array() < 0.0).any()) {
    throw std::invalid_argument("certificate_to_cut: certificate must be nonnegative");
  }
  const Eigen::VectorXd zx = z.head(p.n);
  const double zl = z(p.n);

  Cut cut;
  cut.a = Eigen::VectorXd::Zero(p.dual_dim());
  cut.rhs = p.Q.quad_form(zx) + 2.0 * zl * p.c.dot(zx);
  for (Eigen::Index i = 0; i < p.m; ++i) {
    const double Az = p.A.row(i).dot(zx);
    cut.a(i) = zl * Az;          // mu_lin block, z^T [[0, A/2],[A/2, 0]] z
    cut.a(p.m + i) = Az * Az;    // mu_quad block
  }
  for (Eigen::Index jj = 0; jj < p.num_binary(); ++jj) {
    const int j = p.binary_set[jj];
    cut.a(2 * p.m + jj) = -zx(j) * zx(j) + zx(j) * zl;
  }
  cut.a(cut.a.size() - 1) = zl * zl;
  return cut;
}

/// Oracle setup for solve_cop: discretization depth, sampler, and the
/// optional re-check escalation on "copositive" verdicts from a
/// stochastic sampler.
struct OracleConfig {
  int bits = 4;
  QuboSampler sampler = exact_sampler();
  bool stochastic = false;  // enables escalation below
  int escalate_k_max = 0;   // re-check with k+1..k_max after doubling reads
  int escalate_reads_max = 0;
  int sweeps = 100;  // used to rebuild samplers during escalation
  int reads = 1000;
  std::uint64_t seed = 0;
};

struct SolveConfig {
  double initial_radius = 10.0;
  double target_radius = 1e-3;
  int max_iters = 500;
  bool multi_cut = false;
  int max_cuts_per_iter = 5;
  double gap_tol = 1e-6;      // bound-gap termination (1-D always; nD extra)
  double round_tol = 1e-9;
};

enum class SolveStatus { Converged, IterLimit, VolumeTarget, OracleFailure };

struct IterateRecord {
  int iteration = 0;
  Eigen::VectorXd test_point;
  bool feasible = false;
  double certificate_value = 0.0;
  CutKind cut_kind = CutKind::Deep;
  double volume = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double oracle_time_s = 0.0;
};

struct SolveReport {
  std::optional<DualPoint> best_dual;
  double lower_bound = -std::numeric_limits<double>::infinity();
  double upper_bound = std::numeric_limits<double>::infinity();
  int iterations = 0;
  double oracle_time = 0.0;
  double other_time = 0.0;
  SolveStatus status = SolveStatus::IterLimit;
  std::vector<IterateRecord> history;

  double gap() const { return upper_bound - lower_bound; }

  std::string history_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "iteration,test_point,verdict,certificate_value,volume,lower,upper,"
          "oracle_time_s\n";
    for (const IterateRecord& r : history) {
      os << r.iteration << ",\"";
      for (Eigen::Index i = 0; i < r.test_point.size(); ++i) {
        if (i) os << ' ';
        os << r.test_point(i);
      }
      os << "\"," << (r.feasible ? "feasible" : to_string(r.cut_kind)) << ','
         << r.certificate_value << ',' << r.volume << ',' << r.lower << ','
         << r.upper << ',' << r.oracle_time_s << '\n';
    }
    return os.str();
  }
};

namespace detail {

inline double now_s() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

/// Repeated updates can flatten the ellipsoid until the shape matrix loses
/// numerical positive definiteness; treat that as zero volume.
inline double safe_log_volume(const Ellipsoid& e) {
  try {
    return ellipsoid_log_volume(e);
  } catch (const std::invalid_argument&) {
    return -std::numeric_limits<double>::infinity();
  }
}

/// One oracle call with optional escalation: a stochastic "copositive"
/// verdict is re-checked with doubled reads, then with a finer grid, up
/// to the configured caps, before being accepted.
inline CopositivityVerdict run_oracle(const SymMatrix& M,
                                      const OracleConfig& cfg) {
  Discretization d = build_discretization(M.size(), cfg.bits);
  CopositivityVerdict v = check_copositivity(M, d, cfg.sampler);
  if (!cfg.stochastic || !v.copositive) return v;

  int reads = cfg.reads;
  while (cfg.escalate_reads_max > 0 && reads * 2 <= cfg.escalate_reads_max) {
    reads *= 2;
    v = check_copositivity(M, d, sa_sampler(cfg.sweeps, reads, cfg.seed + 1));
    if (!v.copositive) return v;
  }
  for (int k = cfg.bits + 1; k <= cfg.escalate_k_max; ++k) {
    Discretization dk = build_discretization(M.size(), k);
    v = check_copositivity(M, dk, sa_sampler(cfg.sweeps, reads, cfg.seed + k));
    if (!v.copositive) return v;
  }
  return v;
}

}  // namespace detail

/// Cutting-plane solve of the dual copositive program
///   max  dual_objective(d)  s.t.  assemble_M(p, d) copositive,
/// with the ellipsoid method (interval bisection when the dual is 1-D).
/// Feasible test points contribute lower bounds; the shrinking region
/// yields upper bounds. Any returned lower bound is certified at grid
/// resolution; upper bounds inherit the oracle's one-sidedness.
inline SolveReport solve_cop(const Mbqp& p, const OracleConfig& oracle,
                             const SolveConfig& cfg) {
  validate(p);
  if (!(cfg.target_radius < cfg.initial_radius)) {
    throw std::invalid_argument("SolveConfig: target_radius must be < initial_radius");
  }
  const Eigen::Index mdim = p.dual_dim();
  const Eigen::VectorXd grad = dual_objective_gradient(p);
  SolveReport rep;
  const double t_start = detail::now_s();

  if (mdim == 1) {
    // Dual is gamma alone; the feasible set is a ray gamma <= gamma*.
    Interval iv{-cfg.initial_radius, cfg.initial_radius};
    rep.upper_bound = iv.hi;
    for (int it = 0; it < cfg.max_iters; ++it) {
      if (iv.hi - iv.lo <= cfg.gap_tol) {
        rep.status = SolveStatus::Converged;
        break;
      }
      const double mid = 0.5 * (iv.lo + iv.hi);
      DualPoint d = DualPoint::zero(p);
      d.gamma = mid;
      const double t0 = detail::now_s();
      CopositivityVerdict v = detail::run_oracle(assemble_M(p, d), oracle);
      const double t1 = detail::now_s();
      rep.oracle_time += t1 - t0;

      IterateRecord r;
      r.iteration = it;
      r.test_point = Eigen::VectorXd::Constant(1, mid);
      r.feasible = v.copositive;
      r.certificate_value = v.value;
      r.oracle_time_s = t1 - t0;
      if (v.copositive) {
        iv = bisection_update(iv, BisectionCut::OptimumAbove, mid);
        rep.lower_bound = std::max(rep.lower_bound, mid);
        rep.best_dual = d;
      } else {
        r.cut_kind = classify_cut(v.value);
        iv = bisection_update(iv, BisectionCut::OptimumBelow, mid);
      }
      rep.upper_bound = std::min(rep.upper_bound, iv.hi);
      r.volume = iv.hi - iv.lo;
      r.lower = rep.lower_bound;
      r.upper = rep.upper_bound;
      rep.history.push_back(std::move(r));
      ++rep.iterations;
    }
    if (rep.status != SolveStatus::Converged) rep.status = SolveStatus::IterLimit;
    rep.other_time = detail::now_s() - t_start - rep.oracle_time;
    return rep;
  }

  Ellipsoid ell = Ellipsoid::ball(mdim, cfg.initial_radius);
  const double log_vol_target =
      ellipsoid_log_volume(Ellipsoid::ball(mdim, cfg.target_radius));
  rep.upper_bound =
      grad.dot(ell.center) + std::sqrt(grad.dot(ell.shape * grad));

  bool stopped = false;
  for (int it = 0; it < cfg.max_iters; ++it) {
    const double log_vol = detail::safe_log_volume(ell);
    if (log_vol < log_vol_target) {
      rep.status = SolveStatus::VolumeTarget;
      stopped = true;
      break;
    }
    if (rep.gap() <= cfg.gap_tol) {
      rep.status = SolveStatus::Converged;
      stopped = true;
      break;
    }
    DualPoint d = DualPoint::from_vector(p, ell.center);
    const double t0 = detail::now_s();
    CopositivityVerdict v = detail::run_oracle(assemble_M(p, d), oracle);
    const double t1 = detail::now_s();
    rep.oracle_time += t1 - t0;

    IterateRecord r;
    r.iteration = it;
    r.test_point = ell.center;
    r.feasible = v.copositive;
    r.certificate_value = v.value;
    r.oracle_time_s = t1 - t0;

    try {
      if (v.copositive) {
        const double obj = dual_objective(p, d);
        if (obj > rep.lower_bound) {
          rep.lower_bound = obj;
          rep.best_dual = d;
        }
        r.cut_kind = CutKind::Objective;
        // Keep the region with better objective: -grad^T s <= -grad^T x.
        ell = ellipsoid_update(ell, -grad);
      } else {
        int applied = 0;
        for (const auto& [z, value] : v.certificates) {
          if (applied >= (cfg.multi_cut ? cfg.max_cuts_per_iter : 1)) break;
          Cut cut = certificate_to_cut(z, p);
          cut.kind = classify_cut(value);
          // After the first update the center moves; only apply further cuts
          // still violated there, so the kept halfspace covers the feasible set.
          if (applied > 0 && cut.a.dot(ell.center) < cut.rhs) continue;
          ell = ellipsoid_update(ell, cut.a);
          if (applied == 0) r.cut_kind = cut.kind;
          ++applied;
        }
      }
    } catch (const std::invalid_argument&) {
      // The region degenerated numerically; the bounds so far stand.
      rep.status = SolveStatus::VolumeTarget;
      stopped = true;
      rep.history.push_back(std::move(r));
      ++rep.iterations;
      break;
    }
    // The optimum stays inside the ellipsoid, so its objective span bounds
    // the optimal value from above.
    rep.upper_bound =
        std::min(rep.upper_bound,
                 grad.dot(ell.center) + std::sqrt(std::max(
                                            0.0, grad.dot(ell.shape * grad))));
    r.volume = std::exp(detail::safe_log_volume(ell));
    r.lower = rep.lower_bound;
    r.upper = rep.upper_bound;
    rep.history.push_back(std::move(r));
    ++rep.iterations;
  }
  if (!stopped) rep.status = SolveStatus::IterLimit;
  rep.other_time = detail::now_s() - t_start - rep.oracle_time;
  return rep;
}

}  // namespace copcut

#endif  // COPCUT_CUTTING_PLANE_HPP
