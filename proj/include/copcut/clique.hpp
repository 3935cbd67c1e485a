#ifndef COPCUT_CLIQUE_HPP
#define COPCUT_CLIQUE_HPP

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "copcut/copositivity.hpp"
#include "copcut/cutting_plane.hpp"
#include "copcut/graph.hpp"
#include "copcut/matrix.hpp"
#include "copcut/mbqp.hpp"
#include "copcut/qubo.hpp"

namespace copcut {

/// lambda (I + A_complement) - 11^T. Copositive iff lambda >= clique number,
/// so the clique number is the optimum of the 1-D copositive program
/// minimizing lambda over this constraint.
inline SymMatrix clique_cop_matrix(const Graph& g, double lambda) {
  validate(g);
  Eigen::MatrixXd m =
      -Eigen::MatrixXd::Ones(g.n, g.n) +
      lambda * Eigen::MatrixXd::Identity(g.n, g.n);
  for (auto [i, j] : g.complement_edges()) {
    m(i, j) += lambda;
    m(j, i) += lambda;
  }
  return SymMatrix(m);
}

/// Edge-count upper bound on the clique number:
/// |E| >= C(omega, 2) implies omega <= (1 + sqrt(1 + 8|E|)) / 2.
inline double clique_upper_bound(const Graph& g) {
  return 0.5 * (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(g.edge_count())));
}

struct CliqueSolveOutcome {
  int clique_number_estimate = 0;
  double lower_bound_raw = 0.0;
  bool certified = false;  // exact sampler used throughout
  SolveReport report;
};

struct CliqueSolveConfig {
  int bits = 1;          // the binary grid; exact for integral answers
  double target_width = 1e-3;
  int max_iters = 200;
  double round_tol = 1e-9;
};

/// 1-D cutting plane on lambda over [1, edge bound]. A certificate z
/// proves every feasible lambda satisfies
///   lambda >= (1^T z)^2 / (z^T (I + A_complement) z),
/// which often jumps the lower bound well past the midpoint. A
/// "copositive" verdict shrinks the upper end; with a stochastic sampler
/// that side is heuristic, so only the lower bound is trusted for the
/// final rounding.
inline CliqueSolveOutcome solve_max_clique(const Graph& g,
                                           const QuboSampler& sampler,
                                           const CliqueSolveConfig& cfg = {},
                                           bool sampler_is_exact = true) {
  validate(g);
  CliqueSolveOutcome out;
  out.certified = sampler_is_exact;
  if (g.n == 0) {
    out.clique_number_estimate = 0;
    return out;
  }

  Discretization disc = build_discretization(g.n, cfg.bits);
  Eigen::MatrixXd denom_mat = Eigen::MatrixXd::Identity(g.n, g.n);
  for (auto [i, j] : g.complement_edges()) {
    denom_mat(i, j) = denom_mat(j, i) = 1.0;
  }

  Interval iv{1.0, clique_upper_bound(g)};
  SolveReport& rep = out.report;
  rep.lower_bound = iv.lo;
  rep.upper_bound = iv.hi;
  const double t_start = detail::now_s();

  for (int it = 0; it < cfg.max_iters && iv.hi - iv.lo > cfg.target_width;
       ++it) {
    const double mid = 0.5 * (iv.lo + iv.hi);
    const double t0 = detail::now_s();
    CopositivityVerdict v =
        check_copositivity(clique_cop_matrix(g, mid), disc, sampler);
    const double t1 = detail::now_s();
    rep.oracle_time += t1 - t0;

    IterateRecord r;
    r.iteration = it;
    r.test_point = Eigen::VectorXd::Constant(1, mid);
    r.feasible = v.copositive;
    r.certificate_value = v.value;
    r.oracle_time_s = t1 - t0;
    if (v.copositive) {
      iv = bisection_update(iv, BisectionCut::OptimumBelow, mid);
    } else {
      r.cut_kind = classify_cut(v.value);
      const Eigen::VectorXd& z = v.certificate;
      const double num = z.sum() * z.sum();
      const double den = z.dot(denom_mat * z);
      double lo = mid;
      if (den > 0.0) lo = std::max(lo, num / den);
      iv = bisection_update(iv, BisectionCut::OptimumAbove,
                            std::min(lo, iv.hi));
    }
    rep.lower_bound = iv.lo;
    rep.upper_bound = iv.hi;
    r.volume = iv.hi - iv.lo;
    r.lower = iv.lo;
    r.upper = iv.hi;
    rep.history.push_back(std::move(r));
    ++rep.iterations;
  }
  rep.status = (iv.hi - iv.lo <= cfg.target_width) ? SolveStatus::Converged
                                                   : SolveStatus::IterLimit;
  rep.other_time = detail::now_s() - t_start - rep.oracle_time;

  out.lower_bound_raw = iv.lo;
  out.clique_number_estimate =
      static_cast<int>(std::ceil(iv.lo - cfg.round_tol));
  return out;
}

/// Max clique as max stable set of the complement with a quadratic
/// penalty: minimize -sum x_i + weight * sum_{(i,j) complement} x_i x_j.
/// For weight > 1 the ground-state energy is -omega(g).
inline Qubo penalty_clique_qubo(const Graph& g, double weight) {
  validate(g);
  if (!(weight > 0.0)) {
    throw std::invalid_argument("penalty_clique_qubo: weight must be positive");
  }
  Eigen::MatrixXd C = -Eigen::MatrixXd::Identity(g.n, g.n);
  for (auto [i, j] : g.complement_edges()) {
    C(i, j) = C(j, i) = 0.5 * weight;  // 2 * C_ij x_i x_j = weight x_i x_j
  }
  Qubo q;
  q.coeffs = SymMatrix(C);
  return q;
}

struct CliqueSampleMetrics {
  std::vector<double> normalized_sizes;
  double valid_fraction = 0.0;
  double ground_state_fraction = 0.0;
};

/// Per-sample normalized clique size (selected vertices / true omega),
/// fraction of samples whose selection is pairwise adjacent, and fraction
/// that are maximum cliques. The empty selection counts as a valid clique
/// of size 0.
inline CliqueSampleMetrics clique_sample_metrics(const Graph& g,
                                                 const SampleSet& samples,
                                                 int truth) {
  validate(g);
  if (truth < 1) throw std::invalid_argument("clique_sample_metrics: truth must be >= 1");
  auto adj = g.adjacency();
  CliqueSampleMetrics met;
  int valid = 0, ground = 0;
  for (const Sample& s : samples.samples) {
    if (static_cast<int>(s.assignment.size()) != g.n) {
      throw std::invalid_argument("clique_sample_metrics: sample length mismatch");
    }
    std::vector<int> chosen;
    for (int i = 0; i < g.n; ++i) {
      if (s.assignment[i]) chosen.push_back(i);
    }
    met.normalized_sizes.push_back(static_cast<double>(chosen.size()) / truth);
    bool is_clique = true;
    for (std::size_t a = 0; a < chosen.size() && is_clique; ++a) {
      for (std::size_t b = a + 1; b < chosen.size(); ++b) {
        if (!adj[chosen[a]][chosen[b]]) {
          is_clique = false;
          break;
        }
      }
    }
    if (is_clique) {
      ++valid;
      if (static_cast<int>(chosen.size()) == truth) ++ground;
    }
  }
  const double total = std::max<std::size_t>(1, samples.samples.size());
  met.valid_fraction = valid / total;
  met.ground_state_fraction = ground / total;
  return met;
}

/// LP-format text for the MILP form of max clique:
/// maximize sum x_i subject to x_i + x_j <= 1 per complement edge, x binary.
/// Constraint order follows the sorted complement edge list, so the output
/// is byte-stable for a given graph.
inline std::string export_milp_text(const Graph& g) {
  validate(g);
  std::ostringstream os;
  os << "Maximize\n obj:";
  for (int i = 0; i < g.n; ++i) {
    os << (i ? " + x" : " x") << i;
  }
  os << "\nSubject To\n";
  int ci = 0;
  for (auto [i, j] : g.complement_edges()) {
    os << " c" << ci++ << ": x" << i << " + x" << j << " <= 1\n";
  }
  os << "Binary\n";
  for (int i = 0; i < g.n; ++i) {
    os << " x" << i;
  }
  os << "\nEnd\n";
  return os.str();
}

/// Two-variable worked instance: min x^T [[1,-1],[-1,0]] x over the unit
/// simplex (x1 + x2 = 1, x >= 0); optimum -1/3 at (1/3, 2/3).
inline Mbqp ex_mbqp_fixture() {
  Mbqp p;
  p.n = 2;
  p.m = 1;
  Eigen::MatrixXd Q(2, 2);
  Q << 1.0, -1.0, -1.0, 0.0;
  p.Q = SymMatrix(Q);
  p.c = Eigen::VectorXd::Zero(2);
  p.A = Eigen::MatrixXd::Ones(1, 2);
  p.b = Eigen::VectorXd::Ones(1);
  validate(p);
  return p;
}

/// Exhaustive MBQP minimum for desk-scale instances: enumerates binary
/// assignments and, when all variables are binary and constraints allow,
/// checks feasibility directly. Continuous variables are not supported.
inline double brute_force_mbqp_binary(const Mbqp& p, double tol = 1e-8) {
  validate(p);
  if (static_cast<Eigen::Index>(p.binary_set.size()) != p.n) {
    throw std::invalid_argument("brute_force_mbqp_binary: all variables must be binary");
  }
  if (p.n > 24) throw std::invalid_argument("brute_force_mbqp_binary: n too large");
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.n); ++mask) {
    Eigen::VectorXd x(p.n);
    for (Eigen::Index i = 0; i < p.n; ++i) {
      x(i) = static_cast<double>((mask >> i) & 1u);
    }
    MbqpEvaluation ev = evaluate_mbqp(p, x, tol);
    if (ev.feasible) best = std::min(best, ev.objective);
  }
  return best;
}

}  // namespace copcut

#endif  // COPCUT_CLIQUE_HPP
