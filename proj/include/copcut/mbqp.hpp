#ifndef COPCUT_MBQP_HPP
#define COPCUT_MBQP_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "copcut/matrix.hpp"

namespace copcut {

/// Mixed-binary quadratic program
///
///   min  x^T Q x + 2 c^T x
///   s.t. A x = b,  x >= 0,  x_j in {0,1} for j in binary_set
///
/// Indices are 0-based everywhere, including binary_set.
struct Mbqp {
  Eigen::Index n = 0;       // variable count
  Eigen::Index m = 0;       // equality-constraint count
  SymMatrix Q;              // n x n
  Eigen::VectorXd c;        // length n
  Eigen::MatrixXd A;        // m x n
  Eigen::VectorXd b;        // length m
  std::vector<int> binary_set;  // sorted, subset of [0, n)

  Eigen::Index num_binary() const {
    return static_cast<Eigen::Index>(binary_set.size());
  }

  /// Dimension of the dual copositive program: 2m + |B| + 1.
  Eigen::Index dual_dim() const { return 2 * m + num_binary() + 1; }
};

/// Dual variables of the copositive program, one vector per constraint
/// family. Serialization order is (mu_lin, mu_quad, lam, gamma).
struct DualPoint {
  Eigen::VectorXd mu_lin;   // length m
  Eigen::VectorXd mu_quad;  // length m
  Eigen::VectorXd lam;      // length |B|
  double gamma = 0.0;

  static DualPoint zero(const Mbqp& p) {
    DualPoint d;
    d.mu_lin = Eigen::VectorXd::Zero(p.m);
    d.mu_quad = Eigen::VectorXd::Zero(p.m);
    d.lam = Eigen::VectorXd::Zero(p.num_binary());
    d.gamma = 0.0;
    return d;
  }

  Eigen::VectorXd to_vector() const {
    Eigen::VectorXd v(mu_lin.size() + mu_quad.size() + lam.size() + 1);
    v << mu_lin, mu_quad, lam, gamma;
    return v;
  }

  static DualPoint from_vector(const Mbqp& p, const Eigen::VectorXd& v) {
    if (v.size() != p.dual_dim()) {
      throw std::invalid_argument("DualPoint::from_vector: length mismatch");
    }
    DualPoint d;
    d.mu_lin = v.segment(0, p.m);
    d.mu_quad = v.segment(p.m, p.m);
    d.lam = v.segment(2 * p.m, p.num_binary());
    d.gamma = v(v.size() - 1);
    return d;
  }
};

/// Dual variables of the homogenized copositive program.
struct HomDualPoint {
  Eigen::VectorXd mu;   // length m
  Eigen::VectorXd lam;  // length |B|
  double gamma = 0.0;
};

inline void validate(const Mbqp& p) {
  if (p.n < 0 || p.m < 0) {
    throw std::invalid_argument("Mbqp: negative dimensions");
  }
  if (p.Q.size() != p.n) {
    throw std::invalid_argument("Mbqp: Q must be n x n (n = " +
                                std::to_string(p.n) + ")");
  }
  if (p.c.size() != p.n) {
    throw std::invalid_argument("Mbqp: c must have length n");
  }
  if (p.A.rows() != p.m || p.A.cols() != p.n) {
    throw std::invalid_argument("Mbqp: A must be m x n");
  }
  if (p.b.size() != p.m) {
    throw std::invalid_argument("Mbqp: b must have length m");
  }
  if (!p.A.allFinite() || !p.b.allFinite() || !p.c.allFinite()) {
    throw std::invalid_argument("Mbqp: entries must be finite");
  }
  for (std::size_t i = 0; i < p.binary_set.size(); ++i) {
    int j = p.binary_set[i];
    if (j < 0 || j >= p.n) {
      throw std::invalid_argument("Mbqp: binary_set index " +
                                  std::to_string(j) + " out of range [0, " +
                                  std::to_string(p.n) + ")");
    }
    if (i > 0 && p.binary_set[i - 1] >= j) {
      throw std::invalid_argument("Mbqp: binary_set must be strictly sorted");
    }
  }
}

constexpr double kDefaultFeasTol = 1e-8;

struct MbqpEvaluation {
  double objective = 0.0;
  bool feasible = false;
};

inline MbqpEvaluation evaluate_mbqp(const Mbqp& p, const Eigen::VectorXd& x,
                                    double tol = kDefaultFeasTol) {
  if (x.size() != p.n) {
    throw std::invalid_argument("evaluate_mbqp: x must have length n");
  }
  MbqpEvaluation ev;
  ev.objective = p.Q.quad_form(x) + 2.0 * p.c.dot(x);
  bool ok = (x.array() >= -tol).all();
  if (ok && p.m > 0) {
    ok = ((p.A * x - p.b).cwiseAbs().array() <= tol).all();
  }
  if (ok) {
    for (int j : p.binary_set) {
      double v = x(j);
      if (std::abs(v) > tol && std::abs(v - 1.0) > tol) {
        ok = false;
        break;
      }
    }
  }
  ev.feasible = ok;
  return ev;
}

namespace detail {

/// Objective block [[Q, c], [c^T, 0]] of size n+1.
inline Eigen::MatrixXd objective_block(const Mbqp& p) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p.n + 1, p.n + 1);
  m.topLeftCorner(p.n, p.n) = p.Q.mat();
  m.topRightCorner(p.n, 1) = p.c;
  m.bottomLeftCorner(1, p.n) = p.c.transpose();
  return m;
}

/// Linear-constraint block [[0, A_i^T/2], [A_i/2, 0]].
inline Eigen::MatrixXd lin_block(const Mbqp& p, Eigen::Index i) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p.n + 1, p.n + 1);
  m.topRightCorner(p.n, 1) = 0.5 * p.A.row(i).transpose();
  m.bottomLeftCorner(1, p.n) = 0.5 * p.A.row(i);
  return m;
}

/// Quadratic-constraint block [[A_i^T A_i, 0], [0, 0]].
inline Eigen::MatrixXd quad_block(const Mbqp& p, Eigen::Index i) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p.n + 1, p.n + 1);
  m.topLeftCorner(p.n, p.n) = p.A.row(i).transpose() * p.A.row(i);
  return m;
}

/// Binary block [[-e_j e_j^T, e_j/2], [e_j^T/2, 0]].
inline Eigen::MatrixXd binary_block(const Mbqp& p, int j) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p.n + 1, p.n + 1);
  m(j, j) = -1.0;
  m(j, p.n) = 0.5;
  m(p.n, j) = 0.5;
  return m;
}

/// Homogenized equality block [[A_i^T A_i, -b_i A_i^T], [-b_i A_i, b_i^2]].
inline Eigen::MatrixXd hom_block(const Mbqp& p, Eigen::Index i) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p.n + 1, p.n + 1);
  m.topLeftCorner(p.n, p.n) = p.A.row(i).transpose() * p.A.row(i);
  m.topRightCorner(p.n, 1) = -p.b(i) * p.A.row(i).transpose();
  m.bottomLeftCorner(1, p.n) = -p.b(i) * p.A.row(i);
  m(p.n, p.n) = p.b(i) * p.b(i);
  return m;
}

inline void check_dims(const Mbqp& p, const DualPoint& d) {
  if (d.mu_lin.size() != p.m || d.mu_quad.size() != p.m ||
      d.lam.size() != p.num_binary()) {
    throw std::invalid_argument("DualPoint dimensions do not match problem");
  }
}

inline void check_dims(const Mbqp& p, const HomDualPoint& h) {
  if (h.mu.size() != p.m || h.lam.size() != p.num_binary()) {
    throw std::invalid_argument("HomDualPoint dimensions do not match problem");
  }
}

}  // namespace detail

/// The dual constraint matrix M(mu, lam, gamma) of size (n+1) x (n+1):
/// the objective block minus the multiplier-weighted constraint blocks.
/// Feasibility of the dual point is copositivity of this matrix.
inline SymMatrix assemble_M(const Mbqp& p, const DualPoint& d) {
  detail::check_dims(p, d);
  Eigen::MatrixXd m = detail::objective_block(p);
  for (Eigen::Index i = 0; i < p.m; ++i) {
    m -= d.mu_lin(i) * detail::lin_block(p, i);
    m -= d.mu_quad(i) * detail::quad_block(p, i);
  }
  for (Eigen::Index jj = 0; jj < p.num_binary(); ++jj) {
    m -= d.lam(jj) * detail::binary_block(p, p.binary_set[jj]);
  }
  m(p.n, p.n) -= d.gamma;
  return SymMatrix(m);
}

/// Homogenized variant: a single multiplier per equality constraint.
inline SymMatrix assemble_M_hom(const Mbqp& p, const HomDualPoint& h) {
  detail::check_dims(p, h);
  Eigen::MatrixXd m = detail::objective_block(p);
  for (Eigen::Index i = 0; i < p.m; ++i) {
    m -= h.mu(i) * detail::hom_block(p, i);
  }
  for (Eigen::Index jj = 0; jj < p.num_binary(); ++jj) {
    m -= h.lam(jj) * detail::binary_block(p, p.binary_set[jj]);
  }
  m(p.n, p.n) -= h.gamma;
  return SymMatrix(m);
}

/// gamma + sum_i mu_lin_i b_i + mu_quad_i b_i^2
inline double dual_objective(const Mbqp& p, const DualPoint& d) {
  detail::check_dims(p, d);
  double v = d.gamma;
  for (Eigen::Index i = 0; i < p.m; ++i) {
    v += d.mu_lin(i) * p.b(i) + d.mu_quad(i) * p.b(i) * p.b(i);
  }
  return v;
}

/// Gradient of the dual objective in DualPoint coordinate order:
/// (b, b^2, 0, 1).
inline Eigen::VectorXd dual_objective_gradient(const Mbqp& p) {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(p.dual_dim());
  g.segment(0, p.m) = p.b;
  g.segment(p.m, p.m) = p.b.cwiseProduct(p.b);
  g(g.size() - 1) = 1.0;
  return g;
}

/// Maps a feasible point of the homogenized dual into one of the
/// inhomogeneous dual with the same constraint matrix and objective value:
///   mu_lin_i = -2 b_i mu_i,  mu_quad_i = mu_i,
///   gamma    = gamma_hom + sum_i b_i^2 mu_i.
inline DualPoint lift_hom_to_inhom(const Mbqp& p, const HomDualPoint& h) {
  detail::check_dims(p, h);
  DualPoint d;
  d.mu_lin = (-2.0 * p.b.array() * h.mu.array()).matrix();
  d.mu_quad = h.mu;
  d.lam = h.lam;
  d.gamma = h.gamma + (p.b.array().square() * h.mu.array()).sum();
  return d;
}

}  // namespace copcut

#endif  // COPCUT_MBQP_HPP
