#ifndef COPCUT_ELLIPSOID_HPP
#define COPCUT_ELLIPSOID_HPP

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace copcut {

/// Ellipsoid { s | (s - x)^T P^{-1} (s - x) <= 1 } with positive-definite
/// shape matrix P.
struct Ellipsoid {
  Eigen::VectorXd center;
  Eigen::MatrixXd shape;

  Eigen::Index dim() const { return center.size(); }

  static Ellipsoid ball(Eigen::Index m, double radius) {
    if (m < 1 || !(radius > 0.0)) {
      throw std::invalid_argument("Ellipsoid::ball: bad dimension or radius");
    }
    Ellipsoid e;
    e.center = Eigen::VectorXd::Zero(m);
    e.shape = radius * radius * Eigen::MatrixXd::Identity(m, m);
    return e;
  }
};

/// pi^{m/2} / Gamma(m/2 + 1) * sqrt(det P)
inline double ellipsoid_volume(const Ellipsoid& e) {
  const Eigen::Index m = e.dim();
  Eigen::LLT<Eigen::MatrixXd> llt(e.shape);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("ellipsoid_volume: shape matrix not positive definite");
  }
  // sqrt(det P) = prod of Cholesky diagonal entries
  double sqrt_det = llt.matrixL().determinant();
  const double md = static_cast<double>(m);
  const double unit_ball =
      std::pow(M_PI, md / 2.0) / std::tgamma(md / 2.0 + 1.0);
  return unit_ball * sqrt_det;
}

/// log(volume); usable when the volume itself under/overflows.
inline double ellipsoid_log_volume(const Ellipsoid& e) {
  const Eigen::Index m = e.dim();
  Eigen::LLT<Eigen::MatrixXd> llt(e.shape);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("ellipsoid_log_volume: shape matrix not positive definite");
  }
  double log_sqrt_det = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    log_sqrt_det += std::log(llt.matrixL()(i, i));
  }
  const double md = static_cast<double>(m);
  return (md / 2.0) * std::log(M_PI) - std::lgamma(md / 2.0 + 1.0) +
         log_sqrt_det;
}

/// Minimum-volume ellipsoid containing the half-ellipsoid
/// { s in E | a^T s <= a^T x }:
///   x' = x - P a / ((m+1) sqrt(a^T P a))
///   P' = m^2/(m^2-1) (P - 2 P a a^T P / ((m+1) a^T P a))
/// Undefined for m = 1 (callers use interval bisection there).
inline Ellipsoid ellipsoid_update(const Ellipsoid& e, const Eigen::VectorXd& a) {
  const Eigen::Index m = e.dim();
  if (m < 2) {
    throw std::invalid_argument("ellipsoid_update: requires dimension >= 2");
  }
  if (a.size() != m) {
    throw std::invalid_argument("ellipsoid_update: cut normal length mismatch");
  }
  const Eigen::VectorXd Pa = e.shape * a;
  const double aPa = a.dot(Pa);
  if (!(aPa > 0.0)) {
    throw std::invalid_argument("ellipsoid_update: zero or degenerate cut normal");
  }
  const double md = static_cast<double>(m);
  Ellipsoid out;
  out.center = e.center - Pa / ((md + 1.0) * std::sqrt(aPa));
  Eigen::MatrixXd P =
      (md * md / (md * md - 1.0)) *
      (e.shape - (2.0 / ((md + 1.0) * aPa)) * (Pa * Pa.transpose()));
  out.shape = 0.5 * (P + P.transpose());  // keep exactly symmetric
  return out;
}

/// Exact per-step determinant ratio of the ellipsoid update:
/// (m^2/(m^2-1))^m * (m-1)/(m+1).
inline double ellipsoid_det_ratio(Eigen::Index m) {
  const double md = static_cast<double>(m);
  return std::pow(md * md / (md * md - 1.0), md) * (md - 1.0) / (md + 1.0);
}

enum class BisectionCut { OptimumAbove, OptimumBelow };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// 1-D counterpart of the ellipsoid update: shrink the interval to the
/// side of the test point the cut says the optimum lies on.
inline Interval bisection_update(Interval iv, BisectionCut cut, double test) {
  if (!(iv.lo <= test && test <= iv.hi)) {
    throw std::invalid_argument("bisection_update: test point outside interval");
  }
  if (cut == BisectionCut::OptimumAbove) {
    iv.lo = test;
  } else {
    iv.hi = test;
  }
  return iv;
}

}  // namespace copcut

#endif  // COPCUT_ELLIPSOID_HPP
