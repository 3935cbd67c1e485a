#ifndef COPCUT_QUBO_HPP
#define COPCUT_QUBO_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "copcut/matrix.hpp"

namespace copcut {

using BitVector = std::vector<std::uint8_t>;

/// Quadratic binary objective x^T C x + offset over x in {0,1}^n.
/// C is stored symmetric; diagonal entries double as linear terms
/// (x_i^2 == x_i). An unordered-pair coupling q x_i x_j is stored as
/// C(i,j) = C(j,i) = q/2 so the full bilinear form reproduces it.
struct Qubo {
  SymMatrix coeffs;
  double offset = 0.0;

  Eigen::Index n() const { return coeffs.size(); }
};

/// Ising objective z^T J z + h^T z + offset over spins z in {-1,+1}^n.
/// J has zero diagonal (constant z_i^2 terms are folded into the offset)
/// and the same full-bilinear-form summation convention as Qubo.
struct Ising {
  SymMatrix J;
  Eigen::VectorXd h;
  double offset = 0.0;

  Eigen::Index n() const { return J.size(); }
};

inline double qubo_energy(const Qubo& q, const BitVector& x) {
  if (static_cast<Eigen::Index>(x.size()) != q.n()) {
    throw std::invalid_argument("qubo_energy: length mismatch");
  }
  Eigen::VectorXd xv(q.n());
  for (Eigen::Index i = 0; i < q.n(); ++i) {
    xv(i) = static_cast<double>(x[i]);
  }
  return q.coeffs.quad_form(xv) + q.offset;
}

inline double ising_energy(const Ising& s, const std::vector<int>& z) {
  if (static_cast<Eigen::Index>(z.size()) != s.n()) {
    throw std::invalid_argument("ising_energy: length mismatch");
  }
  Eigen::VectorXd zv(s.n());
  for (Eigen::Index i = 0; i < s.n(); ++i) {
    if (z[i] != 1 && z[i] != -1) {
      throw std::invalid_argument("ising_energy: entries must be -1 or +1");
    }
    zv(i) = static_cast<double>(z[i]);
  }
  return s.J.quad_form(zv) + s.h.dot(zv) + s.offset;
}

/// Change of variables z = 2x - 1. Exact energy equivalence:
/// ising_energy(result, 2x - 1) == qubo_energy(q, x) for every x.
inline Ising qubo_to_ising(const Qubo& q) {
  const Eigen::Index n = q.n();
  const Eigen::MatrixXd& C = q.coeffs.mat();
  Eigen::MatrixXd J = 0.25 * C;
  double offset = q.offset;
  // z_i^2 = 1, so diagonal couplings are constants.
  offset += J.diagonal().sum();
  J.diagonal().setZero();
  Eigen::VectorXd h = 0.5 * C.rowwise().sum();
  offset += 0.25 * C.sum();
  Ising s;
  s.J = SymMatrix(J);
  s.h = h;
  s.offset = offset;
  return s;
}

struct BruteForceResult {
  double min_energy = 0.0;
  std::vector<BitVector> argmins;
};

constexpr int kBruteForceCap = 24;

/// Exhaustive minimization over {0,1}^n via Gray-code enumeration with
/// incremental energy updates. Returns every attaining assignment.
inline BruteForceResult brute_force_solve(const Qubo& q,
                                          int cap = kBruteForceCap) {
  const int n = static_cast<int>(q.n());
  if (n > cap) {
    throw std::invalid_argument("brute_force_solve: n exceeds size cap");
  }
  const Eigen::MatrixXd& C = q.coeffs.mat();

  BitVector x(n, 0);
  // field[i] = C(i,i) + 2 sum_{j != i} C(i,j) x_j; flipping bit i changes
  // the energy by (1 - 2 x_i) * field[i].
  Eigen::VectorXd field = C.diagonal();
  double energy = q.offset;

  BruteForceResult res;
  res.min_energy = energy;
  res.argmins.push_back(x);

  const std::uint64_t total = (n == 0) ? 1 : (std::uint64_t{1} << n);
  const double eq_tol = 1e-12;
  for (std::uint64_t g = 1; g < total; ++g) {
    // Gray code: bit to flip is the number of trailing zeros of g.
    int i = 0;
    while (((g >> i) & 1u) == 0) ++i;
    const double delta = (x[i] ? -1.0 : 1.0) * field[i];
    const double sign = x[i] ? -2.0 : 2.0;
    x[i] ^= 1u;
    energy += delta;
    field += sign * C.col(i);
    field(i) -= sign * C(i, i);  // own diagonal is not part of the field sum

    if (energy < res.min_energy - eq_tol) {
      res.min_energy = energy;
      res.argmins.clear();
      res.argmins.push_back(x);
    } else if (energy <= res.min_energy + eq_tol) {
      res.argmins.push_back(x);
    }
  }
  // Recompute exactly at the minimizer to shed accumulated rounding.
  res.min_energy = qubo_energy(q, res.argmins.front());
  return res;
}

}  // namespace copcut

#endif  // COPCUT_QUBO_HPP
