#ifndef COPCUT_MATRIX_HPP
#define COPCUT_MATRIX_HPP

#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

namespace copcut {

/// Dense real symmetric matrix. Inputs are symmetrized on construction,
/// so every instance satisfies entries(i,j) == entries(j,i) exactly.
class SymMatrix {
 public:
  SymMatrix() = default;

  explicit SymMatrix(Eigen::MatrixXd m) {
    if (m.rows() != m.cols()) {
      throw std::invalid_argument("SymMatrix: matrix must be square");
    }
    if (!m.allFinite()) {
      throw std::invalid_argument("SymMatrix: entries must be finite");
    }
    entries_ = 0.5 * (m + m.transpose()).eval();
  }

  static SymMatrix Zero(Eigen::Index n) {
    return SymMatrix(Eigen::MatrixXd::Zero(n, n));
  }

  static SymMatrix Identity(Eigen::Index n) {
    return SymMatrix(Eigen::MatrixXd::Identity(n, n));
  }

  Eigen::Index size() const { return entries_.rows(); }

  double operator()(Eigen::Index i, Eigen::Index j) const {
    return entries_(i, j);
  }

  const Eigen::MatrixXd& mat() const { return entries_; }

  /// Max absolute entry; the scale used when sizing discretizations.
  double max_abs() const {
    return entries_.size() == 0 ? 0.0 : entries_.cwiseAbs().maxCoeff();
  }

  /// z^T M z
  double quad_form(const Eigen::VectorXd& z) const {
    if (z.size() != entries_.rows()) {
      throw std::invalid_argument("SymMatrix::quad_form: length mismatch");
    }
    return z.dot(entries_ * z);
  }

 private:
  Eigen::MatrixXd entries_;
};

}  // namespace copcut

#endif  // COPCUT_MATRIX_HPP
