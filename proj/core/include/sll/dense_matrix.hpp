#ifndef SLL_DENSE_MATRIX_HPP
#define SLL_DENSE_MATRIX_HPP

#include <Eigen/Dense>

#include "sll/errors.hpp"

namespace sll {

/// Row-major dense storage, matching the on-disk model layout.
using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Dense matrix with checked construction: every entry must be finite.
/// Math goes through mat(), which exposes the underlying Eigen matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(Eigen::Index rows, Eigen::Index cols)
      : m_(RowMajorMatrix::Zero(rows, cols)) {}
  explicit DenseMatrix(const Eigen::Ref<const Eigen::MatrixXd>& m) : m_(m) {
    require_finite(m_, "DenseMatrix");
  }
  explicit DenseMatrix(RowMajorMatrix m) : m_(std::move(m)) {
    require_finite(m_, "DenseMatrix");
  }

  Eigen::Index rows() const { return m_.rows(); }
  Eigen::Index cols() const { return m_.cols(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  double& operator()(Eigen::Index i, Eigen::Index j) { return m_(i, j); }

  RowMajorMatrix& mat() { return m_; }
  const RowMajorMatrix& mat() const { return m_; }
  const double* data() const { return m_.data(); }
  double* data() { return m_.data(); }

  static void require_finite(const Eigen::Ref<const RowMajorMatrix>& m,
                             const char* what) {
    if (!m.allFinite())
      throw Error(std::string(what) + ": non-finite entry rejected");
  }

 private:
  RowMajorMatrix m_;
};

}  // namespace sll

#endif  // SLL_DENSE_MATRIX_HPP
