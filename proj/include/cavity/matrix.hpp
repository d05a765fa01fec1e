#pragma once

#include <cstddef>
#include <vector>

namespace cavity {

/// Dense row-major matrix of doubles. Just enough linear algebra plumbing
/// for the collocation solver; no view/expression machinery.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  double* row(int i) { return data_.data() + static_cast<std::size_t>(i) * cols_; }
  const double* row(int i) const { return data_.data() + static_cast<std::size_t>(i) * cols_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

inline double max_asymmetry(const Matrix& a) {
  double worst = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j) {
      double d = a(i, j) - a(j, i);
      if (d < 0) d = -d;
      if (d > worst) worst = d;
    }
  return worst;
}

}  // namespace cavity
