#pragma once

#include <vector>

#include "anchorfp/point.hpp"

namespace anchorfp {

/// Small dense row-major matrix, just enough for the affine and rotation
/// example operators.
class Matrix {
 public:
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  static Matrix scaling(int n, double s);
  static Matrix diagonal(std::vector<double> entries);
  /// Block-diagonal planar rotation by `angle` on consecutive coordinate
  /// pairs. Requires even dimension.
  static Matrix rotation(int dim, double angle);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double at(int i, int j) const { return a_[idx(i, j)]; }
  double& at(int i, int j) { return a_[idx(i, j)]; }

  Point apply(const Point& x) const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_;
  int cols_;
  std::vector<double> a_;
};

}  // namespace anchorfp
