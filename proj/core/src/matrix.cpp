#include "anchorfp/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace anchorfp {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("Matrix: bad shape");
  a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0);
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Matrix Matrix::scaling(int n, double s) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = s;
  return m;
}

Matrix Matrix::diagonal(std::vector<double> entries) {
  const int n = static_cast<int>(entries.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = entries[static_cast<std::size_t>(i)];
  return m;
}

Matrix Matrix::rotation(int dim, double angle) {
  if (dim < 2 || dim % 2 != 0) {
    throw std::invalid_argument("Matrix::rotation: dimension must be even");
  }
  Matrix m(dim, dim);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  for (int b = 0; b < dim; b += 2) {
    m.at(b, b) = c;
    m.at(b, b + 1) = -s;
    m.at(b + 1, b) = s;
    m.at(b + 1, b + 1) = c;
  }
  return m;
}

Point Matrix::apply(const Point& x) const {
  if (x.dim() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  std::vector<double> out(static_cast<std::size_t>(rows_), 0.0);
  for (int i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (int j = 0; j < cols_; ++j) s += at(i, j) * x[j];
    out[static_cast<std::size_t>(i)] = s;
  }
  return Point(std::move(out));
}

}  // namespace anchorfp
