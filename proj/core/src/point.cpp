#include "anchorfp/point.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace anchorfp {

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) {
    throw std::invalid_argument("Point: dimension must be at least 1");
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("Point: coordinates must be finite");
    }
  }
}

Point Point::zeros(int dim) { return constant(dim, 0.0); }

Point Point::constant(int dim, double value) {
  if (dim < 1) throw std::invalid_argument("Point: dimension must be at least 1");
  return Point(std::vector<double>(static_cast<std::size_t>(dim), value));
}

void require_same_dim(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(x.dim()) +
                                " vs " + std::to_string(y.dim()));
  }
}

double inner(const Point& x, const Point& y) {
  require_same_dim(x, y);
  double s = 0.0;
  for (int i = 0; i < x.dim(); ++i) s += x[i] * y[i];
  return s;
}

double norm(const Point& x) { return std::sqrt(inner(x, x)); }

double norm_squared(const Point& x) { return inner(x, x); }

double distance(const Point& x, const Point& y) { return norm(sub(x, y)); }

Point add(const Point& x, const Point& y) {
  require_same_dim(x, y);
  std::vector<double> c(static_cast<std::size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) c[static_cast<std::size_t>(i)] = x[i] + y[i];
  return Point(std::move(c));
}

Point sub(const Point& x, const Point& y) {
  require_same_dim(x, y);
  std::vector<double> c(static_cast<std::size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) c[static_cast<std::size_t>(i)] = x[i] - y[i];
  return Point(std::move(c));
}

Point scale(double s, const Point& x) {
  std::vector<double> c(static_cast<std::size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) c[static_cast<std::size_t>(i)] = s * x[i];
  return Point(std::move(c));
}

Point combine(double t, const Point& x, const Point& y) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("combine: weight must lie in [0, 1]");
  }
  require_same_dim(x, y);
  std::vector<double> c(static_cast<std::size_t>(x.dim()));
  const double u = 1.0 - t;
  for (int i = 0; i < x.dim(); ++i) c[static_cast<std::size_t>(i)] = t * x[i] + u * y[i];
  return Point(std::move(c));
}

double convex_identity_residual(double t, const Point& x, const Point& y) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("convex_identity_residual: t must lie in [0, 1]");
  }
  require_same_dim(x, y);
  const double lhs = norm_squared(combine(t, x, y));
  const double rhs = t * norm_squared(x) + (1.0 - t) * norm_squared(y) -
                     t * (1.0 - t) * norm_squared(sub(x, y));
  return lhs - rhs;
}

double cross_inequality_gap(const Point& x, const Point& y) {
  require_same_dim(x, y);
  const Point sum = add(x, y);
  const double lhs = norm_squared(sum);
  const double rhs = norm_squared(x) + 2.0 * inner(y, sum);
  return lhs - rhs;
}

}  // namespace anchorfp
