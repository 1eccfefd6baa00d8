#pragma once

#include <cstdint>
#include <vector>

namespace anchorfp {

/// Element of R^d. Coordinates are checked to be finite on construction and
/// the dimension is fixed for the lifetime of the value; every binary
/// operation rejects dimension mismatches.
class Point {
 public:
  explicit Point(std::vector<double> coords);

  static Point zeros(int dim);
  static Point constant(int dim, double value);

  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& coords() const { return coords_; }

  bool operator==(const Point&) const = default;

 private:
  std::vector<double> coords_;
};

void require_same_dim(const Point& x, const Point& y);

/// Euclidean inner product sum_i x_i y_i.
double inner(const Point& x, const Point& y);

/// Induced norm sqrt(inner(x, x)).
double norm(const Point& x);
double norm_squared(const Point& x);
double distance(const Point& x, const Point& y);

Point add(const Point& x, const Point& y);
Point sub(const Point& x, const Point& y);
Point scale(double s, const Point& x);

/// Convex combination t*x + (1-t)*y. Requires t in [0, 1].
Point combine(double t, const Point& x, const Point& y);

/// Signed residual LHS - RHS of
///   ||t x + (1-t) y||^2 = t ||x||^2 + (1-t) ||y||^2 - t (1-t) ||x-y||^2,
/// which is zero up to floating-point rounding for every t in [0, 1].
double convex_identity_residual(double t, const Point& x, const Point& y);

/// Signed gap LHS - RHS of  ||x+y||^2 <= ||x||^2 + 2 <y, x+y>.
/// Expanding both sides shows the gap equals -||y||^2, so it is never
/// positive beyond rounding noise.
double cross_inequality_gap(const Point& x, const Point& y);

}  // namespace anchorfp
