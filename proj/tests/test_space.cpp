#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "anchorfp/point.hpp"
#include "anchorfp/rng.hpp"

using namespace anchorfp;

namespace {

Point random_point(Rng& rng, int dim, double spread) {
  std::vector<double> c(static_cast<std::size_t>(dim));
  for (auto& v : c) v = uniform_real(rng, -spread, spread);
  return Point(std::move(c));
}

}  // namespace

TEST_CASE("point construction rejects bad input") {
  CHECK_THROWS_AS(Point({1.0, std::numeric_limits<double>::quiet_NaN()}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Point({std::numeric_limits<double>::infinity()}), std::invalid_argument);
  CHECK_THROWS_AS(Point(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(Point::zeros(0), std::invalid_argument);
}

TEST_CASE("inner product") {
  CHECK(inner(Point({1, 0}), Point({0, 1})) == 0.0);
  CHECK(inner(Point({2, 3}), Point({2, 3})) == 13.0);
  CHECK(inner(Point({1, 2, 3}), Point({4, 5, 6})) == 32.0);  // hand dot product
  CHECK_THROWS_AS(inner(Point({1, 2}), Point({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("inner product is symmetric and linear in the first argument") {
  Rng rng = make_rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Point x = random_point(rng, 6, 5.0);
    const Point y = random_point(rng, 6, 5.0);
    const Point z = random_point(rng, 6, 5.0);
    const double a = uniform_real(rng, -3.0, 3.0);
    const double tol_scale =
        1.0 + norm(x) * norm(y) + norm(z) * norm(y) + std::abs(a) * norm(x) * norm(y);
    CHECK(std::abs(inner(x, y) - inner(y, x)) <= 1e-12 * tol_scale);
    const double lhs = inner(add(scale(a, x), z), y);
    const double rhs = a * inner(x, y) + inner(z, y);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * tol_scale);
  }
}

TEST_CASE("norm") {
  CHECK(norm(Point({0, 0, 0})) == 0.0);
  CHECK(norm(Point({3, 4})) == 5.0);
  CHECK(norm(Point({1, 1, 1, 1})) == 2.0);
  CHECK(norm(Point({-2, 0})) == 2.0);
}

TEST_CASE("combine") {
  CHECK(combine(0.5, Point({2, 0}), Point({0, 2})) == Point({1, 1}));
  const Point x({1, 7});
  const Point y({-3, 2});
  CHECK(combine(1.0, x, y) == x);
  CHECK(combine(0.0, x, y) == y);
  CHECK_THROWS_AS(combine(1.5, x, y), std::invalid_argument);
  CHECK_THROWS_AS(combine(-0.1, x, y), std::invalid_argument);
  CHECK_THROWS_AS(combine(0.5, x, Point({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("convex combination identity") {
  CHECK(std::abs(convex_identity_residual(0.5, Point({1, 0}), Point({0, 1}))) <= 1e-12);
  CHECK(convex_identity_residual(0.0, Point({4, -2}), Point({1, 9})) == 0.0);

  Rng rng = make_rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Point x = random_point(rng, 10, 10.0);
    const Point y = random_point(rng, 10, 10.0);
    const double t = uniform_real(rng, 0.0, 1.0);
    const double scale = 1.0 + norm_squared(x) + norm_squared(y);
    CHECK(std::abs(convex_identity_residual(t, x, y)) <= 1e-10 * scale);
  }
  CHECK_THROWS_AS(convex_identity_residual(1.2, Point({1}), Point({2})),
                  std::invalid_argument);
}

TEST_CASE("cross-term inequality") {
  const Point x({1, 0});
  const Point zero = Point::zeros(2);
  CHECK(cross_inequality_gap(x, zero) == 0.0);
  // ||x+y||^2 = 2 against 1 + 2<y, x+y> = 3
  CHECK(cross_inequality_gap(Point({1, 0}), Point({0, 1})) == doctest::Approx(-1.0));

  Rng rng = make_rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const Point x2 = random_point(rng, 5, 8.0);
    const Point y2 = random_point(rng, 5, 8.0);
    const double scale = 1.0 + norm_squared(x2) + norm_squared(y2);
    const double gap = cross_inequality_gap(x2, y2);
    CHECK(gap <= 1e-10 * scale);
    // the gap is exactly -||y||^2 up to rounding
    CHECK(std::abs(gap + norm_squared(y2)) <= 1e-10 * scale);
  }
}
