#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "anchorfp/convex_set.hpp"

using namespace anchorfp;

namespace {

Point random_point(Rng& rng, int dim, double spread) {
  std::vector<double> c(static_cast<std::size_t>(dim));
  for (auto& v : c) v = uniform_real(rng, -spread, spread);
  return Point(std::move(c));
}

std::vector<ConvexSet> sample_sets(int dim) {
  std::vector<ConvexSet> sets;
  sets.push_back(ConvexSet::ball(Point::zeros(dim), 1.5));
  sets.push_back(ConvexSet::box(Point::constant(dim, -0.5), Point::constant(dim, 1.0)));
  std::vector<double> n(static_cast<std::size_t>(dim), 1.0);
  n[0] = 2.0;
  sets.push_back(ConvexSet::halfspace(Point(n), 0.5));
  return sets;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ConvexSet::ball(Point::zeros(2), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ConvexSet::ball(Point::zeros(2), -1.0), std::invalid_argument);
  CHECK_THROWS_AS(ConvexSet::box(Point({0, 1}), Point({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(ConvexSet::halfspace(Point::zeros(3), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ConvexSet::whole_space(0), std::invalid_argument);
  // degenerate box faces are fine: singletons are boxes
  CHECK_NOTHROW(ConvexSet::box(Point::zeros(2), Point::zeros(2)));
}

TEST_CASE("contains") {
  CHECK(ConvexSet::ball(Point::zeros(2), 1.0).contains(Point({0.5, 0}), 0.0));
  // distance from (2,0) to the unit box is 1 > 0.5
  const auto box = ConvexSet::box(Point({0, 0}), Point({1, 1}));
  CHECK_FALSE(box.contains(Point({2, 0}), 0.5));
  CHECK(box.contains(Point({2, 0}), 1.0));
  CHECK(ConvexSet::halfspace(Point({1, 0}), 0.0).contains(Point({0, 0}), 0.0));
  CHECK(ConvexSet::whole_space(3).contains(Point({9, -9, 100}), 0.0));
  CHECK_THROWS_AS(box.contains(Point({1, 2, 3}), 0.0), std::invalid_argument);
}

TEST_CASE("closed-form projections") {
  CHECK(ConvexSet::ball(Point::zeros(2), 1.0).project(Point({2, 0})) == Point({1, 0}));
  CHECK(ConvexSet::box(Point({0, 0}), Point({1, 1})).project(Point({2, -1})) ==
        Point({1, 0}));
  CHECK(ConvexSet::halfspace(Point({0, 1}), 0.0).project(Point({3, 2})) == Point({3, 0}));
  CHECK(ConvexSet::whole_space(2).project(Point({3, 2})) == Point({3, 2}));
  // projecting the ball center is the center itself
  CHECK(ConvexSet::ball(Point({1, 1}), 2.0).project(Point({1, 1})) == Point({1, 1}));
}

TEST_CASE("projection is the bitwise identity on members") {
  Rng rng = make_rng(17);
  for (const auto& set : sample_sets(4)) {
    for (int i = 0; i < 100; ++i) {
      const Point y = set.sample(rng);
      CHECK(set.project(y) == y);
    }
  }
}

TEST_CASE("projection idempotence, optimality and firm nonexpansiveness") {
  Rng rng = make_rng(19);
  for (int dim : {2, 7}) {
    for (const auto& set : sample_sets(dim)) {
      for (int i = 0; i < 200; ++i) {
        const Point x = random_point(rng, dim, 4.0);
        const Point y = random_point(rng, dim, 4.0);
        const Point px = set.project(x);
        const Point py = set.project(y);

        CHECK(distance(set.project(px), px) <= 1e-12 * (1.0 + norm(x)));
        CHECK(set.contains(px, 1e-12 * (1.0 + norm(x))));

        // distance optimality against an in-set witness
        const Point w = set.sample(rng);
        const double scale_opt = 1.0 + norm(x) + norm(w);
        CHECK(distance(x, px) <= distance(x, w) + 1e-12 * scale_opt);

        // ||Px - Py||^2 <= <x - y, Px - Py>
        const double lhs = norm_squared(sub(px, py));
        const double rhs = inner(sub(x, y), sub(px, py));
        const double scale_firm = 1.0 + norm_squared(x) + norm_squared(y);
        CHECK(lhs - rhs <= 1e-10 * scale_firm);
      }
    }
  }
}

TEST_CASE("samplers stay inside their sets") {
  Rng rng = make_rng(23);
  for (int dim : {1, 2, 6}) {
    for (const auto& set : sample_sets(dim)) {
      for (int i = 0; i < 300; ++i) {
        const Point s = set.sample(rng);
        CHECK(set.contains(s, 1e-9 * (1.0 + norm(s))));
      }
    }
  }
  // the degenerate box samples its single point
  const auto singleton = ConvexSet::box(Point({2, 3}), Point({2, 3}));
  CHECK(singleton.sample(rng) == Point({2, 3}));
  CHECK_THROWS_AS(ConvexSet::whole_space(2).sample(rng), std::invalid_argument);
}

TEST_CASE("projection characterization <x - z, y - z> <= 0") {
  Rng rng = make_rng(29);

  // interior point: z = x, every term is exactly 0
  const auto ball = ConvexSet::ball(Point::zeros(2), 1.0);
  CHECK(projection_characterization_max(ball, Point({0.2, 0.1}), 100, rng) == 0.0);

  const auto box = ConvexSet::box(Point({0, 0}), Point({1, 1}));
  CHECK(projection_characterization_max(box, Point({2, 2}), 1000, rng) <= 1e-10);

  const auto half = ConvexSet::halfspace(Point({1, 0}), 0.0);
  CHECK(projection_characterization_max(half, Point({1, 1}), 1000, rng) <= 1e-10);

  CHECK_THROWS_AS(
      projection_characterization_max(ConvexSet::whole_space(2), Point({1, 1}), 10, rng),
      std::invalid_argument);
}

TEST_CASE("box intersection") {
  const auto b1 = ConvexSet::box(Point({0, 0}), Point({1, 1}));
  const auto b2 = ConvexSet::box(Point({0.5, -1}), Point({2, 0.5}));
  const auto meet = box_intersection(b1, b2);
  REQUIRE(meet.has_value());
  CHECK(meet->lower() == Point({0.5, 0}));
  CHECK(meet->upper() == Point({1, 0.5}));

  const auto disjoint = ConvexSet::box(Point({5, 5}), Point({6, 6}));
  CHECK_FALSE(box_intersection(b1, disjoint).has_value());
  CHECK_FALSE(box_intersection(b1, ConvexSet::ball(Point::zeros(2), 1.0)).has_value());
}

TEST_CASE("known_intersection and sets_intersect") {
  const auto b1 = ConvexSet::box(Point({0, 0}), Point({1, 1}));
  const auto b2 = ConvexSet::box(Point({0.5, 0.5}), Point({1.5, 1.5}));
  const auto ball = ConvexSet::ball(Point::zeros(2), 1.0);
  const auto whole = ConvexSet::whole_space(2);

  std::string why;
  CHECK(known_intersection(b1, b2)->lower() == Point({0.5, 0.5}));
  CHECK(*known_intersection(whole, ball) == ball);
  CHECK(*known_intersection(ball, ball) == ball);
  CHECK_FALSE(known_intersection(ball, b1, &why).has_value());
  CHECK(!why.empty());

  CHECK(*sets_intersect(b1, b2));
  CHECK(*sets_intersect(ball, b1));
  CHECK_FALSE(*sets_intersect(ball, ConvexSet::ball(Point({5, 5}), 1.0)));
  const auto half = ConvexSet::halfspace(Point({1, 0}), 0.0);
  CHECK_FALSE(sets_intersect(half, b1).has_value());  // undecided combination
}
