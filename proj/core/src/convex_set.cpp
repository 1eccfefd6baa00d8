#include "anchorfp/convex_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace anchorfp {

namespace {

double l1_norm(const Point& p) {
  double s = 0.0;
  for (int i = 0; i < p.dim(); ++i) s += std::abs(p[i]);
  return s;
}

}  // namespace

ConvexSet ConvexSet::ball(Point center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("ConvexSet::ball: radius must be positive");
  }
  return ConvexSet(BallData{std::move(center), radius});
}

ConvexSet ConvexSet::box(Point lower, Point upper) {
  require_same_dim(lower, upper);
  for (int i = 0; i < lower.dim(); ++i) {
    if (!(lower[i] <= upper[i])) {
      throw std::invalid_argument("ConvexSet::box: needs lower <= upper componentwise");
    }
  }
  return ConvexSet(BoxData{std::move(lower), std::move(upper)});
}

ConvexSet ConvexSet::halfspace(Point normal, double offset) {
  const double nn = norm(normal);
  if (!(nn > 0.0)) {
    throw std::invalid_argument("ConvexSet::halfspace: normal must be nonzero");
  }
  if (!std::isfinite(offset)) {
    throw std::invalid_argument("ConvexSet::halfspace: offset must be finite");
  }
  return ConvexSet(HalfspaceData{std::move(normal), offset, nn, nn * nn});
}

ConvexSet ConvexSet::whole_space(int dim) {
  if (dim < 1) throw std::invalid_argument("ConvexSet::whole_space: dimension must be >= 1");
  return ConvexSet(WholeSpaceData{dim});
}

ConvexSet::Kind ConvexSet::kind() const {
  if (std::holds_alternative<BallData>(data_)) return Kind::Ball;
  if (std::holds_alternative<BoxData>(data_)) return Kind::Box;
  if (std::holds_alternative<HalfspaceData>(data_)) return Kind::Halfspace;
  return Kind::WholeSpace;
}

int ConvexSet::dim() const {
  switch (kind()) {
    case Kind::Ball:
      return std::get<BallData>(data_).center.dim();
    case Kind::Box:
      return std::get<BoxData>(data_).lower.dim();
    case Kind::Halfspace:
      return std::get<HalfspaceData>(data_).normal.dim();
    case Kind::WholeSpace:
      return std::get<WholeSpaceData>(data_).dim;
  }
  return 0;
}

std::string ConvexSet::describe() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::Ball:
      os << "ball(r=" << radius() << ", d=" << dim() << ")";
      break;
    case Kind::Box:
      os << "box(d=" << dim() << ")";
      break;
    case Kind::Halfspace:
      os << "halfspace(b=" << offset() << ", d=" << dim() << ")";
      break;
    case Kind::WholeSpace:
      os << "whole_space(d=" << dim() << ")";
      break;
  }
  return os.str();
}

bool ConvexSet::contains(const Point& x, double tol) const {
  if (tol < 0.0) throw std::invalid_argument("ConvexSet::contains: tol must be >= 0");
  return distance(x) <= tol;
}

Point ConvexSet::project(const Point& x) const {
  if (x.dim() != dim()) throw std::invalid_argument("ConvexSet::project: dimension mismatch");
  switch (kind()) {
    case Kind::Ball: {
      const auto& b = std::get<BallData>(data_);
      const Point d = sub(x, b.center);
      const double dist = norm(d);
      if (dist <= b.radius) return x;
      return add(b.center, scale(b.radius / dist, d));
    }
    case Kind::Box: {
      const auto& b = std::get<BoxData>(data_);
      std::vector<double> c(static_cast<std::size_t>(x.dim()));
      for (int i = 0; i < x.dim(); ++i) {
        c[static_cast<std::size_t>(i)] = std::clamp(x[i], b.lower[i], b.upper[i]);
      }
      return Point(std::move(c));
    }
    case Kind::Halfspace: {
      const auto& h = std::get<HalfspaceData>(data_);
      const double slack = inner(h.normal, x) - h.offset;
      if (slack <= 0.0) return x;
      return sub(x, scale(slack / h.normal_norm_sq, h.normal));
    }
    case Kind::WholeSpace:
      return x;
  }
  throw std::logic_error("unreachable");
}

double ConvexSet::distance(const Point& x) const {
  if (x.dim() != dim()) throw std::invalid_argument("ConvexSet::distance: dimension mismatch");
  switch (kind()) {
    case Kind::Ball: {
      const auto& b = std::get<BallData>(data_);
      return std::max(0.0, anchorfp::distance(x, b.center) - b.radius);
    }
    case Kind::Halfspace: {
      const auto& h = std::get<HalfspaceData>(data_);
      return std::max(0.0, (inner(h.normal, x) - h.offset) / h.normal_norm);
    }
    case Kind::Box:
      return anchorfp::distance(x, project(x));
    case Kind::WholeSpace:
      return 0.0;
  }
  throw std::logic_error("unreachable");
}

bool ConvexSet::has_sampler() const { return kind() != Kind::WholeSpace; }

Point ConvexSet::sample(Rng& rng) const {
  switch (kind()) {
    case Kind::Ball: {
      const auto& b = std::get<BallData>(data_);
      const int d = dim();
      std::vector<double> g(static_cast<std::size_t>(d));
      double gn = 0.0;
      do {
        for (int i = 0; i < d; ++i) g[static_cast<std::size_t>(i)] = standard_normal(rng);
        gn = 0.0;
        for (double v : g) gn += v * v;
        gn = std::sqrt(gn);
      } while (gn == 0.0);
      // uniform in volume: radius scaled by U^(1/d)
      const double r = b.radius * std::pow(uniform_real(rng, 0.0, 1.0), 1.0 / d);
      std::vector<double> c(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = b.center[i] + r * g[static_cast<std::size_t>(i)] / gn;
      }
      return Point(std::move(c));
    }
    case Kind::Box: {
      const auto& b = std::get<BoxData>(data_);
      std::vector<double> c(static_cast<std::size_t>(dim()));
      for (int i = 0; i < dim(); ++i) {
        c[static_cast<std::size_t>(i)] = uniform_real(rng, b.lower[i], b.upper[i]);
      }
      return Point(std::move(c));
    }
    case Kind::Halfspace: {
      // Sample a unit-halfwidth box shifted inward just far enough that its
      // worst corner still satisfies <a, x> <= b; the nearest face touches
      // the boundary hyperplane, so boundary-adjacent points are covered.
      const auto& h = std::get<HalfspaceData>(data_);
      const double half_width = 1.0;
      const Point boundary_anchor = scale(h.offset / h.normal_norm_sq, h.normal);
      const double shift = half_width * l1_norm(h.normal) / h.normal_norm;
      const Point center = sub(boundary_anchor, scale(shift / h.normal_norm, h.normal));
      std::vector<double> c(static_cast<std::size_t>(dim()));
      for (int i = 0; i < dim(); ++i) {
        c[static_cast<std::size_t>(i)] =
            uniform_real(rng, center[i] - half_width, center[i] + half_width);
      }
      return Point(std::move(c));
    }
    case Kind::WholeSpace:
      throw std::invalid_argument(
          "ConvexSet::sample: the whole space has no bounded sampler; "
          "use a ball or box domain instead");
  }
  throw std::logic_error("unreachable");
}

const Point& ConvexSet::center() const { return std::get<BallData>(data_).center; }
double ConvexSet::radius() const { return std::get<BallData>(data_).radius; }
const Point& ConvexSet::lower() const { return std::get<BoxData>(data_).lower; }
const Point& ConvexSet::upper() const { return std::get<BoxData>(data_).upper; }
const Point& ConvexSet::normal() const { return std::get<HalfspaceData>(data_).normal; }
double ConvexSet::offset() const { return std::get<HalfspaceData>(data_).offset; }

bool ConvexSet::operator==(const ConvexSet& other) const { return data_ == other.data_; }

std::optional<ConvexSet> box_intersection(const ConvexSet& a, const ConvexSet& b) {
  if (a.kind() != ConvexSet::Kind::Box || b.kind() != ConvexSet::Kind::Box) return std::nullopt;
  if (a.dim() != b.dim()) throw std::invalid_argument("box_intersection: dimension mismatch");
  std::vector<double> lo(static_cast<std::size_t>(a.dim()));
  std::vector<double> hi(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) {
    lo[static_cast<std::size_t>(i)] = std::max(a.lower()[i], b.lower()[i]);
    hi[static_cast<std::size_t>(i)] = std::min(a.upper()[i], b.upper()[i]);
    if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)]) return std::nullopt;
  }
  return ConvexSet::box(Point(std::move(lo)), Point(std::move(hi)));
}

std::optional<ConvexSet> known_intersection(const ConvexSet& a, const ConvexSet& b,
                                            std::string* why) {
  if (a.dim() != b.dim()) throw std::invalid_argument("known_intersection: dimension mismatch");
  if (a == b) return a;
  if (a.kind() == ConvexSet::Kind::WholeSpace) return b;
  if (b.kind() == ConvexSet::Kind::WholeSpace) return a;
  if (a.kind() == ConvexSet::Kind::Box && b.kind() == ConvexSet::Kind::Box) {
    auto ib = box_intersection(a, b);
    if (!ib && why) *why = "boxes do not intersect";
    return ib;
  }
  if (why) {
    *why = "intersection of " + a.describe() + " and " + b.describe() +
           " has no closed-form representation here";
  }
  return std::nullopt;
}

std::optional<bool> sets_intersect(const ConvexSet& a, const ConvexSet& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("sets_intersect: dimension mismatch");
  if (a == b) return true;
  using K = ConvexSet::Kind;
  if (a.kind() == K::WholeSpace || b.kind() == K::WholeSpace) return true;
  if (a.kind() == K::Box && b.kind() == K::Box) return box_intersection(a, b).has_value();
  if (a.kind() == K::Ball && b.kind() == K::Ball) {
    return distance(a.center(), b.center()) <= a.radius() + b.radius();
  }
  if (a.kind() == K::Ball && b.kind() == K::Box) return b.distance(a.center()) <= a.radius();
  if (a.kind() == K::Box && b.kind() == K::Ball) return a.distance(b.center()) <= b.radius();
  return std::nullopt;
}

double projection_characterization_max(const ConvexSet& set, const Point& x,
                                       std::int64_t n_samples, Rng& rng) {
  if (n_samples < 1) {
    throw std::invalid_argument("projection_characterization_max: need n_samples >= 1");
  }
  if (!set.has_sampler()) {
    throw std::invalid_argument(
        "projection_characterization_max: no sampler for this set variant");
  }
  const Point z = set.project(x);
  const Point xz = sub(x, z);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const Point y = set.sample(rng);
    worst = std::max(worst, inner(xz, sub(y, z)));
  }
  return worst;
}

}  // namespace anchorfp
