#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "anchorfp/point.hpp"
#include "anchorfp/rng.hpp"

namespace anchorfp {

/// Closed convex subset of R^d with a closed-form metric projection.
///
/// Four variants are supported: Euclidean balls, axis-aligned boxes,
/// halfspaces {x : <normal, x> <= offset} and the whole space. Each variant
/// also carries a sampler producing points of the set, except the whole
/// space, which has no bounded sampler.
class ConvexSet {
 public:
  enum class Kind { Ball, Box, Halfspace, WholeSpace };

  static ConvexSet ball(Point center, double radius);
  /// Box [lower, upper]; degenerate faces (lower_i == upper_i) are allowed,
  /// so singletons are representable.
  static ConvexSet box(Point lower, Point upper);
  static ConvexSet halfspace(Point normal, double offset);
  static ConvexSet whole_space(int dim);

  Kind kind() const;
  int dim() const;
  std::string describe() const;

  /// True iff x is within Euclidean distance tol of the set.
  bool contains(const Point& x, double tol) const;

  /// Nearest point of the set. Exactly the identity (bitwise) on members.
  Point project(const Point& x) const;

  double distance(const Point& x) const;

  bool has_sampler() const;
  /// Uniform-ish sample of the set. Ball: uniform in volume; box:
  /// componentwise uniform; halfspace: uniform over a feasible box touching
  /// the boundary. Throws for the whole space.
  Point sample(Rng& rng) const;

  // variant parameter accessors; throw when the kind does not match
  const Point& center() const;
  double radius() const;
  const Point& lower() const;
  const Point& upper() const;
  const Point& normal() const;
  double offset() const;

  bool operator==(const ConvexSet& other) const;

 private:
  struct BallData {
    Point center;
    double radius;
    bool operator==(const BallData&) const = default;
  };
  struct BoxData {
    Point lower, upper;
    bool operator==(const BoxData&) const = default;
  };
  struct HalfspaceData {
    Point normal;
    double offset;
    double normal_norm;     // cached ||normal||
    double normal_norm_sq;  // cached ||normal||^2
    bool operator==(const HalfspaceData& o) const {
      return normal == o.normal && offset == o.offset;
    }
  };
  struct WholeSpaceData {
    int dim;
    bool operator==(const WholeSpaceData&) const = default;
  };

  using Data = std::variant<BallData, BoxData, HalfspaceData, WholeSpaceData>;
  explicit ConvexSet(Data data) : data_(std::move(data)) {}

  Data data_;
};

/// Intersection of two boxes as a box; nullopt when either argument is not a
/// box or the intersection is empty.
std::optional<ConvexSet> box_intersection(const ConvexSet& a, const ConvexSet& b);

/// Exact intersection for the representable combinations (equal sets, whole
/// space with anything, box with box). Otherwise nullopt with a reason in
/// *why when provided.
std::optional<ConvexSet> known_intersection(const ConvexSet& a, const ConvexSet& b,
                                            std::string* why = nullptr);

/// Decides nonemptiness of the intersection where cheap (equal sets, whole
/// space, box/box, ball/ball, ball/box); nullopt when undecided.
std::optional<bool> sets_intersect(const ConvexSet& a, const ConvexSet& b);

/// With z = project(set, x), returns max over n_samples sampled y in the set
/// of <x - z, y - z>. The projection characterization says this is <= 0 for
/// every y of the set.
double projection_characterization_max(const ConvexSet& set, const Point& x,
                                       std::int64_t n_samples, Rng& rng);

}  // namespace anchorfp
