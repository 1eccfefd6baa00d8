#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "anchorfp/convex_set.hpp"
#include "anchorfp/matrix.hpp"

namespace anchorfp {

enum class OperatorClass { Nonexpansive, Nonspreading, QuasiNonexpansive, Generic };

std::string to_string(OperatorClass c);

/// Self-map of a closed convex domain. `claimed_class` records what the
/// constructor claims about the map; claims are checked by the sampling
/// certifiers, never assumed. `known_fix`, when present, is the exact
/// fixed-point set.
struct Operator {
  std::function<Point(const Point&)> apply;
  ConvexSet domain;
  OperatorClass claimed_class = OperatorClass::Generic;
  std::optional<ConvexSet> known_fix;
  std::string name;

  Point operator()(const Point& x) const { return apply(x); }
  int dim() const { return domain.dim(); }
};

/// (1-delta) I + delta T for delta in (0, 1). Fixed points coincide with the
/// base operator's, and the displacement scales exactly: x - A x = delta (x - T x).
class AveragedOperator {
 public:
  AveragedOperator(Operator base, double delta);

  Point operator()(const Point& x) const;

  const Operator& base() const { return base_; }
  double delta() const { return delta_; }
  const ConvexSet& domain() const { return base_.domain; }
  int dim() const { return base_.dim(); }
  const std::optional<ConvexSet>& known_fix() const { return base_.known_fix; }

  /// Packages the averaged map as a plain Operator (fixed set inherited).
  Operator to_operator() const;

 private:
  Operator base_;
  double delta_;
};

AveragedOperator averaged(Operator base, double delta);

/// beta * aT(x) + (1-beta) * aS(x) for beta in [0, 1].
Point blend(const AveragedOperator& aT, const AveragedOperator& aS, double beta,
            const Point& x);

/// Metric projection onto `target` viewed as an operator on `domain`.
/// Requires target to lie inside domain (spot-checked by sampling). The
/// fixed-point set is exactly the target.
Operator make_projection_operator(ConvexSet target, ConvexSet domain);

/// Planar (block) rotation about the origin on an origin-centered ball.
/// Even dimension only. For a nonzero angle the only fixed point is the
/// origin.
Operator make_rotation_operator(double angle, ConvexSet domain);

/// x -> project_domain(M x + c). The clip back onto the domain keeps the map
/// a self-map; composing with a projection preserves nonexpansiveness, so a
/// certified class of the unclipped map survives the clip.
Operator make_affine_operator(Matrix m, Point shift, ConvexSet domain);

Operator make_identity_operator(ConvexSet domain);

/// Max over sampled domain points of distance(domain, T x); positive values
/// beyond tolerance mean T is not a self-map.
double max_selfmap_escape(const Operator& op, std::int64_t n_samples, std::uint64_t seed);

/// Max over sampled known_fix points z of ||T z - z||. Throws when known_fix
/// is absent.
double max_fixed_point_drift(const Operator& op, std::int64_t n_samples, std::uint64_t seed);

}  // namespace anchorfp
