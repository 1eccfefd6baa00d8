#include "anchorfp/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace anchorfp {

std::string to_string(OperatorClass c) {
  switch (c) {
    case OperatorClass::Nonexpansive:
      return "nonexpansive";
    case OperatorClass::Nonspreading:
      return "nonspreading";
    case OperatorClass::QuasiNonexpansive:
      return "quasi_nonexpansive";
    case OperatorClass::Generic:
      return "generic";
  }
  return "generic";
}

AveragedOperator::AveragedOperator(Operator base, double delta)
    : base_(std::move(base)), delta_(delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("AveragedOperator: delta must lie in (0, 1)");
  }
  if (!base_.apply) throw std::invalid_argument("AveragedOperator: base has no apply");
}

Point AveragedOperator::operator()(const Point& x) const {
  return combine(delta_, base_(x), x);
}

Operator AveragedOperator::to_operator() const {
  OperatorClass cls = OperatorClass::Generic;
  if (base_.claimed_class == OperatorClass::Nonexpansive) {
    cls = OperatorClass::Nonexpansive;  // averaging preserves nonexpansiveness
  } else if (base_.claimed_class == OperatorClass::Nonspreading ||
             base_.claimed_class == OperatorClass::QuasiNonexpansive) {
    cls = OperatorClass::QuasiNonexpansive;
  }
  AveragedOperator self = *this;
  return Operator{
      .apply = [self](const Point& x) { return self(x); },
      .domain = base_.domain,
      .claimed_class = cls,
      .known_fix = base_.known_fix,
      .name = "averaged(" + base_.name + ", " + std::to_string(delta_) + ")",
  };
}

AveragedOperator averaged(Operator base, double delta) {
  return AveragedOperator(std::move(base), delta);
}

Point blend(const AveragedOperator& aT, const AveragedOperator& aS, double beta,
            const Point& x) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("blend: beta must lie in [0, 1]");
  }
  if (aT.dim() != aS.dim()) throw std::invalid_argument("blend: dimension mismatch");
  return combine(beta, aT(x), aS(x));
}

Operator make_projection_operator(ConvexSet target, ConvexSet domain) {
  if (target.dim() != domain.dim()) {
    throw std::invalid_argument("make_projection_operator: dimension mismatch");
  }
  // spot-check target ⊆ domain so the projection is a self-map of the domain
  if (target.has_sampler()) {
    Rng rng = make_rng(0x50726f6au);
    for (int i = 0; i < 32; ++i) {
      const Point s = target.sample(rng);
      if (!domain.contains(s, 1e-9 * (1.0 + norm(s)))) {
        throw std::invalid_argument(
            "make_projection_operator: target set is not contained in the domain");
      }
    }
  }
  ConvexSet t = target;
  return Operator{
      .apply = [t](const Point& x) { return t.project(x); },
      .domain = std::move(domain),
      .claimed_class = OperatorClass::Nonspreading,
      .known_fix = std::move(target),
      .name = "projection(" + t.describe() + ")",
  };
}

Operator make_rotation_operator(double angle, ConvexSet domain) {
  const int d = domain.dim();
  if (domain.kind() != ConvexSet::Kind::Ball ||
      norm(domain.center()) > 1e-12 * (1.0 + domain.radius())) {
    throw std::invalid_argument(
        "make_rotation_operator: domain must be a ball centered at the origin");
  }
  if (d % 2 != 0) {
    throw std::invalid_argument(
        "make_rotation_operator: odd dimension has no block-rotation structure");
  }
  const Matrix rot = Matrix::rotation(d, angle);
  // angle == 0 degenerates to the identity, whose fixed set is the whole domain
  std::optional<ConvexSet> fix;
  if (angle == 0.0) {
    fix = domain;
  } else {
    fix = ConvexSet::box(Point::zeros(d), Point::zeros(d));
  }
  return Operator{
      .apply = [rot](const Point& x) { return rot.apply(x); },
      .domain = std::move(domain),
      .claimed_class = OperatorClass::Nonexpansive,
      .known_fix = std::move(fix),
      .name = "rotation(" + std::to_string(angle) + ")",
  };
}

Operator make_affine_operator(Matrix m, Point shift, ConvexSet domain) {
  if (m.rows() != domain.dim() || m.cols() != domain.dim() || shift.dim() != domain.dim()) {
    throw std::invalid_argument("make_affine_operator: dimension mismatch");
  }
  ConvexSet dom = domain;
  return Operator{
      .apply =
          [m, shift, dom](const Point& x) { return dom.project(add(m.apply(x), shift)); },
      .domain = std::move(domain),
      .claimed_class = OperatorClass::Generic,
      .known_fix = std::nullopt,
      .name = "affine",
  };
}

Operator make_identity_operator(ConvexSet domain) {
  ConvexSet fix = domain;
  return Operator{
      .apply = [](const Point& x) { return x; },
      .domain = std::move(domain),
      .claimed_class = OperatorClass::Nonexpansive,
      .known_fix = std::move(fix),
      .name = "identity",
  };
}

double max_selfmap_escape(const Operator& op, std::int64_t n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("max_selfmap_escape: need n_samples >= 1");
  Rng rng = make_rng(seed);
  double worst = 0.0;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const Point x = op.domain.sample(rng);
    worst = std::max(worst, op.domain.distance(op(x)));
  }
  return worst;
}

double max_fixed_point_drift(const Operator& op, std::int64_t n_samples, std::uint64_t seed) {
  if (!op.known_fix) {
    throw std::invalid_argument("max_fixed_point_drift: operator has no known fixed set");
  }
  if (n_samples < 1) throw std::invalid_argument("max_fixed_point_drift: need n_samples >= 1");
  Rng rng = make_rng(seed);
  double worst = 0.0;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const Point z = op.known_fix->sample(rng);
    worst = std::max(worst, distance(op(z), z));
  }
  return worst;
}

}  // namespace anchorfp
