#include "anchorfp/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace anchorfp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_samples(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("certifier: need at least one sample");
}

double quad_scale(const Point& x, const Point& y, const Point& tx, const Point& ty) {
  return 1.0 + norm_squared(x) + norm_squared(y) + norm_squared(tx) + norm_squared(ty);
}

/// Tracks the worst violation together with the pair achieving it.
struct Worst {
  double violation = kNegInf;
  double scale = 1.0;
  std::optional<std::pair<Point, Point>> pair;

  void update(double v, double s, const Point& a, const Point& b) {
    scale = std::max(scale, s);
    if (v > violation) {
      violation = v;
      pair = std::make_pair(a, b);
    }
  }

  CertificateReport report(std::string id, std::int64_t samples) const {
    CertificateReport r;
    r.inequality_id = std::move(id);
    r.samples_tested = samples;
    r.max_violation = violation;
    r.scale = scale;
    r.worst_pair = pair;
    return r;
  }
};

}  // namespace

CertificateReport merge_reports(CertificateReport a, const CertificateReport& b) {
  if (a.inequality_id != b.inequality_id) {
    throw std::invalid_argument("merge_reports: mismatched inequality ids");
  }
  a.samples_tested += b.samples_tested;
  a.scale = std::max(a.scale, b.scale);
  if (b.max_violation > a.max_violation) {
    a.max_violation = b.max_violation;
    a.worst_pair = b.worst_pair;
  }
  if (b.estimated_coefficient &&
      (!a.estimated_coefficient || *b.estimated_coefficient < *a.estimated_coefficient)) {
    a.estimated_coefficient = b.estimated_coefficient;
  }
  a.applicable = a.applicable || b.applicable;
  return a;
}

CertificateReport certify_nonexpansive(const Operator& T, std::int64_t n_pairs,
                                       std::uint64_t seed) {
  require_samples(n_pairs);
  Rng rng = make_rng(seed);
  Worst w;
  for (std::int64_t i = 0; i < n_pairs; ++i) {
    const Point x = T.domain.sample(rng);
    const Point y = T.domain.sample(rng);
    const Point tx = T(x);
    const Point ty = T(y);
    const double violation = distance(tx, ty) - distance(x, y);
    const double s = 1.0 + distance(x, y) + distance(tx, ty);
    w.update(violation, s, x, y);
  }
  return w.report("nonexpansive", n_pairs);
}

NonspreadingCertificates certify_nonspreading(const Operator& S, std::int64_t n_pairs,
                                              std::uint64_t seed) {
  require_samples(n_pairs);
  Rng rng = make_rng(seed);
  Worst def, chr;
  double gap = 0.0, gap_scale = 1.0;
  for (std::int64_t i = 0; i < n_pairs; ++i) {
    const Point x = S.domain.sample(rng);
    const Point y = S.domain.sample(rng);
    const Point sx = S(x);
    const Point sy = S(y);
    const double s = quad_scale(x, y, sx, sy);

    const double v_def =
        2.0 * norm_squared(sub(sx, sy)) - norm_squared(sub(sx, y)) - norm_squared(sub(x, sy));
    const double v_chr = norm_squared(sub(sx, sy)) - norm_squared(sub(x, y)) -
                         2.0 * inner(sub(x, sx), sub(y, sy));
    def.update(v_def, s, x, y);
    chr.update(v_chr, s, x, y);
    gap = std::max(gap, std::abs(v_def - v_chr));
    gap_scale = std::max(gap_scale, s);
  }
  NonspreadingCertificates out;
  out.definition = def.report("nonspreading_definition", n_pairs);
  out.characterization = chr.report("nonspreading_characterization", n_pairs);
  out.max_equivalence_gap = gap;
  out.gap_scale = gap_scale;
  return out;
}

CertificateReport certify_quasi_nonexpansive(const Operator& T, std::int64_t n_points,
                                             std::uint64_t seed) {
  require_samples(n_points);
  if (!T.known_fix) {
    throw std::invalid_argument("certify_quasi_nonexpansive: operator has no known fixed set");
  }
  Rng rng = make_rng(seed);
  Worst w;
  for (std::int64_t i = 0; i < n_points; ++i) {
    const Point x = T.domain.sample(rng);
    const Point p = T.known_fix->sample(rng);
    const Point tx = T(x);
    const double violation = distance(tx, p) - distance(x, p);
    const double s = 1.0 + distance(x, p) + distance(tx, p);
    w.update(violation, s, x, p);
  }
  return w.report("quasi_nonexpansive", n_points);
}

CertificateReport certify_inverse_strongly_monotone(const Operator& T,
                                                    std::int64_t n_pairs,
                                                    std::uint64_t seed) {
  require_samples(n_pairs);
  Rng rng = make_rng(seed);
  Worst w;
  for (std::int64_t i = 0; i < n_pairs; ++i) {
    const Point x = T.domain.sample(rng);
    const Point y = T.domain.sample(rng);
    const Point dx = sub(x, T(x));
    const Point dy = sub(y, T(y));
    const Point dd = sub(dx, dy);
    const double violation = 0.5 * norm_squared(dd) - inner(sub(x, y), dd);
    const double s = 1.0 + norm_squared(x) + norm_squared(y) + norm_squared(dx) + norm_squared(dy);
    w.update(violation, s, x, y);
  }
  return w.report("inverse_strongly_monotone", n_pairs);
}

CertificateReport certify_displacement_inequality(const Operator& S, std::int64_t n_pairs,
                                                  std::uint64_t seed) {
  require_samples(n_pairs);
  Rng rng = make_rng(seed);
  Worst w;
  for (std::int64_t i = 0; i < n_pairs; ++i) {
    const Point x = S.domain.sample(rng);
    const Point y = S.domain.sample(rng);
    const Point dx = sub(x, S(x));
    const Point dy = sub(y, S(y));
    const Point dd = sub(dx, dy);
    const double violation = norm_squared(dd) - inner(sub(x, y), dd) -
                             0.5 * (norm_squared(dx) + norm_squared(dy));
    const double s = 1.0 + norm_squared(x) + norm_squared(y) + norm_squared(dx) + norm_squared(dy);
    w.update(violation, s, x, y);
  }
  return w.report("displacement_bound", n_pairs);
}

CertificateReport certify_quasi_firmly_pairwise(const AveragedOperator& A,
                                                std::int64_t n_pairs, std::uint64_t seed) {
  require_samples(n_pairs);
  Rng rng = make_rng(seed);
  const double delta = A.delta();
  Worst w;
  for (std::int64_t i = 0; i < n_pairs; ++i) {
    const Point x = A.domain().sample(rng);
    const Point y = A.domain().sample(rng);
    const Point ax = A(x);
    const Point ay = A(y);
    const Point dx = sub(x, ax);
    const Point dy = sub(y, ay);
    const double violation = norm_squared(sub(ax, ay)) - norm_squared(sub(x, y)) -
                             (2.0 / delta) * inner(dx, dy) +
                             (1.0 - delta) * norm_squared(sub(dx, dy));
    const double s = quad_scale(x, y, ax, ay) / std::min(delta, 1.0 - delta);
    w.update(violation, s, x, y);
  }
  return w.report("quasi_firmly_pairwise", n_pairs);
}

QuasiFirmlyCertificates certify_quasi_firmly(const AveragedOperator& A,
                                             std::int64_t n_points, std::uint64_t seed) {
  require_samples(n_points);
  if (!A.known_fix()) {
    throw std::invalid_argument(
        "certify_quasi_firmly: base operator has no known fixed set");
  }
  Rng rng = make_rng(seed);
  const double delta = A.delta();
  Worst w;
  for (std::int64_t i = 0; i < n_points; ++i) {
    const Point x = A.domain().sample(rng);
    const Point p = A.known_fix()->sample(rng);
    const Point ax = A(x);
    const double violation = norm_squared(sub(ax, p)) - norm_squared(sub(x, p)) +
                             (1.0 - delta) * norm_squared(sub(x, ax));
    const double s = quad_scale(x, p, ax, p);
    w.update(violation, s, x, p);
  }
  QuasiFirmlyCertificates out;
  out.fixed_point = w.report("quasi_firmly_fixed_point", n_points);
  out.pairwise = certify_quasi_firmly_pairwise(A, n_points, mix_seed(seed, 1));
  return out;
}

CertificateReport estimate_firmly_coefficient(const Operator& T, std::int64_t n_pairs,
                                              std::uint64_t seed) {
  require_samples(n_pairs);
  Rng rng = make_rng(seed);
  double best = std::numeric_limits<double>::infinity();
  std::optional<std::pair<Point, Point>> best_pair;
  double scale = 1.0;
  std::int64_t usable = 0;
  for (std::int64_t i = 0; i < n_pairs; ++i) {
    const Point x = T.domain.sample(rng);
    const Point y = T.domain.sample(rng);
    const Point tx = T(x);
    const Point ty = T(y);
    const double s = quad_scale(x, y, tx, ty);
    scale = std::max(scale, s);
    const double denom = norm_squared(sub(sub(x, tx), sub(y, ty)));
    // skip pairs whose displacement difference is pure rounding noise
    if (denom <= 1e-10 * s) continue;
    ++usable;
    const double ratio = (norm_squared(sub(x, y)) - norm_squared(sub(tx, ty))) / denom;
    if (ratio < best) {
      best = ratio;
      best_pair = std::make_pair(x, y);
    }
  }
  CertificateReport r;
  r.inequality_id = "firmly_coefficient";
  r.samples_tested = n_pairs;
  r.scale = scale;
  r.max_violation = 0.0;
  if (usable == 0) {
    r.applicable = false;  // T - I is constant on the samples: coefficient undefined
    return r;
  }
  r.estimated_coefficient = best;
  r.worst_pair = best_pair;
  return r;
}

std::optional<Operator> search_nonspreading_not_nonexpansive(int n_candidates,
                                                             std::int64_t n_pairs,
                                                             std::uint64_t seed) {
  if (n_candidates < 1) throw std::invalid_argument("search: need at least one candidate");
  require_samples(n_pairs);
  const double length = 4.0;
  const ConvexSet domain = ConvexSet::box(Point::zeros(1), Point::constant(1, length));
  Rng rng = make_rng(seed);

  for (int c = 0; c < n_candidates; ++c) {
    // piecewise-affine candidate on [0, length]: left piece on [0, knot),
    // right piece on [knot, length], both clipped back into the interval
    const double knot = (uniform_real(rng, 0.0, 1.0) < 0.25)
                            ? length
                            : uniform_real(rng, 0.5 * length, length);
    const double slope_l = (uniform_real(rng, 0.0, 1.0) < 0.5) ? 0.0 : uniform_real(rng, -1.0, 1.5);
    const double slope_r = (uniform_real(rng, 0.0, 1.0) < 0.5) ? 0.0 : uniform_real(rng, -1.0, 1.5);
    const double int_l = uniform_real(rng, 0.0, length);
    const double int_r = uniform_real(rng, 0.0, length);

    Operator cand{
        .apply =
            [=](const Point& x) {
              const double v = x[0];
              const double mapped =
                  (v < knot) ? slope_l * v + int_l : slope_r * v + int_r;
              return Point({std::clamp(mapped, 0.0, length)});
            },
        .domain = domain,
        .claimed_class = OperatorClass::Generic,
        .known_fix = std::nullopt,
        .name = "piecewise_affine_candidate",
    };

    // cheap pre-screen: must fail nonexpansiveness visibly
    const auto ne_quick = certify_nonexpansive(cand, 2000, mix_seed(seed, 1000 + c));
    if (ne_quick.max_violation <= 1e-6) continue;

    const auto ns = certify_nonspreading(cand, n_pairs, mix_seed(seed, 2000 + c));
    if (!ns.definition.passes() || !ns.characterization.passes()) continue;

    cand.claimed_class = OperatorClass::Nonspreading;
    return cand;
  }
  return std::nullopt;
}

}  // namespace anchorfp
