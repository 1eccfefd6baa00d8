#include "anchorfp/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anchorfp {

namespace {

constexpr double kDomainTol = 1e-9;
constexpr double kEscapeTol = 1e-6;
constexpr std::int64_t kMaxInnerIterations = 10'000'000;

void validate_config(const SolverConfig& cfg, const ConvexSet& domain) {
  if (cfg.max_iters < 1) throw std::invalid_argument("SolverConfig: max_iters must be >= 1");
  if (cfg.trace_stride < 1) {
    throw std::invalid_argument("SolverConfig: trace_stride must be >= 1");
  }
  if (cfg.stop_residual < 0.0) {
    throw std::invalid_argument("SolverConfig: stop_residual must be >= 0");
  }
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) {
    throw std::invalid_argument("SolverConfig: delta must lie in (0, 1)");
  }
  if (cfg.anchor.dim() != domain.dim() || cfg.start.dim() != domain.dim()) {
    throw std::invalid_argument("SolverConfig: anchor/start dimension mismatch");
  }
  const double scale_u = 1.0 + norm(cfg.anchor);
  const double scale_x = 1.0 + norm(cfg.start);
  if (!domain.contains(cfg.anchor, kDomainTol * scale_u)) {
    throw std::invalid_argument("SolverConfig: anchor u lies outside the operator domain");
  }
  if (!domain.contains(cfg.start, kDomainTol * scale_x)) {
    throw std::invalid_argument("SolverConfig: start x_1 lies outside the operator domain");
  }
}

void require_anchor_schedule(const Schedule& alpha, bool overridden) {
  if (overridden) return;
  const auto tags = alpha.tags();
  if (!tags.contains(ConditionTag::TendsToZero)) {
    throw std::invalid_argument("alpha lacks tends_to_zero; set the override flag to run anyway");
  }
  if (!tags.contains(ConditionTag::SumDiverges)) {
    throw std::invalid_argument("alpha lacks sum_diverges; set the override flag to run anyway");
  }
}

void check_escape(const ConvexSet& domain, const Point& x, std::int64_t n) {
  if (!domain.contains(x, kEscapeTol * (1.0 + norm(x)))) {
    throw std::runtime_error("iterate escaped the domain at n=" + std::to_string(n) +
                             "; the operator is not a self-map of its domain");
  }
}

bool stride_hit(std::int64_t n, std::int64_t stride) { return (n - 1) % stride == 0; }

std::optional<double> dist_to(const std::optional<Point>& target, const Point& x) {
  if (!target) return std::nullopt;
  return distance(x, *target);
}

struct StepEval {
  Point value;      // what the anchor is mixed with
  double residual;  // reported residual at the current iterate
};

/// Single-operator anchored loop shared by the halpern variants. The step
/// functor evaluates the underlying operator exactly once per iteration and
/// returns both the next base value and the residual to report (they differ
/// for the segmented scheme, which iterates the averaged map but reports the
/// base-operator residual).
template <typename StepFn>
IterationTrace anchored_loop(const ConvexSet& domain, StepFn&& step, const SolverConfig& cfg,
                             const std::optional<Point>& target) {
  IterationTrace trace;
  trace.dim = domain.dim();
  trace.target = target;

  Point x = cfg.start;
  for (std::int64_t n = 1;; ++n) {
    const StepEval ev = step(x);
    const double residual = ev.residual;
    const double alpha_n = cfg.alpha.value_at(n);

    const bool stopped = cfg.stop_residual > 0.0 && residual <= cfg.stop_residual;
    const bool last = stopped || n == cfg.max_iters;
    if (stride_hit(n, cfg.trace_stride) || last) {
      trace.rows.push_back(TraceRow{n, x, residual, std::nullopt, dist_to(target, x),
                                    alpha_n, std::nullopt});
    }
    if (last) {
      trace.status = stopped ? TerminalStatus::Converged : TerminalStatus::MaxItersReached;
      break;
    }

    x = combine(alpha_n, cfg.anchor, ev.value);
    check_escape(domain, x, n + 1);
  }
  return trace;
}

}  // namespace

std::vector<PathEntry> browder_path(const Operator& T, const Point& anchor,
                                    const std::vector<double>& t_values, double inner_tol) {
  if (t_values.empty()) throw std::invalid_argument("browder_path: t_values is empty");
  if (!(inner_tol > 0.0)) throw std::invalid_argument("browder_path: inner_tol must be > 0");
  for (std::size_t i = 0; i < t_values.size(); ++i) {
    const double t = t_values[i];
    if (!(t > 1e-4 && t < 1.0)) {
      throw std::invalid_argument(
          "browder_path: every t must lie in (1e-4, 1); smaller t makes the inner "
          "contraction too slow");
    }
    if (i > 0 && !(t < t_values[i - 1])) {
      throw std::invalid_argument("browder_path: t_values must be strictly decreasing");
    }
  }
  if (anchor.dim() != T.dim()) throw std::invalid_argument("browder_path: dimension mismatch");

  std::vector<PathEntry> path;
  path.reserve(t_values.size());
  Point z = anchor;  // warm start; refined along the path
  for (const double t : t_values) {
    std::int64_t iters = 0;
    while (true) {
      const Point z_next = combine(t, anchor, T(z));
      const double step = distance(z_next, z);
      z = z_next;
      ++iters;
      if (step <= inner_tol * t) break;
      if (iters >= kMaxInnerIterations) {
        throw std::runtime_error("browder_path: inner iteration did not contract at t=" +
                                 std::to_string(t));
      }
    }
    path.push_back(PathEntry{t, z, iters});
  }
  return path;
}

std::vector<PathEntry> browder_path(const AveragedOperator& T, const Point& anchor,
                                    const std::vector<double>& t_values, double inner_tol) {
  return browder_path(T.to_operator(), anchor, t_values, inner_tol);
}

IterationTrace halpern(const Operator& T, const SolverConfig& cfg) {
  validate_config(cfg, T.domain);
  require_anchor_schedule(cfg.alpha, cfg.override_schedule_checks);
  const std::optional<Point> target = fixed_point_target(T, cfg.anchor);
  return anchored_loop(
      T.domain,
      [&](const Point& x) {
        Point tx = T(x);
        const double r = distance(x, tx);
        return StepEval{std::move(tx), r};
      },
      cfg, target);
}

IterationTrace halpern_power(const Operator& T, double exponent, SolverConfig cfg) {
  // Schedule::power enforces exponent in (0, 1)
  cfg.alpha = Schedule::power(exponent);
  return halpern(T, cfg);
}

IterationTrace halpern_segmented(const Operator& T, double segment_weight,
                                 const SolverConfig& cfg) {
  if (!(segment_weight > 0.0 && segment_weight < 1.0)) {
    throw std::invalid_argument("halpern_segmented: segment weight must lie in (0, 1)");
  }
  validate_config(cfg, T.domain);
  require_anchor_schedule(cfg.alpha, cfg.override_schedule_checks);
  // w x + (1-w) T x is the averaged map with delta = 1 - w
  const double delta = 1.0 - segment_weight;
  const std::optional<Point> target = fixed_point_target(T, cfg.anchor);
  return anchored_loop(
      T.domain,
      [&](const Point& x) {
        const Point tx = T(x);
        const double r = distance(x, tx);
        return StepEval{combine(delta, tx, x), r};
      },
      cfg, target);
}

IterationTrace blended_halpern(const Operator& T, const Operator& S, const SolverConfig& cfg,
                               SchemeCase scheme_case) {
  if (!(T.domain == S.domain)) {
    throw std::invalid_argument("blended_halpern: T and S must share one domain");
  }
  validate_config(cfg, T.domain);
  if (!cfg.override_schedule_checks) {
    const CaseValidation v = validate_case(cfg.alpha, cfg.beta, scheme_case);
    if (!v.ok) {
      throw std::invalid_argument("schedule validation failed: " + v.reason +
                                  "; set the override flag to run anyway");
    }
  }
  const double delta_T = cfg.delta_T.value_or(cfg.delta);
  const double delta_S = cfg.delta_S.value_or(cfg.delta);
  if (!(delta_T > 0.0 && delta_T < 1.0) || !(delta_S > 0.0 && delta_S < 1.0)) {
    throw std::invalid_argument("blended_halpern: averaging weights must lie in (0, 1)");
  }
  if (scheme_case == SchemeCase::Common && T.known_fix && S.known_fix) {
    const auto nonempty = sets_intersect(*T.known_fix, *S.known_fix);
    if (nonempty.has_value() && !*nonempty) {
      throw std::invalid_argument(
          "blended_halpern: the known fixed-point sets do not intersect, so no common "
          "fixed point exists");
    }
  }

  const std::optional<Point> target = predicted_limit(scheme_case, T, S, cfg.anchor);

  IterationTrace trace;
  trace.dim = T.dim();
  trace.target = target;

  Point x = cfg.start;
  for (std::int64_t n = 1;; ++n) {
    const Point tx = T(x);
    const Point sx = S(x);
    const double residual_T = distance(x, tx);
    const double residual_S = distance(x, sx);
    const double alpha_n = cfg.alpha.value_at(n);
    const double beta_n = cfg.beta.value_at(n);

    double watched = 0.0;
    switch (scheme_case) {
      case SchemeCase::FixT:
        watched = residual_T;
        break;
      case SchemeCase::FixS:
        watched = residual_S;
        break;
      case SchemeCase::Common:
        watched = std::max(residual_T, residual_S);
        break;
    }
    const bool stopped = cfg.stop_residual > 0.0 && watched <= cfg.stop_residual;
    const bool last = stopped || n == cfg.max_iters;
    if (stride_hit(n, cfg.trace_stride) || last) {
      trace.rows.push_back(
          TraceRow{n, x, residual_T, residual_S, dist_to(target, x), alpha_n, beta_n});
    }
    if (last) {
      trace.status = stopped ? TerminalStatus::Converged : TerminalStatus::MaxItersReached;
      break;
    }

    // A_T x and A_S x reuse the single T and S evaluations above
    const Point atx = combine(delta_T, tx, x);
    const Point asx = combine(delta_S, sx, x);
    const Point blended = combine(beta_n, atx, asx);
    x = combine(alpha_n, cfg.anchor, blended);
    check_escape(T.domain, x, n + 1);
  }
  return trace;
}

IterationTrace moudafi_scheme(const Operator& T, const Operator& S, const SolverConfig& cfg) {
  if (!(T.domain == S.domain)) {
    throw std::invalid_argument("moudafi_scheme: T and S must share one domain");
  }
  validate_config(cfg, T.domain);

  IterationTrace trace;
  trace.dim = T.dim();

  Point x = cfg.start;
  for (std::int64_t n = 1;; ++n) {
    const Point tx = T(x);
    const Point sx = S(x);
    const double residual_T = distance(x, tx);
    const double residual_S = distance(x, sx);
    const double alpha_n = cfg.alpha.value_at(n);
    const double beta_n = cfg.beta.value_at(n);

    const double watched = std::max(residual_T, residual_S);
    const bool stopped = cfg.stop_residual > 0.0 && watched <= cfg.stop_residual;
    const bool last = stopped || n == cfg.max_iters;
    if (stride_hit(n, cfg.trace_stride) || last) {
      trace.rows.push_back(
          TraceRow{n, x, residual_T, residual_S, std::nullopt, alpha_n, beta_n});
    }
    if (last) {
      trace.status = stopped ? TerminalStatus::Converged : TerminalStatus::MaxItersReached;
      break;
    }

    // beta weights S here; the ordering is part of the scheme's definition
    const Point mixed = combine(beta_n, sx, tx);
    x = combine(alpha_n, mixed, x);
    check_escape(T.domain, x, n + 1);
  }
  return trace;
}

std::optional<Point> predicted_limit(SchemeCase scheme_case, const Operator& T,
                                     const Operator& S, const Point& anchor,
                                     std::string* why) {
  switch (scheme_case) {
    case SchemeCase::FixT:
      if (!T.known_fix) {
        if (why) *why = "Fix(T) is unknown";
        return std::nullopt;
      }
      return T.known_fix->project(anchor);
    case SchemeCase::FixS:
      if (!S.known_fix) {
        if (why) *why = "Fix(S) is unknown";
        return std::nullopt;
      }
      return S.known_fix->project(anchor);
    case SchemeCase::Common: {
      if (!T.known_fix || !S.known_fix) {
        if (why) *why = "Fix(T) or Fix(S) is unknown";
        return std::nullopt;
      }
      const auto common = known_intersection(*T.known_fix, *S.known_fix, why);
      if (!common) return std::nullopt;
      return common->project(anchor);
    }
  }
  return std::nullopt;
}

std::optional<Point> fixed_point_target(const Operator& T, const Point& anchor) {
  if (!T.known_fix) return std::nullopt;
  return T.known_fix->project(anchor);
}

}  // namespace anchorfp
