#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anchorfp/operators.hpp"
#include "anchorfp/schedule.hpp"
#include "anchorfp/trace.hpp"

namespace anchorfp {

/// Shared knobs for the anchored iterations. `stop_residual` <= 0 disables
/// early stopping, so a run always performs max_iters - 1 updates and the
/// final trace row carries n == max_iters; that is the reproducible mode the
/// acceptance experiments use.
struct SolverConfig {
  Point anchor;                 // u
  Point start;                  // x_1
  Schedule alpha;               // anchor weights
  Schedule beta;                // blend weights (two-operator schemes only)
  double delta = 0.5;  // averaging weight in (0, 1)
  std::optional<double> delta_T = std::nullopt;  // per-operator override of delta
  std::optional<double> delta_S = std::nullopt;
  std::int64_t max_iters = 1000;
  double stop_residual = 0.0;
  std::int64_t trace_stride = 1;
  /// Run even when the alpha/beta schedules do not carry the tags the
  /// convergence theory asks for.
  bool override_schedule_checks = false;
};

/// Solves z = t u + (1-t) T z for each t by iterating the contraction
/// x -> t u + (1-t) T x, warm-starting each solve from the previous path
/// point (the first from u). The inner loop stops when successive iterates
/// are closer than inner_tol * t, which pins z to roughly inner_tol absolute
/// accuracy since the contraction factor is 1 - t.
///
/// t_values must be strictly decreasing inside (1e-4, 1); the lower cutoff
/// bounds the inner-loop length, which grows like 1/t.
std::vector<PathEntry> browder_path(const Operator& T, const Point& anchor,
                                    const std::vector<double>& t_values, double inner_tol);
std::vector<PathEntry> browder_path(const AveragedOperator& T, const Point& anchor,
                                    const std::vector<double>& t_values, double inner_tol);

/// Anchored iteration x_{n+1} = alpha_n u + (1 - alpha_n) T x_n.
/// Requires alpha tagged tends_to_zero and sum_diverges unless
/// override_schedule_checks is set.
IterationTrace halpern(const Operator& T, const SolverConfig& cfg);

/// halpern with alpha_n = n^{-exponent}, exponent in (0, 1).
IterationTrace halpern_power(const Operator& T, double exponent, SolverConfig cfg);

/// x_{n+1} = alpha_n u + (1 - alpha_n)(w x_n + (1 - w) T x_n): the anchored
/// iteration applied to the averaged map with delta = 1 - w. Residuals are
/// recorded against the base operator T.
IterationTrace halpern_segmented(const Operator& T, double segment_weight,
                                 const SolverConfig& cfg);

/// Two-operator anchored scheme
///   x_{n+1} = alpha_n u + (1 - alpha_n) [beta_n A_T x_n + (1 - beta_n) A_S x_n]
/// with A_T, A_S the averaged maps of T and S. The stopping residual is
/// chosen per case: FixT watches ||x - Tx||, FixS watches ||x - Sx||, Common
/// watches the max of both. T and S are each evaluated exactly once per
/// iteration.
IterationTrace blended_halpern(const Operator& T, const Operator& S, const SolverConfig& cfg,
                               SchemeCase scheme_case);

/// Unanchored two-operator scheme
///   x_{n+1} = (1 - alpha_n) x_n + alpha_n [beta_n S x_n + (1 - beta_n) T x_n].
/// Note beta weights S here, the reverse of blended_halpern's convention.
/// No limit point is predicted: the supporting theory only guarantees
/// convergence to some common fixed point.
IterationTrace moudafi_scheme(const Operator& T, const Operator& S, const SolverConfig& cfg);

/// Analytically predicted strong limit of blended_halpern:
/// P_{Fix(T)} u (FixT), P_{Fix(S)} u (FixS), P_{Fix(T) ∩ Fix(S)} u (Common).
/// Absent when the needed fixed sets are unknown or the intersection has no
/// closed form; *why explains when provided.
std::optional<Point> predicted_limit(SchemeCase scheme_case, const Operator& T,
                                     const Operator& S, const Point& anchor,
                                     std::string* why = nullptr);

/// P_{Fix(T)} u when the fixed set is known: the limit the single-operator
/// anchored iterations aim for.
std::optional<Point> fixed_point_target(const Operator& T, const Point& anchor);

}  // namespace anchorfp
