#include "anchorfp/sequence_lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace anchorfp {

namespace {

void require_finite(const ScalarSeq& s) {
  if (s.values.empty()) {
    throw std::invalid_argument("ScalarSeq '" + s.name + "' must be nonempty");
  }
  for (double v : s.values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("ScalarSeq '" + s.name + "' has non-finite entries");
    }
  }
}

}  // namespace

XuReport xu_check(const ScalarSeq& a, const ScalarSeq& alpha, const ScalarSeq& sigma,
                  const ScalarSeq& gamma) {
  require_finite(a);
  require_finite(alpha);
  require_finite(sigma);
  require_finite(gamma);
  const std::size_t steps = alpha.values.size();
  if (sigma.values.size() != steps || gamma.values.size() != steps ||
      a.values.size() != steps + 1) {
    throw std::invalid_argument(
        "xu_check: a must be one entry longer than alpha, sigma and gamma");
  }
  for (double v : a.values) {
    if (v < 0.0) throw std::invalid_argument("xu_check: entries of a must be nonnegative");
  }
  for (double v : gamma.values) {
    if (v < 0.0) throw std::invalid_argument("xu_check: entries of gamma must be nonnegative");
  }
  for (double v : alpha.values) {
    if (v < 0.0 || v > 1.0) {
      throw std::invalid_argument("xu_check: entries of alpha must lie in [0, 1]");
    }
  }

  XuReport report;
  double worst_margin = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < steps; ++i) {
    const double an = a.values[i];
    const double bound =
        (1.0 - alpha.values[i]) * an + alpha.values[i] * sigma.values[i] + gamma.values[i];
    const double violation = a.values[i + 1] - bound;
    const double tol =
        1e-12 * (1.0 + an + std::abs(sigma.values[i]) + gamma.values[i] + a.values[i + 1]);
    const double margin = violation - tol;
    if (margin > worst_margin) {
      worst_margin = margin;
      report.worst_index = i + 1;  // 1-based
      report.worst_violation = violation;
    }
  }
  report.recursion_holds = worst_margin <= 0.0;

  const std::size_t len = a.values.size();
  const std::size_t tail = std::max<std::size_t>(1, len / 10);
  report.tail_max = *std::max_element(a.values.end() - static_cast<std::ptrdiff_t>(tail),
                                      a.values.end());
  return report;
}

std::vector<std::optional<std::size_t>> mainge_indices(const ScalarSeq& gamma,
                                                       std::size_t k_start) {
  require_finite(gamma);
  if (k_start < 1) throw std::invalid_argument("mainge_indices: k_start must be >= 1");
  const std::size_t len = gamma.values.size();
  std::vector<std::optional<std::size_t>> out;
  if (len < 2 || k_start > len - 1) return out;

  // single forward pass: last_increase tracks the largest n <= k with
  // gamma_n < gamma_{n+1} (1-based), which is exactly m_k
  std::optional<std::size_t> last_increase;
  for (std::size_t k = 1; k + 1 <= len; ++k) {
    if (gamma.values[k - 1] < gamma.values[k]) last_increase = k;
    if (k >= k_start) out.push_back(last_increase);
  }
  return out;
}

ScalarSeq seq_from_trace(const IterationTrace& trace, TraceColumn column, std::string name) {
  ScalarSeq seq;
  seq.values.reserve(trace.rows.size());
  const char* default_name = "";
  for (const TraceRow& row : trace.rows) {
    switch (column) {
      case TraceColumn::ResidualT:
        default_name = "residual_T";
        seq.values.push_back(row.residual_T);
        break;
      case TraceColumn::ResidualS:
        default_name = "residual_S";
        if (!row.residual_S) throw std::invalid_argument("trace has no residual_S column");
        seq.values.push_back(*row.residual_S);
        break;
      case TraceColumn::DistToTarget:
        default_name = "dist_to_target";
        if (!row.dist_to_target) {
          throw std::invalid_argument("trace has no dist_to_target column");
        }
        seq.values.push_back(*row.dist_to_target);
        break;
      case TraceColumn::DistToTargetSquared:
        default_name = "dist_to_target_squared";
        if (!row.dist_to_target) {
          throw std::invalid_argument("trace has no dist_to_target column");
        }
        seq.values.push_back(*row.dist_to_target * *row.dist_to_target);
        break;
      case TraceColumn::Alpha:
        default_name = "alpha_n";
        seq.values.push_back(row.alpha_n);
        break;
      case TraceColumn::Beta:
        default_name = "beta_n";
        if (!row.beta_n) throw std::invalid_argument("trace has no beta_n column");
        seq.values.push_back(*row.beta_n);
        break;
    }
  }
  seq.name = name.empty() ? default_name : std::move(name);
  return seq;
}

}  // namespace anchorfp
