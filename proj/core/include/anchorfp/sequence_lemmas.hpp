#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "anchorfp/trace.hpp"

namespace anchorfp {

/// Finite scalar sequence extracted from a trace or built synthetically.
/// Indexing is 1-based in all the lemma utilities below.
struct ScalarSeq {
  std::vector<double> values;
  std::string name;
};

struct XuReport {
  /// true iff a_{n+1} <= (1 - alpha_n) a_n + alpha_n sigma_n + gamma_n holds
  /// at every index within 1e-12 * scale
  bool recursion_holds = false;
  /// 1-based index with the largest (violation - tolerance) margin
  std::size_t worst_index = 0;
  double worst_violation = 0.0;
  /// max of a over its final 10% of indices; a trend indicator, not a
  /// verdict — the lemma's conclusion lim a_n = 0 is asymptotic and finite
  /// data cannot certify it
  double tail_max = 0.0;
};

/// Checks the recursion inequality of the scalar convergence lemma on finite
/// data. `a` must be one entry longer than the other three sequences;
/// entries of a and gamma must be nonnegative and alpha must lie in [0, 1].
XuReport xu_check(const ScalarSeq& a, const ScalarSeq& alpha, const ScalarSeq& sigma,
                  const ScalarSeq& gamma);

/// For each k in [k_start, len-1], the largest n in {1, ..., k} with
/// gamma_n < gamma_{n+1}; absent for k before the first increase. The output
/// is nondecreasing where defined and satisfies m_k <= k, and at every
/// defined k both gamma_{m_k} <= gamma_{m_k + 1} and gamma_k <= gamma_{m_k + 1}.
std::vector<std::optional<std::size_t>> mainge_indices(const ScalarSeq& gamma,
                                                       std::size_t k_start);

enum class TraceColumn {
  ResidualT,
  ResidualS,
  DistToTarget,
  DistToTargetSquared,
  Alpha,
  Beta,
};

/// Extracts a column of the recorded trace rows as a ScalarSeq, e.g.
/// a_n = dist_to_target^2 for feeding xu_check. Throws when a requested
/// optional column is absent from any row.
ScalarSeq seq_from_trace(const IterationTrace& trace, TraceColumn column,
                         std::string name = "");

}  // namespace anchorfp
