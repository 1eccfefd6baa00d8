#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anchorfp/point.hpp"

namespace anchorfp {

enum class TerminalStatus { Converged, MaxItersReached };

std::string to_string(TerminalStatus s);

/// One recorded iterate. residual_T is ||x_n - T x_n|| for the scheme's base
/// operator; residual_S is present for two-operator schemes;
/// dist_to_target is present when the scheme has an analytically predicted
/// limit.
struct TraceRow {
  std::int64_t n;
  Point x;
  double residual_T;
  std::optional<double> residual_S;
  std::optional<double> dist_to_target;
  double alpha_n;
  std::optional<double> beta_n;
};

struct IterationTrace {
  std::vector<TraceRow> rows;
  TerminalStatus status = TerminalStatus::MaxItersReached;
  std::optional<Point> target;
  int dim = 0;

  const TraceRow& final_row() const;
};

/// CSV with header n,alpha_n,beta_n,residual_T,residual_S,dist_to_target
/// followed by one column per coordinate; floats carry 17 significant digits
/// so traces round-trip and byte-compare across identical runs. Absent
/// optional fields print as empty cells.
std::string trace_to_csv(const IterationTrace& trace);
void write_trace_csv(const IterationTrace& trace, const std::string& path);

/// One solved point of the regularization path z = t u + (1-t) T z.
struct PathEntry {
  double t;
  Point z;
  std::int64_t inner_iterations;
};

/// CSV with header t,inner_iterations,dist_to_fix,z_0.. ; dist_to_fix is
/// empty when no target is given.
std::string path_to_csv(const std::vector<PathEntry>& entries,
                        const std::optional<Point>& target);
void write_path_csv(const std::vector<PathEntry>& entries,
                    const std::optional<Point>& target, const std::string& path);

}  // namespace anchorfp
