#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "anchorfp/certify.hpp"
#include "anchorfp/solvers.hpp"

namespace anchorfp {

/// Raised for malformed or inconsistent experiment configs; the message
/// names the offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Declarative description of an operator, buildable from and serializable
/// back to config JSON (the Operator itself holds a closure and cannot be
/// echoed).
struct OperatorSpec {
  enum class Kind { Projection, Rotation, Affine, Identity };
  Kind kind = Kind::Identity;
  std::optional<ConvexSet> target;  // projection
  double angle = 0.0;               // rotation
  std::optional<Matrix> matrix;     // affine
  std::optional<Point> shift;       // affine

  bool operator==(const OperatorSpec&) const = default;
};

Operator build_operator(const OperatorSpec& spec, const ConvexSet& domain);

/// One experiment = one config file. Field applicability depends on the
/// scheme; unknown keys and missing required fields are config errors.
struct ExperimentConfig {
  int dimension = 0;
  std::string scheme;  // browder | halpern | halpern_theta | segmented | main | moudafi
  std::optional<SchemeCase> scheme_case;  // main only
  std::optional<ConvexSet> domain;
  std::optional<OperatorSpec> op_T;
  std::optional<OperatorSpec> op_S;  // main, moudafi
  std::optional<Point> anchor;
  std::optional<Point> start;
  std::optional<Schedule> alpha;
  std::optional<Schedule> beta;
  double delta = 0.5;
  std::optional<double> delta_T;
  std::optional<double> delta_S;
  double theta = 0.5;              // halpern_theta
  double lambda = 0.5;             // segmented
  std::vector<double> t_values;    // browder
  double inner_tol = 1e-10;        // browder
  std::int64_t max_iters = 1000;
  double stop_residual = 0.0;
  std::int64_t trace_stride = 1;
  std::uint64_t seed = 0;
  std::string output = "trace.csv";
  bool override_validation = false;

  bool operator==(const ExperimentConfig&) const = default;
};

ExperimentConfig parse_experiment_config(const std::string& json_text);
ExperimentConfig load_experiment_config(const std::string& path);
/// Canonical JSON echo; parsing it back yields an equal ExperimentConfig.
std::string experiment_config_to_json(const ExperimentConfig& cfg);

struct RunOutcome {
  IterationTrace trace;
  std::string summary;  // single status line for the console
};

/// Runs the iterative schemes (halpern, halpern_theta, segmented, main,
/// moudafi). Rejects scheme=browder: the path runner handles that.
RunOutcome run_experiment(const ExperimentConfig& cfg);

/// Runs the browder scheme; *target_out receives the projected anchor when
/// the fixed set is known.
std::vector<PathEntry> run_browder(const ExperimentConfig& cfg,
                                   std::optional<Point>* target_out = nullptr);

/// Config for the certifier harness.
struct CertifyConfig {
  int dimension = 0;
  std::optional<OperatorSpec> op;
  std::optional<ConvexSet> domain;
  std::vector<std::string> certifiers;  // empty means all
  std::int64_t samples = 10000;
  std::uint64_t seed = 0;
  double delta = 0.5;  // for the averaged-map certifiers
  std::string output = "report.csv";

  bool operator==(const CertifyConfig&) const = default;
};

CertifyConfig parse_certify_config(const std::string& json_text);
CertifyConfig load_certify_config(const std::string& path);

/// Names accepted in CertifyConfig::certifiers.
const std::vector<std::string>& certifier_names();

struct CertifyRow {
  std::string id;
  std::int64_t samples = 0;
  double max_violation = 0.0;
  double scale = 1.0;
  std::optional<double> estimated_coefficient;
  std::string status;  // pass | fail | estimated | not_applicable | skipped: ...
};

/// Runs the requested certifiers, sharding the sample budget across
/// `workers` threads (reports merged by max violation). Certifiers that need
/// a fixed set are skipped with a note when the operator has none.
std::vector<CertifyRow> run_certifiers(const CertifyConfig& cfg, int workers = 1);

bool all_passed(const std::vector<CertifyRow>& rows);
std::string certify_rows_to_csv(const std::vector<CertifyRow>& rows);

}  // namespace anchorfp
