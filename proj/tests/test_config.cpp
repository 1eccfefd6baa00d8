#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "anchorfp/experiment.hpp"

using namespace anchorfp;

namespace {

const char* kMainConfig = R"({
  "dimension": 2,
  "scheme": "main",
  "case": "iii",
  "domain": {"kind": "whole_space"},
  "T": {"kind": "projection", "set": {"kind": "box", "lower": [0, 0], "upper": [1, 1]}},
  "S": {"kind": "projection", "set": {"kind": "box", "lower": [0.5, 0.5], "upper": [1.5, 1.5]}},
  "anchor": [2, 2],
  "start": [-1, -1],
  "alpha": {"family": "harmonic", "c": 1, "a": 1},
  "beta": {"family": "constant", "v": 0.5},
  "delta": 0.5,
  "max_iters": 2000,
  "stop_residual": 0,
  "trace_stride": 100,
  "seed": 7,
  "output": "trace.csv"
})";

}  // namespace

TEST_CASE("experiment config parses") {
  const ExperimentConfig cfg = parse_experiment_config(kMainConfig);
  CHECK(cfg.dimension == 2);
  CHECK(cfg.scheme == "main");
  CHECK(*cfg.scheme_case == SchemeCase::Common);
  CHECK(cfg.domain->kind() == ConvexSet::Kind::WholeSpace);
  CHECK(cfg.op_T->kind == OperatorSpec::Kind::Projection);
  CHECK(cfg.op_T->target->lower() == Point({0, 0}));
  CHECK(*cfg.anchor == Point({2, 2}));
  CHECK(cfg.alpha->family() == "harmonic");
  CHECK(cfg.beta->family() == "constant");
  CHECK(cfg.max_iters == 2000);
  CHECK(cfg.trace_stride == 100);
  CHECK(cfg.seed == 7);
}

TEST_CASE("unknown keys are rejected with the offending field named") {
  const std::string bad = R"({"dimension": 2, "scheme": "halpern", "domain": {"kind": "whole_space"},
    "T": {"kind": "identity"}, "anchor": [1, 1], "start": [0, 0],
    "alpha": {"family": "harmonic", "c": 1, "a": 1}, "typo_key": 3})";
  CHECK_THROWS_WITH_AS(parse_experiment_config(bad),
                       doctest::Contains("unknown key 'typo_key'"), ConfigError);

  const std::string nested = R"({"dimension": 2, "scheme": "halpern", "domain": {"kind": "whole_space"},
    "T": {"kind": "identity"}, "anchor": [1, 1], "start": [0, 0],
    "alpha": {"family": "harmonic", "c": 1, "a": 1, "extra": 2}})";
  CHECK_THROWS_WITH_AS(parse_experiment_config(nested), doctest::Contains("alpha"),
                       ConfigError);
}

TEST_CASE("keys belonging to other schemes are errors, not silently ignored") {
  const std::string with_lambda = R"({"dimension": 2, "scheme": "halpern",
    "domain": {"kind": "whole_space"}, "T": {"kind": "identity"},
    "anchor": [1, 1], "start": [0, 0],
    "alpha": {"family": "harmonic", "c": 1, "a": 1}, "lambda": 0.5})";
  CHECK_THROWS_AS(parse_experiment_config(with_lambda), ConfigError);
}

TEST_CASE("syntax errors report the line") {
  const std::string broken = "{\n  \"dimension\": 2,\n  oops\n}";
  CHECK_THROWS_WITH_AS(parse_experiment_config(broken), doctest::Contains("line 3"),
                       ConfigError);
}

TEST_CASE("missing scheme-required fields are reported") {
  const std::string no_case = R"({"dimension": 1, "scheme": "main",
    "domain": {"kind": "whole_space"}, "T": {"kind": "identity"}, "S": {"kind": "identity"},
    "anchor": [1], "start": [0],
    "alpha": {"family": "harmonic", "c": 1, "a": 1}, "beta": {"family": "constant", "v": 0.5}})";
  CHECK_THROWS_WITH_AS(parse_experiment_config(no_case), doctest::Contains("'case'"),
                       ConfigError);
}

TEST_CASE("config echo round-trips to an identical config") {
  const ExperimentConfig cfg = parse_experiment_config(kMainConfig);
  const std::string echoed = experiment_config_to_json(cfg);
  const ExperimentConfig reparsed = parse_experiment_config(echoed);
  CHECK(reparsed == cfg);
  CHECK(experiment_config_to_json(reparsed) == echoed);

  const std::string browder = R"({"dimension": 2, "scheme": "browder",
    "domain": {"kind": "ball", "center": [0, 0], "radius": 2},
    "T": {"kind": "rotation", "angle": 1.5707963267948966},
    "anchor": [1, 0], "t_values": [0.1, 0.01], "inner_tol": 1e-10})";
  const ExperimentConfig bcfg = parse_experiment_config(browder);
  CHECK(parse_experiment_config(experiment_config_to_json(bcfg)) == bcfg);

  const std::string affine = R"({"dimension": 2, "scheme": "halpern",
    "domain": {"kind": "ball", "center": [0, 0], "radius": 1},
    "T": {"kind": "affine", "matrix": [[0.5, 0], [0, 0.5]], "shift": [0, 0]},
    "anchor": [0.5, 0], "start": [0, 0],
    "alpha": {"family": "power", "theta": 0.7}})";
  const ExperimentConfig acfg = parse_experiment_config(affine);
  CHECK(parse_experiment_config(experiment_config_to_json(acfg)) == acfg);
}

TEST_CASE("run_experiment executes the parsed scheme") {
  const ExperimentConfig cfg = parse_experiment_config(kMainConfig);
  const RunOutcome outcome = run_experiment(cfg);
  CHECK(outcome.trace.final_row().n == 2000);
  CHECK(*outcome.trace.final_row().dist_to_target <= 1e-2);
  CHECK(outcome.summary.find("status=max_iters_reached") == 0);
  CHECK(outcome.summary.find("dist_to_target=") != std::string::npos);
}

TEST_CASE("halpern identity config hits the telescoped distance") {
  const std::string text = R"({"dimension": 4, "scheme": "halpern",
    "domain": {"kind": "whole_space"}, "T": {"kind": "identity"},
    "anchor": [1, 2, 3, 4], "start": [0, 0, 0, 0],
    "alpha": {"family": "harmonic", "c": 1, "a": 1}, "max_iters": 1000})";
  const ExperimentConfig cfg = parse_experiment_config(text);
  const RunOutcome outcome = run_experiment(cfg);
  const double expected = std::sqrt(30.0) / 1000.0;
  REQUIRE(outcome.trace.final_row().dist_to_target.has_value());
  CHECK(std::abs(*outcome.trace.final_row().dist_to_target - expected) <=
        1e-12 * expected);
}

TEST_CASE("scheme main with a summable alpha is rejected at run time") {
  std::string text(kMainConfig);
  const auto pos = text.find("\"alpha\": {\"family\": \"harmonic\", \"c\": 1, \"a\": 1}");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 47, "\"alpha\": {\"family\": \"inverse_power\", \"p\": 2}");
  const ExperimentConfig cfg = parse_experiment_config(text);
  CHECK_THROWS_WITH_AS(run_experiment(cfg), doctest::Contains("alpha lacks sum_diverges"),
                       std::invalid_argument);
}

TEST_CASE("browder runner") {
  const std::string text = R"({"dimension": 2, "scheme": "browder",
    "domain": {"kind": "ball", "center": [0, 0], "radius": 2},
    "T": {"kind": "rotation", "angle": 1.5707963267948966},
    "anchor": [1, 0], "t_values": [0.1, 0.01, 0.001], "inner_tol": 1e-10})";
  const ExperimentConfig cfg = parse_experiment_config(text);
  std::optional<Point> target;
  const auto entries = run_browder(cfg, &target);
  REQUIRE(entries.size() == 3);
  REQUIRE(target.has_value());
  CHECK(*target == Point::zeros(2));
  CHECK(norm(entries[2].z) < norm(entries[0].z));

  CHECK_THROWS_AS(run_experiment(cfg), ConfigError);
  CHECK_THROWS_AS(run_browder(parse_experiment_config(kMainConfig)), ConfigError);

  const std::string bad_t = R"({"dimension": 2, "scheme": "browder",
    "domain": {"kind": "ball", "center": [0, 0], "radius": 2},
    "T": {"kind": "rotation", "angle": 1.5}, "anchor": [1, 0], "t_values": [0.5, 1e-5]})";
  CHECK_THROWS_AS(parse_experiment_config(bad_t), ConfigError);
}

TEST_CASE("certify config and runner") {
  const std::string text = R"({"dimension": 2,
    "operator": {"kind": "projection", "set": {"kind": "ball", "center": [0, 0], "radius": 1}},
    "domain": {"kind": "ball", "center": [0, 0], "radius": 3},
    "certifiers": "all", "samples": 2000, "seed": 5, "delta": 0.5})";
  const CertifyConfig cfg = parse_certify_config(text);
  CHECK(cfg.samples == 2000);
  CHECK(cfg.certifiers.empty());  // "all"

  const auto rows = run_certifiers(cfg);
  CHECK(all_passed(rows));
  // all + the three nonspreading rows + both quasi-firmly parts
  CHECK(rows.size() == 10);
  bool saw_estimate = false;
  for (const auto& r : rows) {
    if (r.id == "firmly_coefficient") {
      saw_estimate = true;
      CHECK(r.status == "estimated");
      REQUIRE(r.estimated_coefficient.has_value());
      CHECK(*r.estimated_coefficient >= 1.0 - 1e-6);
    }
  }
  CHECK(saw_estimate);

  const std::string csv = certify_rows_to_csv(rows);
  CHECK(csv.find("certifier,samples,max_violation,scale,estimated_coefficient,status") == 0);
}

TEST_CASE("certify runner sharded over workers is deterministic") {
  const std::string text = R"({"dimension": 2,
    "operator": {"kind": "projection", "set": {"kind": "ball", "center": [0, 0], "radius": 1}},
    "domain": {"kind": "ball", "center": [0, 0], "radius": 3},
    "certifiers": ["nonexpansive", "quasi_nonexpansive"], "samples": 4000, "seed": 5})";
  const CertifyConfig cfg = parse_certify_config(text);
  const auto once = run_certifiers(cfg, 4);
  const auto twice = run_certifiers(cfg, 4);
  REQUIRE(once.size() == twice.size());
  for (std::size_t i = 0; i < once.size(); ++i) {
    CHECK(once[i].max_violation == twice[i].max_violation);
    CHECK(once[i].samples == 4000);
    CHECK(once[i].status == "pass");
  }
}

TEST_CASE("certifiers needing a fixed set are skipped for operators without one") {
  const std::string text = R"({"dimension": 2,
    "operator": {"kind": "affine", "matrix": [[0.9, 0], [0, 0.9]], "shift": [0.05, 0]},
    "domain": {"kind": "ball", "center": [0, 0], "radius": 1},
    "certifiers": ["quasi_nonexpansive", "quasi_firmly"], "samples": 500, "seed": 1})";
  const auto rows = run_certifiers(parse_certify_config(text));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].status == "skipped: missing fixed set");
  CHECK(rows[1].status == "skipped: missing fixed set");
  CHECK(rows[2].id == "quasi_firmly_pairwise");
  // the skip must not fail the run
  CHECK(all_passed(rows));
}

TEST_CASE("expansive negative control fails certification") {
  const std::string text = R"({"dimension": 2,
    "operator": {"kind": "affine", "matrix": [[2, 0], [0, 2]], "shift": [0, 0]},
    "domain": {"kind": "ball", "center": [0, 0], "radius": 1},
    "certifiers": ["nonexpansive"], "samples": 10000, "seed": 11})";
  const auto rows = run_certifiers(parse_certify_config(text));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].status == "fail");
  CHECK(rows[0].max_violation > 0.1);
  CHECK_FALSE(all_passed(rows));
}

TEST_CASE("certify config validation") {
  CHECK_THROWS_AS(parse_certify_config(R"({"dimension": 2})"), ConfigError);
  const std::string bad_name = R"({"dimension": 2,
    "operator": {"kind": "identity"}, "domain": {"kind": "ball", "center": [0, 0], "radius": 1},
    "certifiers": ["nonexpansive", "bogus"]})";
  CHECK_THROWS_WITH_AS(parse_certify_config(bad_name), doctest::Contains("bogus"),
                       ConfigError);
}
