#include "anchorfp/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace anchorfp {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ConfigError("config error at " + (path.empty() ? std::string("<root>") : path) +
                    ": " + msg);
}

void check_keys(const json& j, const std::string& path,
                const std::vector<std::string>& allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& item : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      fail(path, "unknown key '" + item.key() + "'");
    }
  }
}

void check_keys(const json& j, const std::string& path,
                std::initializer_list<const char*> allowed) {
  check_keys(j, path, std::vector<std::string>(allowed.begin(), allowed.end()));
}

const json& member(const json& j, const std::string& path, const std::string& key) {
  const auto it = j.find(key);
  if (it == j.end()) fail(path, "missing required key '" + key + "'");
  return *it;
}

double get_double(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

std::int64_t get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::uint64_t get_uint(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    fail(path, "expected a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

bool get_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected a boolean");
  return j.get<bool>();
}

Point get_point(const json& j, const std::string& path, int expected_dim) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of numbers");
  std::vector<double> v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(get_double(e, path));
  if (expected_dim > 0 && static_cast<int>(v.size()) != expected_dim) {
    fail(path, "expected " + std::to_string(expected_dim) + " coordinates, got " +
                   std::to_string(v.size()));
  }
  try {
    return Point(std::move(v));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

Matrix get_matrix(const json& j, const std::string& path, int expected_dim) {
  if (!j.is_array() || j.empty()) fail(path, "expected an array of rows");
  const int rows = static_cast<int>(j.size());
  if (rows != expected_dim) fail(path, "matrix must be square of the config dimension");
  Matrix m(rows, rows);
  for (int i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != rows) {
      fail(path, "row " + std::to_string(i) + " must have " + std::to_string(rows) +
                     " entries");
    }
    for (int k = 0; k < rows; ++k) {
      m.at(i, k) = get_double(row[static_cast<std::size_t>(k)], path);
    }
  }
  return m;
}

json point_to_json(const Point& p) {
  json a = json::array();
  for (int i = 0; i < p.dim(); ++i) a.push_back(p[i]);
  return a;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

ConvexSet get_set(const json& j, const std::string& path, int dim) {
  if (!j.is_object()) fail(path, "expected a set object");
  const std::string kind = get_string(member(j, path, "kind"), path + ".kind");
  try {
    if (kind == "ball") {
      check_keys(j, path, {"kind", "center", "radius"});
      return ConvexSet::ball(get_point(member(j, path, "center"), path + ".center", dim),
                             get_double(member(j, path, "radius"), path + ".radius"));
    }
    if (kind == "box") {
      check_keys(j, path, {"kind", "lower", "upper"});
      return ConvexSet::box(get_point(member(j, path, "lower"), path + ".lower", dim),
                            get_point(member(j, path, "upper"), path + ".upper", dim));
    }
    if (kind == "halfspace") {
      check_keys(j, path, {"kind", "normal", "offset"});
      return ConvexSet::halfspace(get_point(member(j, path, "normal"), path + ".normal", dim),
                                  get_double(member(j, path, "offset"), path + ".offset"));
    }
    if (kind == "whole_space") {
      check_keys(j, path, {"kind"});
      return ConvexSet::whole_space(dim);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  fail(path + ".kind", "unknown set kind '" + kind +
                           "' (expected ball, box, halfspace or whole_space)");
}

json set_to_json(const ConvexSet& s) {
  json j;
  switch (s.kind()) {
    case ConvexSet::Kind::Ball:
      j["kind"] = "ball";
      j["center"] = point_to_json(s.center());
      j["radius"] = s.radius();
      break;
    case ConvexSet::Kind::Box:
      j["kind"] = "box";
      j["lower"] = point_to_json(s.lower());
      j["upper"] = point_to_json(s.upper());
      break;
    case ConvexSet::Kind::Halfspace:
      j["kind"] = "halfspace";
      j["normal"] = point_to_json(s.normal());
      j["offset"] = s.offset();
      break;
    case ConvexSet::Kind::WholeSpace:
      j["kind"] = "whole_space";
      break;
  }
  return j;
}

OperatorSpec get_operator_spec(const json& j, const std::string& path, int dim) {
  if (!j.is_object()) fail(path, "expected an operator object");
  const std::string kind = get_string(member(j, path, "kind"), path + ".kind");
  OperatorSpec spec;
  if (kind == "projection") {
    check_keys(j, path, {"kind", "set"});
    spec.kind = OperatorSpec::Kind::Projection;
    spec.target = get_set(member(j, path, "set"), path + ".set", dim);
    return spec;
  }
  if (kind == "rotation") {
    check_keys(j, path, {"kind", "angle"});
    spec.kind = OperatorSpec::Kind::Rotation;
    spec.angle = get_double(member(j, path, "angle"), path + ".angle");
    return spec;
  }
  if (kind == "affine") {
    check_keys(j, path, {"kind", "matrix", "shift"});
    spec.kind = OperatorSpec::Kind::Affine;
    spec.matrix = get_matrix(member(j, path, "matrix"), path + ".matrix", dim);
    spec.shift = get_point(member(j, path, "shift"), path + ".shift", dim);
    return spec;
  }
  if (kind == "identity") {
    check_keys(j, path, {"kind"});
    spec.kind = OperatorSpec::Kind::Identity;
    return spec;
  }
  fail(path + ".kind", "unknown operator kind '" + kind +
                           "' (expected projection, rotation, affine or identity)");
}

json operator_spec_to_json(const OperatorSpec& spec) {
  json j;
  switch (spec.kind) {
    case OperatorSpec::Kind::Projection:
      j["kind"] = "projection";
      j["set"] = set_to_json(*spec.target);
      break;
    case OperatorSpec::Kind::Rotation:
      j["kind"] = "rotation";
      j["angle"] = spec.angle;
      break;
    case OperatorSpec::Kind::Affine:
      j["kind"] = "affine";
      j["matrix"] = matrix_to_json(*spec.matrix);
      j["shift"] = point_to_json(*spec.shift);
      break;
    case OperatorSpec::Kind::Identity:
      j["kind"] = "identity";
      break;
  }
  return j;
}

Schedule get_schedule(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a schedule object");
  const std::string family = get_string(member(j, path, "family"), path + ".family");
  try {
    if (family == "power") {
      check_keys(j, path, {"family", "theta"});
      return Schedule::power(get_double(member(j, path, "theta"), path + ".theta"));
    }
    if (family == "harmonic") {
      check_keys(j, path, {"family", "c", "a"});
      return Schedule::harmonic(get_double(member(j, path, "c"), path + ".c"),
                                get_double(member(j, path, "a"), path + ".a"));
    }
    if (family == "constant") {
      check_keys(j, path, {"family", "v"});
      return Schedule::constant(get_double(member(j, path, "v"), path + ".v"));
    }
    if (family == "one_minus_inverse_power") {
      check_keys(j, path, {"family", "p"});
      return Schedule::one_minus_inverse_power(get_double(member(j, path, "p"), path + ".p"));
    }
    if (family == "inverse_power") {
      check_keys(j, path, {"family", "p"});
      return Schedule::inverse_power(get_double(member(j, path, "p"), path + ".p"));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  fail(path + ".family", "unknown schedule family '" + family + "'");
}

json schedule_to_json(const Schedule& s) {
  json j;
  j["family"] = s.family();
  if (s.family() == "power") {
    j["theta"] = s.param("theta");
  } else if (s.family() == "harmonic") {
    j["c"] = s.param("c");
    j["a"] = s.param("a");
  } else if (s.family() == "constant") {
    j["v"] = s.param("v");
  } else {
    j["p"] = s.param("p");
  }
  return j;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') ++line;
    }
    throw ConfigError("config error at line " + std::to_string(line) + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open config file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

const std::vector<std::string> kSchemes = {"browder", "halpern",  "halpern_theta",
                                           "segmented", "main",   "moudafi"};

void require_field(bool present, const std::string& key, const std::string& scheme) {
  if (!present) {
    throw ConfigError("config error at <root>: scheme '" + scheme + "' requires key '" +
                      key + "'");
  }
}

std::string format_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

Operator build_operator(const OperatorSpec& spec, const ConvexSet& domain) {
  switch (spec.kind) {
    case OperatorSpec::Kind::Projection:
      if (!spec.target) throw ConfigError("projection operator needs a target set");
      return make_projection_operator(*spec.target, domain);
    case OperatorSpec::Kind::Rotation:
      return make_rotation_operator(spec.angle, domain);
    case OperatorSpec::Kind::Affine:
      if (!spec.matrix || !spec.shift) throw ConfigError("affine operator needs matrix and shift");
      return make_affine_operator(*spec.matrix, *spec.shift, domain);
    case OperatorSpec::Kind::Identity:
      return make_identity_operator(domain);
  }
  throw std::logic_error("unreachable");
}

// Keys are validated per scheme: a key that some other scheme would use is
// still an error here, so a config can never carry silently-ignored
// settings, and the --print-config echo round-trips exactly.
std::vector<std::string> allowed_keys_for(const std::string& scheme) {
  std::vector<std::string> keys = {"dimension", "scheme", "domain", "T", "seed", "output"};
  auto add = [&keys](std::initializer_list<const char*> more) {
    keys.insert(keys.end(), more.begin(), more.end());
  };
  if (scheme == "browder") {
    add({"anchor", "t_values", "inner_tol"});
    return keys;
  }
  add({"start", "max_iters", "stop_residual", "trace_stride", "override"});
  if (scheme != "moudafi") add({"anchor"});
  if (scheme == "halpern_theta") {
    add({"theta"});
  } else {
    add({"alpha"});
  }
  if (scheme == "segmented") add({"lambda"});
  if (scheme == "main") add({"S", "beta", "case", "delta", "delta_T", "delta_S"});
  if (scheme == "moudafi") add({"S", "beta"});
  return keys;
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  const json j = parse_text(json_text);
  if (!j.is_object()) fail("", "expected an object");

  ExperimentConfig cfg;
  cfg.scheme = get_string(member(j, "", "scheme"), "scheme");
  if (std::find(kSchemes.begin(), kSchemes.end(), cfg.scheme) == kSchemes.end()) {
    fail("scheme", "unknown scheme '" + cfg.scheme + "'");
  }
  check_keys(j, "", allowed_keys_for(cfg.scheme));

  cfg.dimension = static_cast<int>(get_int(member(j, "", "dimension"), "dimension"));
  if (cfg.dimension < 1) fail("dimension", "must be >= 1");

  if (j.contains("case")) {
    try {
      cfg.scheme_case = parse_scheme_case(get_string(j.at("case"), "case"));
    } catch (const std::invalid_argument& e) {
      fail("case", e.what());
    }
  }

  cfg.domain = get_set(member(j, "", "domain"), "domain", cfg.dimension);
  cfg.op_T = get_operator_spec(member(j, "", "T"), "T", cfg.dimension);
  if (j.contains("S")) cfg.op_S = get_operator_spec(j.at("S"), "S", cfg.dimension);
  if (j.contains("anchor")) cfg.anchor = get_point(j.at("anchor"), "anchor", cfg.dimension);
  if (j.contains("start")) cfg.start = get_point(j.at("start"), "start", cfg.dimension);
  if (j.contains("alpha")) cfg.alpha = get_schedule(j.at("alpha"), "alpha");
  if (j.contains("beta")) cfg.beta = get_schedule(j.at("beta"), "beta");
  if (j.contains("delta")) cfg.delta = get_double(j.at("delta"), "delta");
  if (j.contains("delta_T")) cfg.delta_T = get_double(j.at("delta_T"), "delta_T");
  if (j.contains("delta_S")) cfg.delta_S = get_double(j.at("delta_S"), "delta_S");
  if (j.contains("theta")) cfg.theta = get_double(j.at("theta"), "theta");
  if (j.contains("lambda")) cfg.lambda = get_double(j.at("lambda"), "lambda");
  if (j.contains("inner_tol")) cfg.inner_tol = get_double(j.at("inner_tol"), "inner_tol");
  if (j.contains("max_iters")) cfg.max_iters = get_int(j.at("max_iters"), "max_iters");
  if (j.contains("stop_residual")) {
    cfg.stop_residual = get_double(j.at("stop_residual"), "stop_residual");
  }
  if (j.contains("trace_stride")) {
    cfg.trace_stride = get_int(j.at("trace_stride"), "trace_stride");
  }
  if (j.contains("seed")) cfg.seed = get_uint(j.at("seed"), "seed");
  if (j.contains("output")) cfg.output = get_string(j.at("output"), "output");
  if (j.contains("override")) cfg.override_validation = get_bool(j.at("override"), "override");

  if (j.contains("t_values")) {
    const auto& tv = j.at("t_values");
    if (!tv.is_array() || tv.empty()) fail("t_values", "expected a nonempty array");
    for (const auto& e : tv) cfg.t_values.push_back(get_double(e, "t_values"));
    for (std::size_t i = 0; i < cfg.t_values.size(); ++i) {
      const double t = cfg.t_values[i];
      if (!(t > 1e-4 && t < 1.0)) fail("t_values", "every t must lie in (1e-4, 1)");
      if (i > 0 && !(t < cfg.t_values[i - 1])) {
        fail("t_values", "values must be strictly decreasing");
      }
    }
  }

  // per-scheme required fields
  const std::string& s = cfg.scheme;
  if (s == "browder") {
    require_field(cfg.anchor.has_value(), "anchor", s);
    if (cfg.t_values.empty()) cfg.t_values = {1e-1, 1e-2, 1e-3};
  } else {
    require_field(cfg.anchor.has_value() || s == "moudafi", "anchor", s);
    require_field(cfg.start.has_value(), "start", s);
  }
  if (s == "halpern" || s == "segmented" || s == "main" || s == "moudafi") {
    require_field(cfg.alpha.has_value(), "alpha", s);
  }
  if (s == "halpern_theta") require_field(j.contains("theta"), "theta", s);
  if (s == "segmented") require_field(j.contains("lambda"), "lambda", s);
  if (s == "main" || s == "moudafi") {
    require_field(cfg.op_S.has_value(), "S", s);
    require_field(cfg.beta.has_value(), "beta", s);
  }
  if (s == "main") require_field(cfg.scheme_case.has_value(), "case", s);
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  return parse_experiment_config(read_file(path));
}

std::string experiment_config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["dimension"] = cfg.dimension;
  j["scheme"] = cfg.scheme;
  if (cfg.domain) j["domain"] = set_to_json(*cfg.domain);
  if (cfg.op_T) j["T"] = operator_spec_to_json(*cfg.op_T);
  j["seed"] = cfg.seed;
  j["output"] = cfg.output;
  if (cfg.scheme == "browder") {
    if (cfg.anchor) j["anchor"] = point_to_json(*cfg.anchor);
    j["t_values"] = cfg.t_values;
    j["inner_tol"] = cfg.inner_tol;
    return j.dump(2) + "\n";
  }
  if (cfg.anchor && cfg.scheme != "moudafi") j["anchor"] = point_to_json(*cfg.anchor);
  if (cfg.start) j["start"] = point_to_json(*cfg.start);
  if (cfg.scheme == "halpern_theta") {
    j["theta"] = cfg.theta;
  } else if (cfg.alpha) {
    j["alpha"] = schedule_to_json(*cfg.alpha);
  }
  if (cfg.scheme == "segmented") j["lambda"] = cfg.lambda;
  if (cfg.scheme == "main" || cfg.scheme == "moudafi") {
    if (cfg.op_S) j["S"] = operator_spec_to_json(*cfg.op_S);
    if (cfg.beta) j["beta"] = schedule_to_json(*cfg.beta);
  }
  if (cfg.scheme == "main") {
    if (cfg.scheme_case) j["case"] = to_string(*cfg.scheme_case);
    j["delta"] = cfg.delta;
    if (cfg.delta_T) j["delta_T"] = *cfg.delta_T;
    if (cfg.delta_S) j["delta_S"] = *cfg.delta_S;
  }
  j["max_iters"] = cfg.max_iters;
  j["stop_residual"] = cfg.stop_residual;
  j["trace_stride"] = cfg.trace_stride;
  j["override"] = cfg.override_validation;
  return j.dump(2) + "\n";
}

RunOutcome run_experiment(const ExperimentConfig& cfg) {
  if (cfg.scheme == "browder") {
    throw ConfigError("scheme 'browder' is handled by the 'path' subcommand");
  }
  const ConvexSet domain = *cfg.domain;
  const Operator T = build_operator(*cfg.op_T, domain);

  SolverConfig scfg{
      .anchor = cfg.anchor ? *cfg.anchor : *cfg.start,
      .start = *cfg.start,
      .alpha = cfg.alpha ? *cfg.alpha : Schedule::constant(0.0),
      .beta = cfg.beta ? *cfg.beta : Schedule::constant(0.0),
      .delta = cfg.delta,
      .delta_T = cfg.delta_T,
      .delta_S = cfg.delta_S,
      .max_iters = cfg.max_iters,
      .stop_residual = cfg.stop_residual,
      .trace_stride = cfg.trace_stride,
      .override_schedule_checks = cfg.override_validation,
  };

  IterationTrace trace = [&] {
    if (cfg.scheme == "halpern") return halpern(T, scfg);
    if (cfg.scheme == "halpern_theta") return halpern_power(T, cfg.theta, scfg);
    if (cfg.scheme == "segmented") return halpern_segmented(T, cfg.lambda, scfg);
    const Operator S = build_operator(*cfg.op_S, domain);
    if (cfg.scheme == "main") return blended_halpern(T, S, scfg, *cfg.scheme_case);
    return moudafi_scheme(T, S, scfg);
  }();

  const TraceRow& last = trace.final_row();
  std::string summary = "status=" + to_string(trace.status) +
                        " n=" + std::to_string(last.n) +
                        " residual_T=" + format_g(last.residual_T);
  if (last.residual_S) summary += " residual_S=" + format_g(*last.residual_S);
  if (last.dist_to_target) summary += " dist_to_target=" + format_g(*last.dist_to_target);
  return RunOutcome{std::move(trace), std::move(summary)};
}

std::vector<PathEntry> run_browder(const ExperimentConfig& cfg,
                                   std::optional<Point>* target_out) {
  if (cfg.scheme != "browder") {
    throw ConfigError("the 'path' subcommand needs a scheme 'browder' config");
  }
  const Operator T = build_operator(*cfg.op_T, *cfg.domain);
  if (target_out) *target_out = fixed_point_target(T, *cfg.anchor);
  return browder_path(T, *cfg.anchor, cfg.t_values, cfg.inner_tol);
}

const std::vector<std::string>& certifier_names() {
  static const std::vector<std::string> names = {
      "nonexpansive",           "nonspreading", "quasi_nonexpansive",
      "inverse_strongly_monotone", "displacement_bound", "quasi_firmly",
      "firmly_coefficient"};
  return names;
}

CertifyConfig parse_certify_config(const std::string& json_text) {
  const json j = parse_text(json_text);
  check_keys(j, "", {"dimension", "operator", "domain", "certifiers", "samples", "seed",
                     "delta", "output"});
  CertifyConfig cfg;
  cfg.dimension = static_cast<int>(get_int(member(j, "", "dimension"), "dimension"));
  if (cfg.dimension < 1) fail("dimension", "must be >= 1");
  cfg.domain = get_set(member(j, "", "domain"), "domain", cfg.dimension);
  cfg.op = get_operator_spec(member(j, "", "operator"), "operator", cfg.dimension);
  if (j.contains("certifiers")) {
    const auto& c = j.at("certifiers");
    if (c.is_string()) {
      if (c.get<std::string>() != "all") {
        fail("certifiers", "expected \"all\" or an array of certifier names");
      }
    } else if (c.is_array()) {
      for (const auto& e : c) {
        const std::string name = get_string(e, "certifiers");
        const auto& known = certifier_names();
        if (std::find(known.begin(), known.end(), name) == known.end()) {
          fail("certifiers", "unknown certifier '" + name + "'");
        }
        cfg.certifiers.push_back(name);
      }
    } else {
      fail("certifiers", "expected \"all\" or an array of certifier names");
    }
  }
  if (j.contains("samples")) cfg.samples = get_int(j.at("samples"), "samples");
  if (cfg.samples < 1) fail("samples", "must be >= 1");
  if (j.contains("seed")) cfg.seed = get_uint(j.at("seed"), "seed");
  if (j.contains("delta")) cfg.delta = get_double(j.at("delta"), "delta");
  if (j.contains("output")) cfg.output = get_string(j.at("output"), "output");
  return cfg;
}

CertifyConfig load_certify_config(const std::string& path) {
  return parse_certify_config(read_file(path));
}

namespace {

/// Shards a certifier call over `workers` threads and folds the per-shard
/// results with `merge`; fn(n, seed) must be pure.
template <typename Fn, typename Merge>
auto run_sharded(std::int64_t total, int workers, std::uint64_t base_seed, Fn fn,
                 Merge merge) {
  using Result = decltype(fn(std::int64_t{1}, std::uint64_t{0}));
  const int w = static_cast<int>(std::min<std::int64_t>(workers, total));
  if (w <= 1) return fn(total, mix_seed(base_seed, 0));
  std::vector<std::optional<Result>> parts(static_cast<std::size_t>(w));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(w));
  const std::int64_t chunk = total / w;
  const std::int64_t rem = total % w;
  for (int i = 0; i < w; ++i) {
    const std::int64_t n = chunk + (i < rem ? 1 : 0);
    const std::uint64_t seed = mix_seed(base_seed, static_cast<std::uint64_t>(i));
    threads.emplace_back(
        [&parts, i, n, seed, &fn] { parts[static_cast<std::size_t>(i)] = fn(n, seed); });
  }
  for (auto& t : threads) t.join();
  Result merged = std::move(*parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) merged = merge(std::move(merged), *parts[i]);
  return merged;
}

template <typename Fn>
CertificateReport run_sharded(std::int64_t total, int workers, std::uint64_t base_seed,
                              Fn fn) {
  return run_sharded(total, workers, base_seed, std::move(fn),
                     [](CertificateReport a, const CertificateReport& b) {
                       return merge_reports(std::move(a), b);
                     });
}

NonspreadingCertificates merge_nonspreading(NonspreadingCertificates a,
                                            const NonspreadingCertificates& b) {
  a.definition = merge_reports(std::move(a.definition), b.definition);
  a.characterization = merge_reports(std::move(a.characterization), b.characterization);
  a.max_equivalence_gap = std::max(a.max_equivalence_gap, b.max_equivalence_gap);
  a.gap_scale = std::max(a.gap_scale, b.gap_scale);
  return a;
}

QuasiFirmlyCertificates merge_quasi_firmly(QuasiFirmlyCertificates a,
                                           const QuasiFirmlyCertificates& b) {
  a.fixed_point = merge_reports(std::move(a.fixed_point), b.fixed_point);
  a.pairwise = merge_reports(std::move(a.pairwise), b.pairwise);
  return a;
}

CertifyRow row_from(const CertificateReport& r) {
  CertifyRow row;
  row.id = r.inequality_id;
  row.samples = r.samples_tested;
  row.max_violation = r.max_violation;
  row.scale = r.scale;
  row.estimated_coefficient = r.estimated_coefficient;
  row.status = r.passes() ? "pass" : "fail";
  return row;
}

CertifyRow skipped_row(const std::string& id) {
  CertifyRow row;
  row.id = id;
  row.status = "skipped: missing fixed set";
  return row;
}

}  // namespace

std::vector<CertifyRow> run_certifiers(const CertifyConfig& cfg, int workers) {
  if (workers < 1) throw std::invalid_argument("run_certifiers: workers must be >= 1");
  const Operator op = build_operator(*cfg.op, *cfg.domain);
  std::vector<std::string> want = cfg.certifiers;
  if (want.empty()) want = certifier_names();

  std::vector<CertifyRow> rows;
  const std::int64_t n = cfg.samples;

  for (const std::string& name : want) {
    if (name == "nonexpansive") {
      rows.push_back(row_from(run_sharded(n, workers, mix_seed(cfg.seed, 101),
                                          [&](std::int64_t k, std::uint64_t s) {
                                            return certify_nonexpansive(op, k, s);
                                          })));
    } else if (name == "nonspreading") {
      const auto ns = run_sharded(
          n, workers, mix_seed(cfg.seed, 102),
          [&](std::int64_t k, std::uint64_t s) { return certify_nonspreading(op, k, s); },
          merge_nonspreading);
      rows.push_back(row_from(ns.definition));
      rows.push_back(row_from(ns.characterization));
      CertifyRow gap;
      gap.id = "nonspreading_equivalence_gap";
      gap.samples = ns.definition.samples_tested;
      gap.max_violation = ns.max_equivalence_gap;
      gap.scale = ns.gap_scale;
      gap.status = ns.max_equivalence_gap <= 1e-10 * ns.gap_scale ? "pass" : "fail";
      rows.push_back(gap);
    } else if (name == "quasi_nonexpansive") {
      if (!op.known_fix) {
        rows.push_back(skipped_row("quasi_nonexpansive"));
      } else {
        rows.push_back(row_from(run_sharded(n, workers, mix_seed(cfg.seed, 104),
                                            [&](std::int64_t k, std::uint64_t s) {
                                              return certify_quasi_nonexpansive(op, k, s);
                                            })));
      }
    } else if (name == "inverse_strongly_monotone") {
      rows.push_back(row_from(run_sharded(n, workers, mix_seed(cfg.seed, 105),
                                          [&](std::int64_t k, std::uint64_t s) {
                                            return certify_inverse_strongly_monotone(op, k, s);
                                          })));
    } else if (name == "displacement_bound") {
      rows.push_back(row_from(run_sharded(n, workers, mix_seed(cfg.seed, 106),
                                          [&](std::int64_t k, std::uint64_t s) {
                                            return certify_displacement_inequality(op, k, s);
                                          })));
    } else if (name == "quasi_firmly") {
      const AveragedOperator A = averaged(op, cfg.delta);
      if (op.known_fix) {
        const auto qf = run_sharded(
            n, workers, mix_seed(cfg.seed, 107),
            [&](std::int64_t k, std::uint64_t s) { return certify_quasi_firmly(A, k, s); },
            merge_quasi_firmly);
        rows.push_back(row_from(qf.fixed_point));
        rows.push_back(row_from(qf.pairwise));
      } else {
        rows.push_back(skipped_row("quasi_firmly_fixed_point"));
        rows.push_back(row_from(run_sharded(n, workers, mix_seed(cfg.seed, 108),
                                            [&](std::int64_t k, std::uint64_t s) {
                                              return certify_quasi_firmly_pairwise(A, k, s);
                                            })));
      }
    } else if (name == "firmly_coefficient") {
      auto r = run_sharded(n, workers, mix_seed(cfg.seed, 109),
                           [&](std::int64_t k, std::uint64_t s) {
                             return estimate_firmly_coefficient(op, k, s);
                           });
      CertifyRow row = row_from(r);
      row.status = r.applicable ? "estimated" : "not_applicable";
      rows.push_back(row);
    } else {
      throw std::invalid_argument("unknown certifier '" + name + "'");
    }
  }
  return rows;
}

bool all_passed(const std::vector<CertifyRow>& rows) {
  return std::none_of(rows.begin(), rows.end(),
                      [](const CertifyRow& r) { return r.status == "fail"; });
}

std::string certify_rows_to_csv(const std::vector<CertifyRow>& rows) {
  std::string out = "certifier,samples,max_violation,scale,estimated_coefficient,status\n";
  char buf[64];
  for (const CertifyRow& r : rows) {
    out += r.id + "," + std::to_string(r.samples) + ",";
    std::snprintf(buf, sizeof(buf), "%.17g", r.max_violation);
    out += buf;
    out += ",";
    std::snprintf(buf, sizeof(buf), "%.17g", r.scale);
    out += buf;
    out += ",";
    if (r.estimated_coefficient) {
      std::snprintf(buf, sizeof(buf), "%.17g", *r.estimated_coefficient);
      out += buf;
    }
    out += "," + r.status + "\n";
  }
  return out;
}

}  // namespace anchorfp
