#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "anchorfp/anchorfp.hpp"

namespace {

using namespace anchorfp;

struct CommonOpts {
  std::string config_path;
  std::string out_override;
  std::optional<std::uint64_t> seed_override;
};

void write_text(const std::string& content, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
}

int cmd_run(const CommonOpts& opts, bool print_config) {
  ExperimentConfig cfg = load_experiment_config(opts.config_path);
  if (opts.seed_override) cfg.seed = *opts.seed_override;
  if (!opts.out_override.empty()) cfg.output = opts.out_override;
  if (print_config) {
    std::cout << experiment_config_to_json(cfg);
    return 0;
  }
  RunOutcome outcome = run_experiment(cfg);
  write_trace_csv(outcome.trace, cfg.output);
  std::cout << outcome.summary << " trace=" << cfg.output << "\n";
  return 0;
}

int cmd_certify(const CommonOpts& opts, int workers) {
  CertifyConfig cfg = load_certify_config(opts.config_path);
  if (opts.seed_override) cfg.seed = *opts.seed_override;
  if (!opts.out_override.empty()) cfg.output = opts.out_override;
  const auto rows = run_certifiers(cfg, workers);
  write_text(certify_rows_to_csv(rows), cfg.output);
  int failed = 0;
  for (const auto& r : rows) {
    std::printf("%-34s %9lld samples  max_violation=%-12.3e %s\n", r.id.c_str(),
                static_cast<long long>(r.samples), r.max_violation, r.status.c_str());
    if (r.status == "fail") ++failed;
  }
  std::cout << "report=" << cfg.output << "\n";
  return failed == 0 ? 0 : 2;
}

int cmd_path(const CommonOpts& opts) {
  ExperimentConfig cfg = load_experiment_config(opts.config_path);
  if (opts.seed_override) cfg.seed = *opts.seed_override;
  if (!opts.out_override.empty()) cfg.output = opts.out_override;
  std::optional<Point> target;
  const auto entries = run_browder(cfg, &target);
  write_path_csv(entries, target, cfg.output);
  std::cout << "wrote " << entries.size() << " path points"
            << (target ? " (with distance to the projected anchor)" : "") << " to "
            << cfg.output << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anchorfp: anchored fixed-point iterations and operator certifiers"};
  app.require_subcommand(1);

  CommonOpts run_opts, certify_opts, path_opts;
  bool print_config = false;
  int workers = 1;

  auto add_common = [](CLI::App* sub, CommonOpts& o) {
    sub->add_option("--config", o.config_path, "experiment config file (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--out", o.out_override, "override the config's output path");
    std::function<void(std::uint64_t)> set_seed = [&o](std::uint64_t s) {
      o.seed_override = s;
    };
    sub->add_option_function<std::uint64_t>("--seed", set_seed,
                                            "override the config's seed");
  };

  CLI::App* run = app.add_subcommand("run", "run an iterative scheme, write a CSV trace");
  add_common(run, run_opts);
  run->add_flag("--print-config", print_config,
                "echo the parsed config as canonical JSON and exit");

  CLI::App* certify =
      app.add_subcommand("certify", "run sampling certifiers, write a CSV report");
  add_common(certify, certify_opts);
  certify->add_option("--workers", workers, "shard certifier samples across N threads")
      ->check(CLI::PositiveNumber);

  CLI::App* path =
      app.add_subcommand("path", "solve the regularization path z = t u + (1-t) T z");
  add_common(path, path_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_opts, print_config);
    if (certify->parsed()) return cmd_certify(certify_opts, workers);
    if (path->parsed()) return cmd_path(path_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
