#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "regraph/experiment.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Random regular graph experiments"};
  std::string kind;
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::string out_dir = ".";
  app.add_option("kind", kind, "experiment kind")->required()->check(CLI::IsMember(regraph::experiment_kinds()));
  app.add_option("--config", config_path, "key = value config file")->required();
  app.add_option("--seed", seed, "seed (overrides config and REGRAPH_SEED)");
  app.add_option("--workers", workers, "worker threads");
  app.add_option("--out", out_dir, "output directory");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << nlohmann::json{{"error", "usage"}, {"exit", 2}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    auto config = regraph::load_config(config_path);
    if (!config.kind.empty() && config.kind != kind) {
      throw regraph::ConfigError("config kind " + config.kind + " does not match command " + kind, 0, "kind");
    }
    config.kind = kind;
    regraph::apply_seed_environment(config);
    if (seed) config.seed = seed;
    if (workers) config.workers = *workers;
    const auto report = regraph::run_experiment(config);
    regraph::RunMetadata meta;
    meta.version = regraph::version_string();
    meta.workers = config.workers;
    meta.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& path : regraph::write_report(report, config, meta, out_dir)) std::cout << path.string() << '\n';
  } catch (const std::exception& e) {
    std::cerr << regraph::error_line(e) << '\n';
    return regraph::exit_code_for(e);
  }
  return 0;
}
