#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "regraph/error.hpp"

namespace regraph {

// Unparsable config text. line is 1-based, 0 when not tied to a line.
class ConfigError : public InvalidInput {
 public:
  ConfigError(const std::string& what, int line, std::string field = {})
      : InvalidInput(what), line_(line), field_(std::move(field)) {}
  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

inline const std::vector<std::string>& experiment_kinds() {
  static const std::vector<std::string> kinds{"sample", "cycles", "spectrum", "poisson-test", "grow", "limit-sim", "gff-check"};
  return kinds;
}

struct ExperimentConfig {
  std::string kind;
  std::map<std::string, std::string> values;  // raw text, seed and kind excluded
  std::map<std::string, int> lines;
  std::optional<std::uint64_t> seed;
  int workers = 1;
};

// "key = value" lines; '#' starts a comment; "[name]" section headers are
// accepted and ignored. Throws ConfigError with the offending line.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

// REGRAPH_SEED, when set, replaces the seed field.
void apply_seed_environment(ExperimentConfig& config);

struct Violation {
  std::string field;
  std::string rule;
};

// Empty iff run would start.
std::vector<Violation> validate(const ExperimentConfig& config);

struct ExperimentReport {
  nlohmann::json body;                           // pure function of config and seed
  std::map<std::string, std::string> csv;        // file suffix -> contents
};

// Validates, then runs. Throws ConfigError naming the first violation.
ExperimentReport run_experiment(const ExperimentConfig& config);

struct RunMetadata {
  std::string version;
  double wall_clock_seconds = 0;
  std::string finished_at;  // filled with the current UTC time when empty
  int workers = 1;
};

// Writes <kind>.json as {"body": ..., "meta": ...} and <kind><suffix>.csv for
// every table. Files are staged and renamed; on failure nothing is left.
std::vector<std::filesystem::path> write_report(const ExperimentReport& report, const ExperimentConfig& config,
                                                const RunMetadata& meta, const std::filesystem::path& out_dir);

// 0 ok, 2 config, 3 resource cap, 4 numeric failure.
int exit_code_for(const std::exception& e);

// One-line JSON error record for stderr.
std::string error_line(const std::exception& e);

std::string version_string();

}  // namespace regraph
