#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "lrev/grover.hpp"
#include "lrev/word.hpp"

namespace lrev {

enum class Mode { quantum, classical, exact };
enum class InstanceClass { member, far };

std::string_view to_string(Mode mode);
std::string_view to_string(InstanceClass cls);
Mode parse_mode(std::string_view text);
InstanceClass parse_instance_class(std::string_view text);

struct ExperimentConfig {
  std::vector<std::size_t> sizes;
  std::vector<double> epsilons;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::vector<Mode> modes{Mode::quantum};
  std::vector<InstanceClass> classes{InstanceClass::member, InstanceClass::far};
  GroverConfig grover;
  std::size_t workers = 1;
  std::size_t far_max_attempts = kDefaultFarAttempts;
  /// Thresholds checked by --assert.
  double member_min_accept = 0.85;
  double far_max_accept = 0.3;

  /// Throws ContractViolation on odd/short sizes, epsilon outside (0,1),
  /// zero trials or empty lists.
  void validate() const;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& path);

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

/// Wilson score interval; z = 1.96 gives 95%.
Interval wilson_interval(std::size_t successes, std::size_t trials, double z = 1.96);

struct ReportRow {
  std::size_t n = 0;
  double epsilon = 0.0;
  Mode mode = Mode::quantum;
  InstanceClass cls = InstanceClass::member;
  std::size_t trials = 0;
  std::size_t accepted = 0;
  double accept_rate = 0.0;
  double mean_queries = 0.0;
  std::uint64_t max_queries = 0;
  double mean_classical_reads = 0.0;
  double seconds = 0.0;
  Interval accept_ci;
  std::optional<std::string> skipped;
};

struct ExperimentReport {
  std::vector<ReportRow> rows;
};

/// Per-trial seed: base seed xor a mix of (cell, trial).
std::uint64_t trial_seed(std::uint64_t base, std::size_t cell, std::size_t trial);

ExperimentReport run_experiment(const ExperimentConfig& config);

enum class ReportFormat { csv, json };

inline constexpr std::string_view kCsvHeader =
    "n,epsilon,mode,class,trials,accept_rate,mean_queries,max_queries,mean_classical_reads,"
    "seconds";

std::string to_csv(const ExperimentReport& report);
nlohmann::json to_json(const ExperimentReport& report);
/// Throws std::runtime_error naming the path on I/O failure.
void emit_report(const ExperimentReport& report, const std::filesystem::path& path,
                 ReportFormat format);

/// Human-readable list of rows that miss the configured thresholds.
std::vector<std::string> check_thresholds(const ExperimentReport& report,
                                          const ExperimentConfig& config);

} // namespace lrev
