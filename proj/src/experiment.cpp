#include "lrev/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "lrev/error.hpp"
#include "lrev/membership.hpp"
#include "lrev/tester.hpp"

namespace lrev {

std::string_view to_string(Mode mode) {
  switch (mode) {
  case Mode::quantum: return "quantum";
  case Mode::classical: return "classical";
  case Mode::exact: return "exact";
  }
  return "?";
}

std::string_view to_string(InstanceClass cls) {
  return cls == InstanceClass::member ? "member" : "far";
}

Mode parse_mode(std::string_view text) {
  if (text == "quantum") return Mode::quantum;
  if (text == "classical") return Mode::classical;
  if (text == "exact") return Mode::exact;
  throw ContractViolation("unknown mode: " + std::string(text));
}

InstanceClass parse_instance_class(std::string_view text) {
  if (text == "member") return InstanceClass::member;
  if (text == "far") return InstanceClass::far;
  throw ContractViolation("unknown instance class: " + std::string(text));
}

void ExperimentConfig::validate() const {
  require(!sizes.empty() && !epsilons.empty() && !modes.empty() && !classes.empty(),
          "config lists must be nonempty");
  for (auto n : sizes) {
    require(is_membership_length(n), "size " + std::to_string(n) + " must be even and >= 4");
  }
  for (auto e : epsilons) require(e > 0.0 && e < 1.0, "epsilon must be in (0, 1)");
  require(trials >= 1, "trials must be >= 1");
  require(workers >= 1, "workers must be >= 1");
  require(grover.growth > 1.0 && grover.cap_multiplier > 0.0, "invalid Grover schedule");
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.sizes = j.at("sizes").get<std::vector<std::size_t>>();
  c.epsilons = j.at("epsilons").get<std::vector<double>>();
  c.trials = j.value("trials", c.trials);
  c.seed = j.value("seed", c.seed);
  c.workers = j.value("workers", c.workers);
  c.far_max_attempts = j.value("far_max_attempts", c.far_max_attempts);
  if (j.contains("modes")) {
    c.modes.clear();
    for (const auto& m : j["modes"]) c.modes.push_back(parse_mode(m.get<std::string>()));
  }
  if (j.contains("classes")) {
    c.classes.clear();
    for (const auto& k : j["classes"]) {
      c.classes.push_back(parse_instance_class(k.get<std::string>()));
    }
  }
  if (j.contains("grover")) {
    const auto& g = j["grover"];
    c.grover.cap_multiplier = g.value("cap_multiplier", c.grover.cap_multiplier);
    c.grover.growth = g.value("growth", c.grover.growth);
  }
  if (j.contains("assert")) {
    const auto& a = j["assert"];
    c.member_min_accept = a.value("member_min_accept", c.member_min_accept);
    c.far_max_accept = a.value("far_max_accept", c.far_max_accept);
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  try {
    return config_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("bad config " + path.string() + ": " + e.what());
  }
}

Interval wilson_interval(std::size_t successes, std::size_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t cell, std::size_t trial) {
  // splitmix64 finalizer over the packed (cell, trial) pair
  std::uint64_t z = (static_cast<std::uint64_t>(cell) << 32) ^ static_cast<std::uint64_t>(trial);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return base ^ z;
}

namespace {

struct TrialResult {
  bool accept = false;
  QueryLedger ledger;
  std::optional<std::string> error;
};

TrialResult run_trial(const ExperimentConfig& config, std::size_t n, double epsilon, Mode mode,
                      InstanceClass cls, std::uint64_t seed) {
  Rng rng(seed);
  TrialResult r;
  Word x;
  try {
    x = cls == InstanceClass::member ? gen_member_of_length(n, rng)
                                     : gen_far(n, epsilon, rng, config.far_max_attempts);
  } catch (const NoFarInstance& e) {
    r.error = e.what();
    return r;
  }
  switch (mode) {
  case Mode::quantum: {
    auto v = quantum_test(x, epsilon, rng, config.grover);
    r.accept = v.accept;
    r.ledger = v.ledger;
    break;
  }
  case Mode::classical: {
    auto v = classical_test(x, epsilon, rng);
    r.accept = v.accept;
    r.ledger = v.ledger;
    break;
  }
  case Mode::exact:
    r.accept = exact_member(x, &r.ledger).is_member;
    break;
  }
  return r;
}

} // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  ExperimentReport report;
  std::size_t cell = 0;
  for (auto n : config.sizes) {
    for (auto epsilon : config.epsilons) {
      for (auto mode : config.modes) {
        for (auto cls : config.classes) {
          const auto started = std::chrono::steady_clock::now();
          std::vector<TrialResult> results(config.trials);
          const std::size_t workers = std::min(config.workers, config.trials);
          auto work = [&](std::size_t first) {
            for (std::size_t t = first; t < config.trials; t += workers) {
              results[t] = run_trial(config, n, epsilon, mode, cls, trial_seed(config.seed, cell, t));
            }
          };
          if (workers == 1) {
            work(0);
          } else {
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
          }

          ReportRow row;
          row.n = n;
          row.epsilon = epsilon;
          row.mode = mode;
          row.cls = cls;
          const auto failed = std::find_if(results.begin(), results.end(),
                                           [](const TrialResult& r) { return r.error.has_value(); });
          if (failed != results.end()) {
            row.skipped = *failed->error;
          } else {
            row.trials = config.trials;
            double queries = 0.0, reads = 0.0;
            for (const auto& r : results) {
              row.accepted += r.accept;
              queries += static_cast<double>(r.ledger.total());
              reads += static_cast<double>(r.ledger.classical_reads);
              row.max_queries = std::max(row.max_queries, r.ledger.total());
            }
            const double trials = static_cast<double>(row.trials);
            row.accept_rate = static_cast<double>(row.accepted) / trials;
            row.mean_queries = queries / trials;
            row.mean_classical_reads = reads / trials;
            row.accept_ci = wilson_interval(row.accepted, row.trials);
          }
          row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                            .count();
          report.rows.push_back(std::move(row));
          ++cell;
        }
      }
    }
  }
  return report;
}

std::string to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : report.rows) {
    out << r.n << ',' << std::setprecision(6) << std::defaultfloat << r.epsilon << ','
        << to_string(r.mode) << ',' << to_string(r.cls) << ',' << r.trials << ','
        << std::fixed << std::setprecision(6) << r.accept_rate << ','
        << std::setprecision(3) << r.mean_queries << ',' << r.max_queries << ','
        << r.mean_classical_reads << ',' << r.seconds << '\n';
    out << std::defaultfloat;
  }
  return out.str();
}

nlohmann::json to_json(const ExperimentReport& report) {
  auto rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({
        {"n", r.n},
        {"epsilon", r.epsilon},
        {"mode", to_string(r.mode)},
        {"class", to_string(r.cls)},
        {"trials", r.trials},
        {"accept_rate", r.accept_rate},
        {"mean_queries", r.mean_queries},
        {"max_queries", r.max_queries},
        {"mean_classical_reads", r.mean_classical_reads},
        {"seconds", r.seconds},
        {"accepted", r.accepted},
        {"accept_ci95", {r.accept_ci.low, r.accept_ci.high}},
        {"skipped", r.skipped ? nlohmann::json(*r.skipped) : nlohmann::json(nullptr)},
    });
  }
  return {{"rows", rows}};
}

void emit_report(const ExperimentReport& report, const std::filesystem::path& path,
                 ReportFormat format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open report for writing: " + path.string());
  if (format == ReportFormat::csv) out << to_csv(report);
  else out << to_json(report).dump(2) << '\n';
  out.flush();
  if (!out) throw std::runtime_error("failed writing report: " + path.string());
}

std::vector<std::string> check_thresholds(const ExperimentReport& report,
                                          const ExperimentConfig& config) {
  std::vector<std::string> failures;
  for (const auto& r : report.rows) {
    if (r.skipped) continue;
    const bool exact_expected = r.mode != Mode::quantum && r.cls == InstanceClass::member;
    double low = 0.0, high = 1.0;
    if (r.cls == InstanceClass::member) {
      low = exact_expected ? 1.0 : config.member_min_accept;
    } else {
      high = r.mode == Mode::exact ? 0.0 : config.far_max_accept;
    }
    if (r.accept_rate < low || r.accept_rate > high) {
      std::ostringstream msg;
      msg << "n=" << r.n << " eps=" << r.epsilon << " mode=" << to_string(r.mode)
          << " class=" << to_string(r.cls) << ": accept rate " << r.accept_rate
          << " outside [" << low << ", " << high << "]";
      failures.push_back(msg.str());
    }
  }
  return failures;
}

} // namespace lrev
