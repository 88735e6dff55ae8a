// lrev: command-line front end for the L_REV deciders, testers and
// experiment runner.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lrev/distance.hpp"
#include "lrev/error.hpp"
#include "lrev/experiment.hpp"
#include "lrev/membership.hpp"
#include "lrev/tester.hpp"

namespace {

using nlohmann::json;

lrev::Word parse_word(const std::string& text) {
  unsigned alphabet = lrev::kBinary;
  for (char c : text) {
    if (c >= '0' && c <= '9') alphabet = std::max(alphabet, static_cast<unsigned>(c - '0') + 1);
  }
  return lrev::Word::parse(text, alphabet);
}

// A word given inline, or a path to a file holding one.
lrev::Word load_word(const std::string& arg) {
  const bool digits = !arg.empty() && std::all_of(arg.begin(), arg.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
  if (digits) return parse_word(arg);
  std::ifstream in(arg);
  if (!in) throw std::runtime_error("not a word and not a readable file: " + arg);
  std::string text, line;
  while (std::getline(in, line)) {
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
    }
  }
  return parse_word(text);
}

json nullable(const std::optional<lrev::Decomposition>& d, std::size_t lrev::Decomposition::*field) {
  return d ? json(*d.*field) : json(nullptr);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Membership, distance and property testing for the language u u^r v v^r"};
  app.require_subcommand(1);

  std::string word_arg;
  auto* member = app.add_subcommand("member", "exact membership with witness");
  member->add_option("word", word_arg, "word as a digit string")->required();

  auto* distance = app.add_subcommand("distance", "Hamming distance to the language");
  distance->add_option("word", word_arg, "word as a digit string")->required();

  double epsilon = 0.1;
  std::string mode = "quantum";
  std::uint64_t seed = 1;
  std::size_t trials = 1;
  auto* test = app.add_subcommand("test", "run the property tester on a word");
  test->add_option("word", word_arg, "digit string or file containing one")->required();
  test->add_option("--epsilon", epsilon, "distance parameter in (0,1)")->required();
  test->add_option("--mode", mode, "quantum | classical | exact")
      ->check(CLI::IsMember({"quantum", "classical", "exact"}));
  test->add_option("--seed", seed, "random seed");
  test->add_option("--trials", trials, "independent runs")->check(CLI::PositiveNumber);

  std::string config_path, out_path, format = "csv";
  std::size_t workers = 0;
  std::optional<std::uint64_t> exp_seed;
  bool assert_thresholds = false;
  auto* experiment = app.add_subcommand("experiment", "run a configured experiment sweep");
  experiment->add_option("--config", config_path, "JSON experiment config")->required();
  experiment->add_option("--out", out_path, "report path (stdout when omitted)");
  experiment->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  experiment->add_option("--workers", workers, "concurrent trials per cell");
  experiment->add_option("--seed", exp_seed, "base seed (overrides config)");
  experiment->add_flag("--assert", assert_thresholds, "fail when accept rates miss thresholds");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*member) {
      const auto x = load_word(word_arg);
      const auto r = lrev::exact_member(x);
      std::cout << json{{"member", r.is_member},
                        {"half_u", nullable(r.witness, &lrev::Decomposition::half_u)},
                        {"half_v", nullable(r.witness, &lrev::Decomposition::half_v)}}
                << '\n';
    } else if (*distance) {
      const auto r = lrev::distance_to_language(load_word(word_arg));
      std::cout << json{{"distance", r.distance},
                        {"half_u", r.best_split.half_u},
                        {"half_v", r.best_split.half_v}}
                << '\n';
    } else if (*test) {
      const auto x = load_word(word_arg);
      if (mode != "exact" && lrev::is_membership_length(x.size()) && epsilon > 0 && epsilon < 1 &&
          lrev::sample_size(x.size(), epsilon) >= x.size()) {
        std::cerr << "warning: m >= n, the tester reads more than the whole word; "
                     "consider --mode exact\n";
      }
      for (std::size_t t = 0; t < trials; ++t) {
        lrev::Rng rng(lrev::trial_seed(seed, 0, t));
        json line{{"trial", t}};
        lrev::QueryLedger ledger;
        if (mode == "exact") {
          line["accept"] = lrev::exact_member(x, &ledger).is_member;
          line["found_pair"] = nullptr;
        } else {
          const auto v = mode == "quantum" ? lrev::quantum_test(x, epsilon, rng)
                                           : lrev::classical_test(x, epsilon, rng);
          ledger = v.ledger;
          line["accept"] = v.accept;
          line["m"] = v.m;
          line["found_pair"] = v.found_pair ? json{v.found_pair->first, v.found_pair->second}
                                            : json(nullptr);
        }
        line["classical_reads"] = ledger.classical_reads;
        line["quantum_charged"] = ledger.quantum_charged;
        line["predicate_calls"] = ledger.predicate_calls;
        line["total_queries"] = ledger.total();
        std::cout << line << '\n';
      }
    } else if (*experiment) {
      auto config = lrev::load_config(config_path);
      if (workers > 0) config.workers = workers;
      if (exp_seed) config.seed = *exp_seed;
      const auto report = lrev::run_experiment(config);
      const auto fmt = format == "json" ? lrev::ReportFormat::json : lrev::ReportFormat::csv;
      if (out_path.empty()) {
        if (fmt == lrev::ReportFormat::csv) std::cout << lrev::to_csv(report);
        else std::cout << lrev::to_json(report).dump(2) << '\n';
      } else {
        lrev::emit_report(report, out_path, fmt);
      }
      if (assert_thresholds) {
        const auto failures = lrev::check_thresholds(report, config);
        for (const auto& f : failures) std::cerr << "threshold: " << f << '\n';
        if (!failures.empty()) return 3;
      }
    }
  } catch (const lrev::ContractViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
