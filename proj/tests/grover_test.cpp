#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "lrev/error.hpp"
#include "lrev/grover.hpp"

using namespace lrev;

namespace {

Predicate below(std::size_t t) {
  return [t](std::size_t j) { return j < t; };
}

long double reference_probability(std::size_t k, std::size_t t, std::size_t n) {
  const long double theta = std::asin(std::sqrt(static_cast<long double>(t) / n));
  const long double s = std::sin((2.0L * k + 1.0L) * theta);
  return s * s;
}

} // namespace

TEST_CASE("round success probability") {
  // N=4, t=1: theta = pi/6 and one iteration lands on the solution.
  CHECK(round_success_probability(1, 1, 4) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(round_success_probability(0, 1, 4) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(round_success_probability(0, 7, 7) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(round_success_probability(5, 0, 9) == 0.0);

  for (std::size_t n : {1UL, 2UL, 16UL, 64UL, 256UL, 1000UL, 65536UL, 1000000UL}) {
    for (std::size_t t : {1UL, 2UL, 3UL, 16UL}) {
      if (t > n) continue;
      for (std::size_t k = 0; k <= 3000; k += 7) {
        const long double expected = reference_probability(k, t, n);
        REQUIRE(std::abs(round_success_probability(k, t, n) - static_cast<double>(expected)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("iteration cap") {
  CHECK(iteration_cap(1) == 3);
  CHECK(iteration_cap(4) == 6);
  CHECK(iteration_cap(64) == 24);
  CHECK(iteration_cap(2) == 5);
  CHECK(iteration_cap(100, {.cap_multiplier = 2.0}) == 20);
}

TEST_CASE("no solutions: never found, full cap charged") {
  Rng rng(1);
  for (std::size_t n : {1UL, 5UL, 64UL, 1000UL}) {
    for (int run = 0; run < 200; ++run) {
      QueryLedger ledger;
      const auto out = grover_search(n, below(0), 7, rng, ledger);
      REQUIRE_FALSE(out.found.has_value());
      REQUIRE(out.iterations_used == iteration_cap(n));
      REQUIRE(ledger.quantum_charged == iteration_cap(n) * 7);
      REQUIRE(ledger.classical_reads == 0);
    }
  }
}

TEST_CASE("all indices are solutions: the first measurement succeeds") {
  Rng rng(2);
  for (int run = 0; run < 100; ++run) {
    QueryLedger ledger;
    const auto out = grover_search(37, below(37), 5, rng, ledger);
    REQUIRE(out.found.has_value());
    REQUIRE(out.iterations_used == 0);
    REQUIRE(out.rounds.size() == 1);
    REQUIRE(ledger.quantum_charged == 5);
  }
}

TEST_CASE("empty domain is rejected") {
  Rng rng(3);
  QueryLedger ledger;
  CHECK_THROWS_AS(grover_search(0, below(0), 1, rng, ledger), ContractViolation);
}

TEST_CASE("found indices satisfy the predicate and costs stay bounded") {
  Rng rng(4);
  const std::set<std::size_t> solutions{5, 77, 300};
  const Predicate pred = [&](std::size_t j) { return solutions.contains(j); };
  const std::size_t n = 400, cost = 3;
  for (int run = 0; run < 2000; ++run) {
    QueryLedger ledger;
    const auto out = grover_search(n, pred, cost, rng, ledger);
    if (out.found) REQUIRE(solutions.contains(*out.found));
    REQUIRE(out.iterations_used <= iteration_cap(n));
    REQUIRE(ledger.quantum_charged <= (iteration_cap(n) + out.rounds.size()) * cost);
    REQUIRE(static_cast<double>(ledger.quantum_charged) <=
            (3.0 * std::sqrt(static_cast<double>(n)) + static_cast<double>(out.rounds.size())) * cost);
    REQUIRE(ledger.predicate_calls * cost == ledger.quantum_charged);
    for (const auto& r : out.rounds) {
      REQUIRE(r.success_probability == doctest::Approx(round_success_probability(r.iterations, 3, n)));
    }
  }
}

TEST_CASE("empirical found rate matches the analytic success probability") {
  const std::vector<std::pair<std::size_t, std::size_t>> cells{{16, 1}, {64, 1}, {64, 4}, {256, 16}};
  Rng rng(2024);
  constexpr int kRuns = 10000;
  for (auto [n, t] : cells) {
    int found = 0;
    for (int run = 0; run < kRuns; ++run) {
      QueryLedger ledger;
      found += grover_search(n, below(t), 1, rng, ledger).found.has_value();
    }
    const double p = 1.0 - failure_probability(n, t);
    const double se = std::sqrt(p * (1.0 - p) / kRuns);
    const double rate = static_cast<double>(found) / kRuns;
    INFO("N=" << n << " t=" << t << " rate=" << rate << " analytic=" << p);
    // 0.5/runs: continuity correction, the band is otherwise below one count
    CHECK(std::abs(rate - p) <= 3.0 * se + 0.5 / kRuns);
  }
}

TEST_CASE("failure rate over a large sample matches the exact failure probability") {
  Rng rng(5);
  constexpr long kRuns = 1'000'000;
  long failures = 0;
  for (long run = 0; run < kRuns; ++run) {
    QueryLedger ledger;
    failures += !grover_search(64, below(4), 1, rng, ledger).found.has_value();
  }
  const double expected = failure_probability(64, 4) * kRuns;
  CHECK(std::abs(static_cast<double>(failures) - expected) <= 3.0 * std::sqrt(expected));
}

TEST_CASE("per-round success frequencies follow sin^2((2k+1) theta)") {
  Rng rng(77);
  const std::size_t n = 64, t = 1;
  std::map<std::size_t, std::pair<int, int>> by_k; // k -> (successes, rounds)
  for (int run = 0; run < 10000; ++run) {
    QueryLedger ledger;
    const auto out = grover_search(n, below(t), 1, rng, ledger);
    for (std::size_t r = 0; r < out.rounds.size(); ++r) {
      auto& [hit, total] = by_k[out.rounds[r].iterations];
      ++total;
      hit += (r + 1 == out.rounds.size() && out.found) ? 1 : 0;
    }
  }
  for (const auto& [k, counts] : by_k) {
    const auto [hit, total] = counts;
    if (total < 200) continue;
    const double p = round_success_probability(k, t, n);
    const double se = std::sqrt(p * (1.0 - p) / total);
    INFO("k=" << k << " rounds=" << total);
    CHECK(std::abs(static_cast<double>(hit) / total - p) <= 3.0 * se + 1e-12);
  }
}

TEST_CASE("returned index is uniform over the solutions") {
  Rng rng(31337);
  const std::vector<std::size_t> solutions{3, 17, 40, 63};
  const Predicate pred = [&](std::size_t j) {
    return std::find(solutions.begin(), solutions.end(), j) != solutions.end();
  };
  std::map<std::size_t, int> counts;
  int found = 0;
  for (int run = 0; run < 10000; ++run) {
    QueryLedger ledger;
    const auto out = grover_search(64, pred, 1, rng, ledger);
    if (out.found) {
      ++counts[*out.found];
      ++found;
    }
  }
  const double expected = found / 4.0;
  double chi2 = 0.0;
  for (auto s : solutions) chi2 += std::pow(counts[s] - expected, 2) / expected;
  // chi-square critical value, 3 degrees of freedom, alpha = 0.01
  CHECK(chi2 < 11.345);
}

TEST_CASE("failure probability stays below 0.1 up to N = 1e6") {
  const std::vector<std::size_t> sizes{1, 2, 3, 4, 5, 7, 8, 16, 31, 64, 100, 256, 1000, 4096,
                                       10000, 65536, 100000, 1000000};
  double worst = 0.0;
  for (auto n : sizes) {
    for (std::size_t t : {1UL, 2UL, 3UL, 5UL, 17UL, n / 4, n / 2, n}) {
      if (t < 1 || t > n) continue;
      const double f = failure_probability(n, t);
      INFO("N=" << n << " t=" << t << " failure=" << f);
      REQUIRE(f >= 0.0);
      CHECK(f <= 0.1);
      worst = std::max(worst, f);
    }
  }
  MESSAGE("worst failure probability on grid: " << worst);
}
