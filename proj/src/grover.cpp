#include "lrev/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lrev/error.hpp"

namespace lrev {

namespace {

double rotation_angle(std::size_t solutions, std::size_t domain_size) {
  return std::asin(std::sqrt(static_cast<double>(solutions) / static_cast<double>(domain_size)));
}

// Rounds draw k uniformly from the integers below M.
std::size_t draw_bound(double bound) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(bound - 1e-12)));
}

} // namespace

double round_success_probability(std::size_t iterations, std::size_t solutions,
                                 std::size_t domain_size) {
  require(domain_size >= 1 && solutions <= domain_size, "need 0 <= t <= N, N >= 1");
  const double theta = rotation_angle(solutions, domain_size);
  const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
  return s * s;
}

std::size_t iteration_cap(std::size_t domain_size, const GroverConfig& config) {
  return static_cast<std::size_t>(
      std::ceil(config.cap_multiplier * std::sqrt(static_cast<double>(domain_size)) - 1e-9));
}

GroverOutcome grover_search(std::size_t domain_size, const Predicate& predicate,
                            std::size_t cost_per_call, Rng& rng, QueryLedger& ledger,
                            const GroverConfig& config) {
  require(domain_size >= 1, "Grover search over an empty domain");
  require(config.growth > 1.0 && config.cap_multiplier > 0.0, "invalid Grover schedule");

  // Uncharged: the simulator needs the solution set for the amplitude math.
  std::vector<std::size_t> solutions;
  for (std::size_t j = 0; j < domain_size; ++j) {
    if (predicate(j)) solutions.push_back(j);
  }

  const std::size_t cap = iteration_cap(domain_size, config);
  GroverOutcome outcome;
  if (solutions.empty()) {
    ledger.quantum_charged += cap * cost_per_call;
    ledger.predicate_calls += cap;
    outcome.iterations_used = cap;
    return outcome;
  }

  const double theta = rotation_angle(solutions.size(), domain_size);
  const double bound_ceiling = std::sqrt(static_cast<double>(domain_size));
  double bound = 1.0;
  std::bernoulli_distribution coin;
  while (true) {
    std::uniform_int_distribution<std::size_t> draw(0, draw_bound(bound) - 1);
    const std::size_t k = std::min(draw(rng), cap - outcome.iterations_used);
    const double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * theta);
    const double p = s * s;

    // k oracle applications plus the predicate call verifying the measurement.
    ledger.quantum_charged += (k + 1) * cost_per_call;
    ledger.predicate_calls += k + 1;
    outcome.iterations_used += k;
    outcome.rounds.push_back({k, p});

    if (coin(rng, std::bernoulli_distribution::param_type(std::min(p, 1.0)))) {
      std::uniform_int_distribution<std::size_t> pick(0, solutions.size() - 1);
      outcome.found = solutions[pick(rng)];
      return outcome;
    }
    if (outcome.iterations_used >= cap) return outcome;
    bound = std::min(bound * config.growth, bound_ceiling);
  }
}

double failure_probability(std::size_t domain_size, std::size_t solutions,
                           const GroverConfig& config) {
  require(domain_size >= 1 && solutions >= 1 && solutions <= domain_size,
          "failure probability needs 1 <= t <= N");
  const std::size_t cap = iteration_cap(domain_size, config);
  const double theta = rotation_angle(solutions, domain_size);
  const double bound_ceiling = std::sqrt(static_cast<double>(domain_size));

  std::vector<double> round_failure(cap + 1);
  for (std::size_t k = 0; k <= cap; ++k) {
    const double c = std::cos((2.0 * static_cast<double>(k) + 1.0) * theta);
    round_failure[k] = c * c;
  }

  // live[u]: probability of still searching after spending u iterations.
  std::vector<double> live(cap + 1, 0.0), next(cap + 1);
  live[0] = 1.0;
  double failed = 0.0;
  double bound = 1.0;
  constexpr double kNegligible = 1e-18;
  constexpr std::size_t kMaxRounds = 1'000'000;
  for (std::size_t round = 0; round < kMaxRounds; ++round) {
    const double mass = std::accumulate(live.begin(), live.end(), 0.0);
    if (mass < kNegligible) return failed + mass;
    const std::size_t draws = draw_bound(bound);
    const double weight = 1.0 / static_cast<double>(draws);
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t u = 0; u < cap; ++u) {
      if (live[u] == 0.0) continue;
      const double w = live[u] * weight;
      for (std::size_t k = 0; k < draws; ++k) {
        const std::size_t spent = std::min(k, cap - u);
        next[u + spent] += w * round_failure[spent];
      }
    }
    failed += next[cap];
    next[cap] = 0.0;
    live.swap(next);
    bound = std::min(bound * config.growth, bound_ceiling);
  }
  return failed + std::accumulate(live.begin(), live.end(), 0.0);
}

} // namespace lrev
