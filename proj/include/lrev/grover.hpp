#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "lrev/query_ledger.hpp"
#include "lrev/word.hpp"

namespace lrev {

/// Knobs of the unknown-solution-count (BBHT) schedule.
struct GroverConfig {
  /// Hard cap on total Grover iterations is ceil(cap_multiplier * sqrt(N)).
  double cap_multiplier = 3.0;
  /// Growth of the iteration-count bound M between rounds.
  double growth = 8.0 / 7.0;
};

struct GroverRound {
  std::size_t iterations = 0;
  double success_probability = 0.0;
};

struct GroverOutcome {
  std::optional<std::size_t> found;
  std::size_t iterations_used = 0;
  std::vector<GroverRound> rounds;
};

using Predicate = std::function<bool(std::size_t)>;

/// sin^2((2k+1) theta) with sin theta = sqrt(t/N).
double round_success_probability(std::size_t iterations, std::size_t solutions,
                                 std::size_t domain_size);

std::size_t iteration_cap(std::size_t domain_size, const GroverConfig& config = {});

/// Simulates Grover search over [0, N) in the two-dimensional invariant
/// subspace. The predicate is evaluated privately on the whole domain to get
/// the solution count; that sweep is not charged. Each Grover iteration and
/// each final measurement charge one predicate call of cost_per_call queries.
/// With no solutions the full cap is charged and nothing is found.
GroverOutcome grover_search(std::size_t domain_size, const Predicate& predicate,
                            std::size_t cost_per_call, Rng& rng, QueryLedger& ledger,
                            const GroverConfig& config = {});

/// Exact probability that grover_search fails to find one of t >= 1
/// solutions, summed over the random schedule (dynamic programming over the
/// iterations spent so far).
double failure_probability(std::size_t domain_size, std::size_t solutions,
                           const GroverConfig& config = {});

} // namespace lrev
