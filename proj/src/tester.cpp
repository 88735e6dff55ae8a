#include "lrev/tester.hpp"

#include <cmath>

#include "lrev/error.hpp"
#include "lrev/trie.hpp"

namespace lrev {

namespace {

void require_tester_domain(const Word& x, double epsilon) {
  require(is_membership_length(x.size()),
          "tester needs even n >= 4, got " + std::to_string(x.size()));
  require(epsilon > 0.0 && epsilon < 1.0, "epsilon must be in (0, 1)");
}

std::optional<std::size_t> find_left(const std::vector<std::vector<Symbol>>& lefts,
                                     const std::vector<Symbol>& s) {
  for (std::size_t i = 0; i < lefts.size(); ++i) {
    if (lefts[i] == s) return i;
  }
  return std::nullopt;
}

} // namespace

std::size_t sample_size(std::size_t n, double epsilon) {
  require(n >= 2, "sample size needs n >= 2");
  require(epsilon > 0.0 && epsilon < 1.0, "epsilon must be in (0, 1)");
  const double m = (2.0 / epsilon) * std::log2(static_cast<double>(n));
  return static_cast<std::size_t>(std::ceil(m - 1e-9));
}

OffsetSample draw_offsets(std::size_t n, std::size_t m, Rng& rng) {
  require(n >= 1, "offsets need n >= 1");
  std::uniform_int_distribution<std::size_t> offset(0, n - 1);
  OffsetSample sample;
  sample.offsets.resize(m);
  for (auto& p : sample.offsets) p = offset(rng);
  return sample;
}

std::uint64_t integer_cbrt(std::uint64_t v) {
  std::uint64_t lo = 0, hi = 2'642'245; // floor(cbrt(2^64 - 1))
  while (lo < hi) {
    const std::uint64_t mid = (lo + hi + 1) / 2;
    if (mid * mid * mid <= v) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

std::uint64_t integer_sqrt_ceil(std::uint64_t v) {
  std::uint64_t lo = 0, hi = 4'294'967'296; // 2^32
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (mid >= 4'294'967'296 || mid * mid >= v) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

std::vector<std::size_t> IndexGrids::left_set() const {
  std::vector<std::size_t> out(left_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::vector<std::size_t> IndexGrids::right_set() const {
  std::vector<std::size_t> out(right_count());
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = right(a);
  return out;
}

IndexGrids quantum_grids(std::size_t n) {
  require(n >= 1, "grids need n >= 1");
  return {n, static_cast<std::size_t>(integer_cbrt(n))};
}

IndexGrids classical_grids(std::size_t n) {
  require(n >= 1, "grids need n >= 1");
  return {n, static_cast<std::size_t>(integer_sqrt_ceil(n))};
}

std::vector<Symbol> left_string(const Word& x, std::size_t i, const OffsetSample& offsets,
                                QueryLedger* ledger) {
  const std::size_t n = x.size();
  require(i < n, "left index out of range");
  std::vector<Symbol> out;
  out.reserve(offsets.m());
  for (std::size_t p : offsets.offsets) out.push_back(x[(i + n - p % n) % n]);
  charge_read(ledger, offsets.m());
  return out;
}

std::vector<Symbol> right_string(const Word& x, std::size_t j, const OffsetSample& offsets,
                                 QueryLedger* ledger) {
  const std::size_t n = x.size();
  require(j < n, "right index out of range");
  std::vector<Symbol> out;
  out.reserve(offsets.m());
  for (std::size_t p : offsets.offsets) out.push_back(x[(j + p) % n]);
  charge_read(ledger, offsets.m());
  return out;
}

Verdict quantum_test(const Word& x, double epsilon, Rng& rng, const GroverConfig& config) {
  require_tester_domain(x, epsilon);
  const std::size_t n = x.size();
  Verdict verdict;
  verdict.m = sample_size(n, epsilon);
  const OffsetSample offsets = draw_offsets(n, verdict.m, rng);
  const IndexGrids grids = quantum_grids(n);

  Trie trie(x.alphabet_size());
  std::vector<std::vector<Symbol>> lefts;
  lefts.reserve(grids.left_count());
  for (std::size_t i = 0; i < grids.left_count(); ++i) {
    lefts.push_back(left_string(x, i, offsets, &verdict.ledger));
    trie.add(lefts.back());
  }

  // Charging happens inside grover_search, per oracle application.
  const Predicate in_trie = [&](std::size_t alpha) {
    return trie.contains(right_string(x, grids.right(alpha), offsets));
  };
  const GroverOutcome outcome =
      grover_search(grids.right_count(), in_trie, verdict.m, rng, verdict.ledger, config);
  if (outcome.found) {
    const std::size_t j = grids.right(*outcome.found);
    const auto i = find_left(lefts, right_string(x, j, offsets));
    verdict.accept = true;
    verdict.found_pair = std::pair{*i, j};
  }
  return verdict;
}

Verdict classical_test(const Word& x, double epsilon, Rng& rng) {
  require_tester_domain(x, epsilon);
  const std::size_t n = x.size();
  Verdict verdict;
  verdict.m = sample_size(n, epsilon);
  const OffsetSample offsets = draw_offsets(n, verdict.m, rng);
  const IndexGrids grids = classical_grids(n);

  Trie trie(x.alphabet_size());
  std::vector<std::vector<Symbol>> lefts;
  lefts.reserve(grids.left_count());
  for (std::size_t i = 0; i < grids.left_count(); ++i) {
    lefts.push_back(left_string(x, i, offsets, &verdict.ledger));
    trie.add(lefts.back());
  }

  for (std::size_t alpha = 0; alpha < grids.right_count(); ++alpha) {
    const std::size_t j = grids.right(alpha);
    const auto s = right_string(x, j, offsets, &verdict.ledger);
    ++verdict.ledger.predicate_calls;
    if (trie.contains(s)) {
      verdict.accept = true;
      verdict.found_pair = std::pair{*find_left(lefts, s), j};
      break;
    }
  }
  return verdict;
}

} // namespace lrev
