#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lrev/grover.hpp"
#include "lrev/query_ledger.hpp"
#include "lrev/word.hpp"

namespace lrev {

/// Random offsets p_1..p_m, drawn with replacement from [0, n).
struct OffsetSample {
  std::vector<std::size_t> offsets;

  std::size_t m() const { return offsets.size(); }
};

/// m = ceil((2/epsilon) * log2 n).
std::size_t sample_size(std::size_t n, double epsilon);
OffsetSample draw_offsets(std::size_t n, std::size_t m, Rng& rng);

/// floor(cbrt(v)), exact for all 64-bit v.
std::uint64_t integer_cbrt(std::uint64_t v);
/// ceil(sqrt(v)), exact.
std::uint64_t integer_sqrt_ceil(std::uint64_t v);

/// Meet-in-the-middle grids: the left set is {0, ..., step-1}, the right set
/// is every multiple of step in [0, n). Any target t < n is left + right.
struct IndexGrids {
  std::size_t n = 0;
  std::size_t step = 1;

  std::size_t left_count() const { return step; }
  std::size_t right_count() const { return (n + step - 1) / step; }
  std::size_t right(std::size_t alpha) const { return alpha * step; }
  std::vector<std::size_t> left_set() const;
  std::vector<std::size_t> right_set() const;
};

/// step = floor(n^{1/3}).
IndexGrids quantum_grids(std::size_t n);
/// step = ceil(sqrt n).
IndexGrids classical_grids(std::size_t n);

/// (x_{(i-p_1) mod n}, ..., x_{(i-p_m) mod n}); charges m classical reads.
std::vector<Symbol> left_string(const Word& x, std::size_t i, const OffsetSample& offsets,
                                QueryLedger* ledger = nullptr);
/// (x_{(j+p_1) mod n}, ..., x_{(j+p_m) mod n}); charges m classical reads.
std::vector<Symbol> right_string(const Word& x, std::size_t j, const OffsetSample& offsets,
                                 QueryLedger* ledger = nullptr);

struct Verdict {
  bool accept = false;
  QueryLedger ledger;
  std::optional<std::pair<std::size_t, std::size_t>> found_pair;
  std::size_t m = 0;
};

/// Quantum tester: trie of left strings over the cube-root grid, then a
/// simulated Grover search for a right string present in the trie.
Verdict quantum_test(const Word& x, double epsilon, Rng& rng, const GroverConfig& config = {});

/// Classical baseline on square-root grids with a linear scan instead of
/// Grover. Never rejects a member.
Verdict classical_test(const Word& x, double epsilon, Rng& rng);

} // namespace lrev
