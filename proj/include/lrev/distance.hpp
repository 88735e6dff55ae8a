#pragma once

#include <cstddef>
#include <vector>

#include "lrev/word.hpp"

namespace lrev {

struct DistanceResult {
  std::size_t distance = 0;
  Decomposition best_split;

  bool operator==(const DistanceResult&) const = default;
};

/// Above this length distance_to_language uses the FFT path.
inline constexpr std::size_t kFastDistanceThreshold = 2048;

/// Hamming distance from x to the language, O(n^2). Ties go to the smallest |u|.
DistanceResult distance_baseline(const Word& x);

/// Same result in O(n log n): for every pair-sum s, the number of equal
/// ordered pairs (i, s-i) comes from self-convolving the indicator of each
/// symbol.
DistanceResult distance_fast(const Word& x);

DistanceResult distance_to_language(const Word& x);

/// Mismatched pairs of x at every pair sum s in [0, 2n-1), counted unordered.
std::vector<std::size_t> mismatches_by_pair_sum(const Word& x);

/// ceil(epsilon * n), tolerant of representation error in the product.
std::size_t far_threshold(std::size_t n, double epsilon);

bool is_eps_far(const Word& x, double epsilon);

/// Member obtained by overwriting the second element of every mismatched
/// pair of the split; differs from x in exactly the split's mismatch count.
Word repair(const Word& x, const Decomposition& split);

} // namespace lrev
