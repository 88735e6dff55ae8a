#include "lrev/distance.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include <unsupported/Eigen/FFT>

#include "lrev/error.hpp"

namespace lrev {

namespace {

void require_distance_domain(const Word& x) {
  require(is_membership_length(x.size()),
          "distance needs even n >= 4, got " + std::to_string(x.size()));
}

// Mismatched pairs of x[begin, end) around its center.
std::size_t palindrome_defect(const Word& x, std::size_t begin, std::size_t end) {
  std::size_t bad = 0;
  for (std::size_t i = begin, j = end - 1; i < j; ++i, --j) bad += x[i] != x[j];
  return bad;
}

} // namespace

DistanceResult distance_baseline(const Word& x) {
  require_distance_domain(x);
  const std::size_t n = x.size();
  DistanceResult best{std::numeric_limits<std::size_t>::max(), {}};
  for (std::size_t a = 1; a < n / 2; ++a) {
    const std::size_t d = palindrome_defect(x, 0, 2 * a) + palindrome_defect(x, 2 * a, n);
    if (d < best.distance) best = {d, {a, n / 2 - a}};
  }
  return best;
}

std::vector<std::size_t> mismatches_by_pair_sum(const Word& x) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  const std::size_t sums = 2 * n - 1;
  std::size_t len = 1;
  while (len < sums) len <<= 1;

  Eigen::FFT<double> fft;
  std::vector<double> equal(sums, 0.0);
  std::vector<double> indicator(len);
  std::vector<std::complex<double>> spectrum;
  std::vector<double> product;
  for (unsigned c = 0; c < x.alphabet_size(); ++c) {
    bool present = false;
    for (std::size_t i = 0; i < len; ++i) {
      indicator[i] = (i < n && x[i] == c) ? 1.0 : 0.0;
      present = present || indicator[i] != 0.0;
    }
    if (!present) continue;
    fft.fwd(spectrum, indicator);
    for (auto& z : spectrum) z *= z;
    fft.inv(product, spectrum);
    for (std::size_t s = 0; s < sums; ++s) equal[s] += product[s];
  }

  std::vector<std::size_t> out(sums);
  for (std::size_t s = 0; s < sums; ++s) {
    // Ordered pairs (i, s-i) with both in [0, n).
    const std::size_t pairs = std::min(s, 2 * n - 2 - s) + 1;
    const auto same = static_cast<std::size_t>(std::llround(equal[s]));
    out[s] = (pairs - same) / 2;
  }
  return out;
}

DistanceResult distance_fast(const Word& x) {
  require_distance_domain(x);
  const std::size_t n = x.size();
  const auto mismatches = mismatches_by_pair_sum(x);
  DistanceResult best{std::numeric_limits<std::size_t>::max(), {}};
  for (std::size_t a = 1; a < n / 2; ++a) {
    // Left half pairs sum to 2a-1; right half pairs sum to 2a+n-1.
    const std::size_t d = mismatches[2 * a - 1] + mismatches[n - 1 + 2 * a];
    if (d < best.distance) best = {d, {a, n / 2 - a}};
  }
  return best;
}

DistanceResult distance_to_language(const Word& x) {
  return x.size() > kFastDistanceThreshold ? distance_fast(x) : distance_baseline(x);
}

std::size_t far_threshold(std::size_t n, double epsilon) {
  const double product = epsilon * static_cast<double>(n);
  return static_cast<std::size_t>(std::ceil(product - 1e-9));
}

bool is_eps_far(const Word& x, double epsilon) {
  return distance_to_language(x).distance >= far_threshold(x.size(), epsilon);
}

Word repair(const Word& x, const Decomposition& split) {
  const std::size_t n = x.size();
  require(split.half_u >= 1 && split.half_v >= 1 && 2 * (split.half_u + split.half_v) == n,
          "split does not match word length");
  std::vector<Symbol> symbols(x.symbols().begin(), x.symbols().end());
  auto mirror = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin, j = end - 1; i < j; ++i, --j) symbols[j] = symbols[i];
  };
  mirror(0, split.split());
  mirror(split.split(), n);
  return Word(std::move(symbols), x.alphabet_size());
}

} // namespace lrev
