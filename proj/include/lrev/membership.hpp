#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <vector>

#include "lrev/error.hpp"
#include "lrev/query_ledger.hpp"
#include "lrev/word.hpp"

namespace lrev {

struct MembershipResult {
  bool is_member = false;
  std::optional<Decomposition> witness;
};

/// Anything that hands out symbols by index: Word, RotatedDoubledView, ...
template <typename T>
concept SymbolSource = requires(const T& source, std::size_t i) {
  { source[i] } -> std::convertible_to<Symbol>;
};

/// KMP failure table: fail[q] is the length of the longest proper border
/// of pattern[0..q].
std::vector<std::size_t> kmp_failure(const Word& pattern);

/// Calls on_match(start) for every occurrence of pattern in text[0, text_len),
/// in increasing order, until it returns true. Each text position is read
/// exactly once. Returns the accepted start, if any.
template <SymbolSource Text, typename OnMatch>
std::optional<std::size_t> kmp_scan(const Word& pattern, const Text& text,
                                    std::size_t text_len, OnMatch&& on_match) {
  const std::size_t m = pattern.size();
  require(m >= 1, "kmp: empty pattern");
  const auto fail = kmp_failure(pattern);
  std::size_t q = 0;
  for (std::size_t i = 0; i < text_len; ++i) {
    const Symbol c = text[i];
    while (q > 0 && pattern[q] != c) q = fail[q - 1];
    if (pattern[q] == c) ++q;
    if (q == m) {
      const std::size_t start = i + 1 - m;
      if (on_match(start)) return start;
      q = fail[q - 1];
    }
  }
  return std::nullopt;
}

template <SymbolSource Text>
std::optional<std::size_t> kmp_search(const Word& pattern, const Text& text,
                                      std::size_t text_len) {
  return kmp_scan(pattern, text, text_len, [](std::size_t) { return true; });
}

/// Ground truth: tries every even split and checks both halves directly.
MembershipResult brute_force_member(const Word& x);

/// Linear-time decider: x is a member iff x^r occurs in y(x) at an odd
/// start i, and then |u| = (i+1)/2. Reads are recorded on the ledger.
MembershipResult exact_member(const Word& x, QueryLedger* ledger = nullptr);

bool is_even_palindrome(std::span<const Symbol> s);

/// True iff x_i == x_j for every pair with i + j = 2|u| - 1 (mod n).
bool check_symmetric_characterization(const Word& x, const Decomposition& d);

/// Every split of x into two even palindromes (ordered by |u|).
std::vector<Decomposition> all_decompositions(const Word& x);

} // namespace lrev
