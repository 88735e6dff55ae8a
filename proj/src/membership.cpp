#include "lrev/membership.hpp"

namespace lrev {

std::vector<std::size_t> kmp_failure(const Word& pattern) {
  const std::size_t m = pattern.size();
  std::vector<std::size_t> fail(m, 0);
  std::size_t k = 0;
  for (std::size_t q = 1; q < m; ++q) {
    while (k > 0 && pattern[k] != pattern[q]) k = fail[k - 1];
    if (pattern[k] == pattern[q]) ++k;
    fail[q] = k;
  }
  return fail;
}

bool is_even_palindrome(std::span<const Symbol> s) {
  if (s.empty() || s.size() % 2 != 0) return false;
  for (std::size_t i = 0, j = s.size() - 1; i < j; ++i, --j) {
    if (s[i] != s[j]) return false;
  }
  return true;
}

std::vector<Decomposition> all_decompositions(const Word& x) {
  std::vector<Decomposition> out;
  const std::size_t n = x.size();
  if (!is_membership_length(n)) return out;
  const auto s = x.symbols();
  for (std::size_t a = 1; a < n / 2; ++a) {
    if (is_even_palindrome(s.first(2 * a)) && is_even_palindrome(s.subspan(2 * a))) {
      out.push_back({a, n / 2 - a});
    }
  }
  return out;
}

MembershipResult brute_force_member(const Word& x) {
  const std::size_t n = x.size();
  if (!is_membership_length(n)) return {};
  const auto s = x.symbols();
  for (std::size_t a = 1; a < n / 2; ++a) {
    if (is_even_palindrome(s.first(2 * a)) && is_even_palindrome(s.subspan(2 * a))) {
      return {true, Decomposition{a, n / 2 - a}};
    }
  }
  return {};
}

MembershipResult exact_member(const Word& x, QueryLedger* ledger) {
  const std::size_t n = x.size();
  if (!is_membership_length(n)) return {};

  // Building x^r reads every input symbol once.
  charge_read(ledger, n);
  const Word pattern = reverse(x);
  const RotatedDoubledView y(x, ledger);

  // A match starting at i certifies palindromes x[0..i] and x[i+1..n); both
  // are even exactly when i is odd. i <= n-2 always holds since |y| = 2n-2.
  const auto start = kmp_scan(pattern, y, y.size(), [](std::size_t i) { return i % 2 == 1; });
  if (!start) return {};
  const std::size_t half_u = (*start + 1) / 2;
  return {true, Decomposition{half_u, n / 2 - half_u}};
}

bool check_symmetric_characterization(const Word& x, const Decomposition& d) {
  const std::size_t n = x.size();
  require(n > 0 && d.half_u >= 1 && 2 * (d.half_u + d.half_v) == n,
          "decomposition does not match word length");
  const std::size_t target = 2 * d.half_u - 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (target + n - i) % n;
    if (x[i] != x[j]) return false;
  }
  return true;
}

} // namespace lrev
