#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrev/query_ledger.hpp"

namespace lrev {

using Symbol = std::uint8_t;
using Rng = std::mt19937_64;

inline constexpr unsigned kBinary = 2;
inline constexpr unsigned kMaxAlphabet = 10; // one decimal digit per symbol in text form

/// A finite word over {0, ..., alphabet_size-1}. Immutable after construction.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols, unsigned alphabet_size = kBinary);

  /// Parses an ASCII digit string such as "0110".
  static Word parse(std::string_view digits, unsigned alphabet_size = kBinary);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  unsigned alphabet_size() const { return alphabet_; }

  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  /// Bounds-checked read that records one classical read on the ledger.
  Symbol read(std::size_t i, QueryLedger* ledger) const;

  std::span<const Symbol> symbols() const { return symbols_; }
  std::string str() const;

  bool operator==(const Word& other) const { return symbols_ == other.symbols_; }

private:
  std::vector<Symbol> symbols_;
  unsigned alphabet_ = kBinary;
};

Word reverse(const Word& w);

/// Split of a member into u u^r | v v^r, by the half lengths |u| and |v|.
struct Decomposition {
  std::size_t half_u = 0;
  std::size_t half_v = 0;

  std::size_t split() const { return 2 * half_u; }
  bool operator==(const Decomposition&) const = default;
};

/// y(x) = x_1..x_{n-1} x_0..x_{n-2}, accessed without materializing it.
class RotatedDoubledView {
public:
  explicit RotatedDoubledView(const Word& base, QueryLedger* ledger = nullptr);

  std::size_t size() const { return base_->size() * 2 - 2; }
  /// Throws ContractViolation when i is outside [0, 2n-2).
  Symbol get(std::size_t i) const;
  Symbol operator[](std::size_t i) const { return get(i); }

private:
  const Word* base_;
  QueryLedger* ledger_;
};

inline Symbol get_y(const RotatedDoubledView& view, std::size_t i) { return view.get(i); }

// Instance generators. All reject odd n and n < 4.

Word make_member(const Word& u, const Word& v);
Word gen_member(std::size_t half_u, std::size_t half_v, Rng& rng,
                unsigned alphabet_size = kBinary);
/// Member with a uniformly random split for a given even n >= 4.
Word gen_member_of_length(std::size_t n, Rng& rng, unsigned alphabet_size = kBinary);
Word gen_sigma(std::size_t n);
Word gen_gamma(std::size_t n, std::size_t position);
Word gen_uniform(std::size_t n, Rng& rng, unsigned alphabet_size = kBinary);

inline constexpr std::size_t kDefaultFarAttempts = 1000;

/// Rejection-samples uniform words until one is certified at distance
/// >= ceil(epsilon * n) from the language. Throws NoFarInstance otherwise.
Word gen_far(std::size_t n, double epsilon, Rng& rng,
             std::size_t max_attempts = kDefaultFarAttempts,
             unsigned alphabet_size = kBinary);

bool is_membership_length(std::size_t n);

} // namespace lrev
