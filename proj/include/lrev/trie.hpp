#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lrev/error.hpp"
#include "lrev/query_ledger.hpp"
#include "lrev/word.hpp"

namespace lrev {

/// Exact-match set of symbol strings. Children are indexed directly by
/// symbol code, so add and contains walk one node per symbol.
class Trie {
public:
  explicit Trie(unsigned alphabet_size = kBinary);

  /// Idempotent. O(|s|).
  void add(std::span<const Symbol> s);
  /// Reads at most |s| symbols of s; each read is recorded on the ledger.
  bool contains(std::span<const Symbol> s, QueryLedger* ledger = nullptr) const;

  std::size_t stored_count() const { return stored_; }
  std::size_t node_count() const { return terminal_.size(); }
  unsigned alphabet_size() const { return alphabet_; }

private:
  static constexpr std::int32_t kNone = -1;

  std::size_t new_node();

  unsigned alphabet_;
  std::vector<std::int32_t> children_; // node * alphabet_ + symbol
  std::vector<bool> terminal_;
  std::size_t stored_ = 0;
};

inline Trie init_trie(unsigned alphabet_size = kBinary) { return Trie(alphabet_size); }
inline void add_to_trie(Trie& t, std::span<const Symbol> s) { t.add(s); }
inline bool contains(const Trie& t, std::span<const Symbol> s) { return t.contains(s); }

} // namespace lrev
