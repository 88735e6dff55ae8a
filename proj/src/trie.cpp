#include "lrev/trie.hpp"

#include "lrev/error.hpp"

namespace lrev {

Trie::Trie(unsigned alphabet_size) : alphabet_(alphabet_size) {
  require(alphabet_ >= 1 && alphabet_ <= kMaxAlphabet, "alphabet size must be in [1, 10]");
  new_node();
}

std::size_t Trie::new_node() {
  children_.insert(children_.end(), alphabet_, kNone);
  terminal_.push_back(false);
  return terminal_.size() - 1;
}

void Trie::add(std::span<const Symbol> s) {
  std::size_t node = 0;
  for (Symbol c : s) {
    require(c < alphabet_, "symbol outside trie alphabet");
    auto slot = node * alphabet_ + c;
    if (children_[slot] == kNone) {
      const auto child = new_node();
      children_[slot] = static_cast<std::int32_t>(child);
    }
    node = static_cast<std::size_t>(children_[slot]);
  }
  if (!terminal_[node]) {
    terminal_[node] = true;
    ++stored_;
  }
}

bool Trie::contains(std::span<const Symbol> s, QueryLedger* ledger) const {
  std::size_t node = 0;
  for (Symbol c : s) {
    charge_read(ledger);
    if (c >= alphabet_) return false;
    const auto next = children_[node * alphabet_ + c];
    if (next == kNone) return false;
    node = static_cast<std::size_t>(next);
  }
  return terminal_[node];
}

} // namespace lrev
