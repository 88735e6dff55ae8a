#include "lrev/word.hpp"

#include <algorithm>
#include <string>

#include "lrev/distance.hpp"
#include "lrev/error.hpp"

namespace lrev {

Word::Word(std::vector<Symbol> symbols, unsigned alphabet_size)
    : symbols_(std::move(symbols)), alphabet_(alphabet_size) {
  require(alphabet_ >= 1 && alphabet_ <= kMaxAlphabet, "alphabet size must be in [1, 10]");
  for (Symbol s : symbols_) {
    require(s < alphabet_, "symbol " + std::to_string(s) + " outside alphabet of size " +
                               std::to_string(alphabet_));
  }
}

Word Word::parse(std::string_view digits, unsigned alphabet_size) {
  std::vector<Symbol> symbols;
  symbols.reserve(digits.size());
  for (char c : digits) {
    require(c >= '0' && c <= '9', std::string("not a symbol digit: '") + c + "'");
    symbols.push_back(static_cast<Symbol>(c - '0'));
  }
  return Word(std::move(symbols), alphabet_size);
}

Symbol Word::read(std::size_t i, QueryLedger* ledger) const {
  require(i < symbols_.size(), "word index out of range");
  charge_read(ledger);
  return symbols_[i];
}

std::string Word::str() const {
  std::string out(symbols_.size(), '0');
  std::transform(symbols_.begin(), symbols_.end(), out.begin(),
                 [](Symbol s) { return static_cast<char>('0' + s); });
  return out;
}

Word reverse(const Word& w) {
  std::vector<Symbol> symbols(w.symbols().rbegin(), w.symbols().rend());
  return Word(std::move(symbols), w.alphabet_size());
}

RotatedDoubledView::RotatedDoubledView(const Word& base, QueryLedger* ledger)
    : base_(&base), ledger_(ledger) {
  require(base.size() >= 2, "y(x) needs n >= 2");
}

Symbol RotatedDoubledView::get(std::size_t i) const {
  const std::size_t n = base_->size();
  require(i < 2 * n - 2, "y(x) index out of range");
  charge_read(ledger_);
  return i < n - 1 ? (*base_)[i + 1] : (*base_)[i - (n - 1)];
}

bool is_membership_length(std::size_t n) { return n >= 4 && n % 2 == 0; }

namespace {

void require_membership_length(std::size_t n) {
  require(is_membership_length(n), "length must be even and at least 4, got " + std::to_string(n));
}

} // namespace

Word gen_uniform(std::size_t n, Rng& rng, unsigned alphabet_size) {
  std::uniform_int_distribution<unsigned> symbol(0, alphabet_size - 1);
  std::vector<Symbol> symbols(n);
  for (auto& s : symbols) s = static_cast<Symbol>(symbol(rng));
  return Word(std::move(symbols), alphabet_size);
}

Word make_member(const Word& u, const Word& v) {
  require(!u.empty() && !v.empty(), "u and v must be nonempty");
  require(u.alphabet_size() == v.alphabet_size(), "u and v must share an alphabet");
  std::vector<Symbol> out;
  out.reserve(2 * (u.size() + v.size()));
  out.insert(out.end(), u.symbols().begin(), u.symbols().end());
  out.insert(out.end(), u.symbols().rbegin(), u.symbols().rend());
  out.insert(out.end(), v.symbols().begin(), v.symbols().end());
  out.insert(out.end(), v.symbols().rbegin(), v.symbols().rend());
  return Word(std::move(out), u.alphabet_size());
}

Word gen_member(std::size_t half_u, std::size_t half_v, Rng& rng, unsigned alphabet_size) {
  require(half_u >= 1 && half_v >= 1, "half lengths must be at least 1");
  const Word u = gen_uniform(half_u, rng, alphabet_size);
  const Word v = gen_uniform(half_v, rng, alphabet_size);
  return make_member(u, v);
}

Word gen_member_of_length(std::size_t n, Rng& rng, unsigned alphabet_size) {
  require_membership_length(n);
  std::uniform_int_distribution<std::size_t> half_u(1, n / 2 - 1);
  const std::size_t a = half_u(rng);
  return gen_member(a, n / 2 - a, rng, alphabet_size);
}

Word gen_sigma(std::size_t n) {
  require_membership_length(n);
  return Word(std::vector<Symbol>(n, 0));
}

Word gen_gamma(std::size_t n, std::size_t position) {
  require_membership_length(n);
  require(position < n, "gamma position out of range");
  std::vector<Symbol> symbols(n, 0);
  symbols[position] = 1;
  return Word(std::move(symbols));
}

Word gen_far(std::size_t n, double epsilon, Rng& rng, std::size_t max_attempts,
             unsigned alphabet_size) {
  require_membership_length(n);
  require(epsilon > 0.0 && epsilon < 1.0, "epsilon must be in (0, 1)");
  const std::size_t threshold = far_threshold(n, epsilon);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    Word candidate = gen_uniform(n, rng, alphabet_size);
    if (distance_to_language(candidate).distance >= threshold) return candidate;
  }
  throw NoFarInstance("no " + std::to_string(epsilon) + "-far word of length " +
                      std::to_string(n) + " found in " + std::to_string(max_attempts) +
                      " attempts");
}

} // namespace lrev
