#include <doctest.h>

#include "lrev/membership.hpp"
#include "oracles.hpp"

using namespace lrev;

namespace {

std::vector<Symbol> symbols_of(std::string_view s) {
  std::vector<Symbol> out;
  for (char c : s) out.push_back(static_cast<Symbol>(c - '0'));
  return out;
}

struct VectorText {
  const std::vector<Symbol>& v;
  Symbol operator[](std::size_t i) const { return v[i]; }
};

} // namespace

TEST_CASE("brute-force membership examples") {
  const auto zeros = brute_force_member(Word::parse("0000"));
  CHECK(zeros.is_member);
  CHECK(zeros.witness == Decomposition{1, 1});

  const auto r = brute_force_member(Word::parse("0110"));
  CHECK_FALSE(r.is_member);
  CHECK_FALSE(r.witness.has_value());

  CHECK(brute_force_member(Word::parse("01101001")).witness == Decomposition{2, 2});
  CHECK_FALSE(brute_force_member(Word::parse("00000")).is_member);
  CHECK_FALSE(brute_force_member(Word::parse("00")).is_member);
}

TEST_CASE("kmp_search examples") {
  const auto t1 = symbols_of("110011");
  CHECK_FALSE(kmp_search(Word::parse("0110"), VectorText{t1}, t1.size()).has_value());

  const auto t2 = symbols_of("000000");
  CHECK(kmp_search(Word::parse("0000"), VectorText{t2}, t2.size()) == 0);

  const auto t3 = symbols_of("11010011010010");
  CHECK(kmp_search(Word::parse("1001"), VectorText{t3}, t3.size()) == 3);

  // The true y("01101001"); x^r = "10010110" starts at 3.
  const Word x = Word::parse("01101001");
  const RotatedDoubledView y(x);
  CHECK(kmp_search(Word::parse("1001"), y, y.size()) == 3);
  CHECK(kmp_search(reverse(x), y, y.size()) == 3);
}

TEST_CASE("kmp_search agrees with a naive scanner") {
  Rng rng(99);
  std::uniform_int_distribution<std::size_t> plen(1, 6), tlen(0, 40);
  std::uniform_int_distribution<unsigned> alpha(2, 3);
  for (int trial = 0; trial < 100000; ++trial) {
    const unsigned a = alpha(rng);
    const Word pattern = gen_uniform(plen(rng), rng, a);
    const Word text = gen_uniform(tlen(rng), rng, a);
    const std::vector<Symbol> tv(text.symbols().begin(), text.symbols().end());
    const std::vector<Symbol> pv(pattern.symbols().begin(), pattern.symbols().end());
    REQUIRE(kmp_search(pattern, text, text.size()) == oracle::naive_find(pv, tv));
  }
}

TEST_CASE("exact_member examples") {
  CHECK(exact_member(Word::parse("0000")).is_member);
  CHECK(exact_member(Word::parse("0000")).witness == Decomposition{1, 1});
  CHECK_FALSE(exact_member(Word::parse("100000")).is_member);
  CHECK(exact_member(Word::parse("01101001")).witness == Decomposition{2, 2});
  CHECK_FALSE(exact_member(Word::parse("0110")).is_member);
  CHECK_FALSE(exact_member(Word::parse("000")).is_member);
  CHECK_FALSE(exact_member(Word()).is_member);
}

TEST_CASE("exact_member agrees with brute force and returns valid witnesses") {
  for (std::size_t n = 4; n <= 14; n += 2) {
    oracle::for_each_binary_word(n, [n](const Word& x) {
      const auto fast = exact_member(x);
      REQUIRE(fast.is_member == brute_force_member(x).is_member);
      REQUIRE(fast.is_member == fast.witness.has_value());
      if (fast.witness) {
        const auto& d = *fast.witness;
        REQUIRE(2 * (d.half_u + d.half_v) == n);
        const std::vector<Symbol> s(x.symbols().begin(), x.symbols().end());
        const std::vector<Symbol> left(s.begin(), s.begin() + static_cast<long>(d.split()));
        const std::vector<Symbol> right(s.begin() + static_cast<long>(d.split()), s.end());
        REQUIRE(oracle::palindrome(left));
        REQUIRE(oracle::palindrome(right));
      }
    });
  }
}

TEST_CASE("occurrences of x^r in y(x) never start beyond n-2") {
  for (std::size_t n = 4; n <= 12; n += 2) {
    oracle::for_each_binary_word(n, [n = n](const Word& x) {
      const RotatedDoubledView y(x);
      kmp_scan(reverse(x), y, y.size(), [n](std::size_t start) {
        REQUIRE(start <= n - 2);
        return false;
      });
    });
  }
}

TEST_CASE("exact_member reads O(n) symbols") {
  Rng rng(4);
  for (std::size_t n = 4; n <= 4096; n *= 2) {
    QueryLedger member_ledger, other_ledger;
    exact_member(gen_member_of_length(n, rng), &member_ledger);
    exact_member(gen_uniform(n, rng), &other_ledger);
    CHECK(member_ledger.classical_reads <= 3 * n);
    CHECK(other_ledger.classical_reads <= 3 * n);
  }
}

TEST_CASE("symmetric characterization examples") {
  CHECK(check_symmetric_characterization(Word::parse("01101001"), {2, 2}));
  CHECK(check_symmetric_characterization(Word::parse("0000"), {1, 1}));
  CHECK_FALSE(check_symmetric_characterization(Word::parse("0010"), {1, 1}));
  CHECK_THROWS_AS(check_symmetric_characterization(Word::parse("0000"), {1, 2}), ContractViolation);
}

TEST_CASE("symmetric pairs survive opposite shifts") {
  for (std::size_t n = 4; n <= 10; n += 2) {
    for (const Word& x : oracle::enumerate_members(n)) {
      for (const auto& d : all_decompositions(x)) {
        const std::size_t target = 2 * d.half_u - 1;
        for (std::size_t i = 0; i < n; ++i) {
          const std::size_t j = (target + n - i) % n;
          for (std::size_t p = 0; p < n; ++p) {
            REQUIRE(x[(i + n - p) % n] == x[(j + p) % n]);
          }
        }
      }
    }
  }
}
