#include <algorithm>

#include "doctest.h"
#include "genlab/pieces.hpp"
#include "genlab/strata.hpp"
#include "oracles.hpp"

using namespace genlab;

namespace {
Word w(const char* s) { return Word::from_chars(s); }
Presentation pres(std::vector<std::pair<const char*, const char*>> rels, std::size_t a = 2) {
  std::vector<Relation> rs;
  for (auto [l, r] : rels) rs.push_back({w(l), w(r)});
  return Presentation(Alphabet::standard(a), rs, Kind::monoid);
}
}  // namespace

TEST_CASE("piece examples") {
  const auto p = pres({{"abab", "aab"}});
  const PieceIndex idx(p);
  std::vector<Word> got;
  for (const auto& [piece, count] : idx.pieces()) got.push_back(piece);
  CHECK(got == std::vector<Word>{w("a"), w("b"), w("ab")});
  CHECK_FALSE(idx.is_piece(w("ba")));
  CHECK(idx.occurrence_count(w("ba")) == 1);
  CHECK(idx.occurrence_count(w("a")) == 4);
  CHECK(idx.occurrences(w("ab")) ==
        std::vector<Occurrence>{{0, 0}, {0, 2}, {1, 1}});
  CHECK(idx.occurrences(Word()).empty());
  CHECK_FALSE(idx.is_piece(Word()));

  CHECK(PieceIndex(pres({{"ab", "ab"}})).is_piece(w("ab")));
  CHECK(PieceIndex(pres({{"a", "b"}})).pieces().empty());
  CHECK(PieceIndex(pres({{"aaaa", ""}}, 1)).is_piece(w("aaa")));  // overlapping occurrences
}

TEST_CASE("max_piece_length examples") {
  CHECK(max_piece_length(pres({{"abab", "aab"}})) == 2);
  CHECK(max_piece_length(pres({{"a", "b"}})) == 0);
  CHECK(max_piece_length(pres({{"aa", "aaa"}}, 1)) == 2);
}

TEST_CASE("min_piece_decomposition examples") {
  const auto p = pres({{"abab", "aab"}});
  CHECK(min_piece_decomposition(p, w("abab")) == 2u);
  CHECK(min_piece_decomposition(p, Word()) == 0u);
  CHECK(min_piece_decomposition(pres({{"a", "b"}}), w("a")) == std::nullopt);
  CHECK(min_piece_decomposition(p, w("bab")) == 2u);  // b.ab
}

TEST_CASE("satisfies_C and overlap_degree examples") {
  const auto p = pres({{"abab", "aab"}});
  CHECK(satisfies_C(p, 2));
  CHECK_FALSE(satisfies_C(p, 3));
  CHECK_FALSE(satisfies_C(pres({{"", "a"}}), 1));
  CHECK(satisfies_C(pres({{"ab", "ab"}}), 1));
  CHECK_FALSE(satisfies_C(pres({{"ab", "ab"}}), 2));
  CHECK(overlap_degree(p) == 2u);
  CHECK(overlap_degree(pres({{"a", "b"}})) == std::nullopt);
  CHECK(overlap_degree(pres({{"aa", "b"}})) == 2u);
  CHECK_THROWS(satisfies_C(p, 0));
}

TEST_CASE("index agrees with naive occurrence enumeration") {
  RandomStream rng(21);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t a = 1 + rng.below(3);
    const auto p = oracle::random_presentation(rng, a, 1 + rng.below(3), 6);
    const PieceIndex idx(p);
    const auto want = oracle::pieces(p);
    const auto got = idx.pieces();
    REQUIRE(got.size() == want.size());
    std::size_t longest = 0;
    for (const auto& [piece, count] : got) {
      CHECK(want.at(oracle::letters(piece)) == count);
      longest = std::max(longest, piece.size());
    }
    CHECK(idx.max_piece_length() == longest);
    // longest piece at each position, against the naive piece set
    for (std::size_t s = 0; s < p.slot_count(); ++s) {
      const auto word = oracle::letters(p.slot(s));
      for (std::size_t i = 0; i < word.size(); ++i) {
        std::size_t best = 0;
        for (std::size_t len = 1; i + len <= word.size(); ++len) {
          std::vector<Letter> f(word.begin() + i, word.begin() + i + len);
          if (want.count(f)) best = len;
        }
        CHECK(idx.longest_piece_at(s, i) == best);
      }
    }
  }
}

TEST_CASE("greedy decomposition equals DP oracle on 10^4 random presentations") {
  RandomStream rng(77);
  std::size_t mismatches = 0;
  for (int t = 0; t < 10000; ++t) {
    const std::size_t a = 1 + rng.below(3);
    const std::size_t k = 1 + rng.below(3);
    const auto p = oracle::random_presentation(rng, a, k, 30 / (2 * k));
    const PieceIndex idx(p);
    const auto ps = oracle::pieces(p);
    for (std::size_t s = 0; s < p.slot_count(); ++s) {
      const auto dp = oracle::dp_decomposition(oracle::letters(p.slot(s)), ps);
      mismatches += min_piece_decomposition_of_slot(idx, s) != dp;
      mismatches += min_piece_decomposition(idx, p.slot(s)) != dp;
    }
    // an arbitrary word too
    Word x;
    for (std::size_t i = 0, len = rng.below(8); i < len; ++i) x.push_back(Letter(rng.below(a)));
    mismatches += min_piece_decomposition(idx, x) != oracle::dp_decomposition(oracle::letters(x), ps);
    mismatches += overlap_degree(idx) != oracle::degree(p);
  }
  CHECK(mismatches == 0);
}

TEST_CASE("C(2) iff no relation word is a factor of a word in another slot") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& p : enumerate_stratum(StratumDescriptor::standard(2, 2, Kind::monoid,
                                                                        Stratification::sum_length),
                                           n)) {
      bool factor = false;
      for (std::size_t s = 0; s < p.slot_count(); ++s) {
        for (std::size_t t = 0; t < p.slot_count(); ++t) {
          if (s == t) continue;
          const auto& u = p.slot(s);
          const auto& v = p.slot(t);
          factor |= std::search(v.begin(), v.end(), u.begin(), u.end()) != v.end() || u.empty();
        }
      }
      CHECK(satisfies_C(p, 2) == !factor);
    }
  }
}

TEST_CASE("C(m) is monotone in m") {
  RandomStream rng(8);
  for (int t = 0; t < 3000; ++t) {
    const auto p = oracle::random_presentation(rng, 2 + rng.below(2), 1 + rng.below(2), 8);
    for (std::size_t m = 2; m <= 8; ++m) {
      if (satisfies_C(p, m)) CHECK(satisfies_C(p, m - 1));
    }
  }
}

TEST_CASE("longest repeated factor") {
  CHECK(longest_repeated_factor(w("")) == 0);
  CHECK(longest_repeated_factor(w("ab")) == 0);
  CHECK(longest_repeated_factor(w("aaa")) == 2);
  CHECK(longest_repeated_factor(w("abcab")) == 2);
  RandomStream rng(9);
  for (int t = 0; t < 2000; ++t) {
    Word word;
    for (std::size_t i = 0, len = rng.below(12); i < len; ++i) word.push_back(Letter(rng.below(2)));
    std::size_t best = 0;
    for (std::size_t p = 1; p <= word.size(); ++p)
      if (oracle::has_repeated_factor(oracle::letters(word), p)) best = p;
    CHECK(longest_repeated_factor(word) == best);
  }
}
