#include <set>
#include <stdexcept>
#include <unordered_set>

#include "doctest.h"
#include "genlab/word.hpp"

using namespace genlab;

TEST_CASE("alphabet validation") {
  CHECK(Alphabet({"a", "b"}).size() == 2);
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"a", "1"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"a", "="}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"a", "b c"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"a", ""}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"#x"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet::standard(257), std::invalid_argument);
}

TEST_CASE("standard alphabet names") {
  const auto a = Alphabet::standard(28);
  CHECK(a.symbol(0) == "a");
  CHECK(a.symbol(25) == "z");
  CHECK(a.symbol(26) == "x26");
  CHECK(Alphabet::standard(256).size() == 256);
  std::set<std::string> distinct(a.symbols().begin(), a.symbols().end());
  CHECK(distinct.size() == 28);
}

TEST_CASE("word basics") {
  const Word w = Word::from_chars("abab");
  CHECK(w.size() == 4);
  CHECK(w == Word{0, 1, 0, 1});
  CHECK(w.factor(1, 2) == Word::from_chars("ba"));
  CHECK(w.factor(4, 0).empty());
  CHECK_THROWS_AS(w.factor(3, 2), std::out_of_range);
  CHECK(w.concat(Word::from_chars("c")) == Word::from_chars("ababc"));
  CHECK(w.letter_bound() == 2);
  CHECK(Word().letter_bound() == 0);
  CHECK_THROWS(Word::from_chars("aB"));
}

TEST_CASE("overlapping occurrence counts") {
  const Word w = Word::from_chars("aaaa");
  const Word aa = Word::from_chars("aa");
  CHECK(w.count_occurrences(aa.letters()) == 3);
  CHECK(Word::from_chars("abab").count_occurrences(Word::from_chars("ab").letters()) == 2);
  CHECK(Word::from_chars("ab").count_occurrences(Word::from_chars("abc").letters()) == 0);
}

TEST_CASE("shortlex order") {
  ShortLex less;
  CHECK(less(Word(), Word::from_chars("a")));
  CHECK(less(Word::from_chars("b"), Word::from_chars("aa")));
  CHECK(less(Word::from_chars("ab"), Word::from_chars("ba")));
  CHECK_FALSE(less(Word::from_chars("ab"), Word::from_chars("ab")));
}

TEST_CASE("rendering") {
  const auto a = Alphabet::standard(2);
  CHECK(to_string(Word(), a) == "1");
  CHECK(to_string(Word::from_chars("abba"), a) == "abba");
  const Alphabet multi({"x", "yy"});
  CHECK(to_string(Word{0, 1, 1}, multi) == "x yy yy");
  CHECK(to_string(Word::from_chars("ab")) == "ab");
}

TEST_CASE("hashing distinguishes words") {
  std::unordered_set<Word> set;
  set.insert(Word::from_chars("ab"));
  set.insert(Word::from_chars("ba"));
  set.insert(Word::from_chars("ab"));
  set.insert(Word());
  CHECK(set.size() == 3);
}
