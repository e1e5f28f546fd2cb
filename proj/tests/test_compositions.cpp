#include <cmath>
#include <map>

#include "doctest.h"
#include "genlab/compositions.hpp"
#include "genlab/statistics.hpp"
#include "oracles.hpp"

using namespace genlab;

TEST_CASE("count_weak examples") {
  CHECK(count_weak(3, 2) == 4);
  CHECK(count_weak(4, 3) == 15);
  for (std::size_t k = 1; k <= 6; ++k) CHECK(count_weak(0, k) == 1);
  CHECK(count_weak(0, 0) == 1);
  CHECK(count_weak(3, 0) == 0);
}

TEST_CASE("count_positive examples") {
  CHECK(count_positive(2, 2) == 1);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(count_positive(n, 1) == 1);
  CHECK(count_positive(3, 5) == 0);
  CHECK(count_positive(0, 0) == 1);
}

TEST_CASE("count_weak(n,k) = count_positive(n+k,k)") {
  for (std::size_t n = 0; n <= 20; ++n)
    for (std::size_t k = 1; k <= 6; ++k) CHECK(count_weak(n, k) == count_positive(n + k, k));
}

TEST_CASE("enumeration matches the brute-force oracle") {
  CHECK(enumerate_weak(2, 2) == std::vector<Blocks>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(enumerate_weak(0, 3) == std::vector<Blocks>{{0, 0, 0}});
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto got = enumerate_weak(n, k);
      const auto want = oracle::weak_compositions(n, k);  // lexicographic by construction
      CHECK(got == want);
      CHECK(count_weak(n, k) == got.size());
      std::vector<Blocks> pos;
      for (const auto& b : want)
        if (std::all_of(b.begin(), b.end(), [](auto x) { return x > 0; })) pos.push_back(b);
      CHECK(enumerate_positive(n, k) == pos);
      CHECK(count_positive(n, k) == pos.size());
    }
  }
}

TEST_CASE("enumeration cap refusal") {
  try {
    enumerate_weak(30, 6, 100);
    FAIL("expected refusal");
  } catch (const EnumerationCapExceeded& e) {
    CHECK(e.required() == count_weak(30, 6));
    CHECK(e.cap() == 100);
  }
}

TEST_CASE("sample_weak edge cases") {
  RandomStream rng(3);
  for (int i = 0; i < 100; ++i) CHECK(sample_weak(7, 1, rng) == Blocks{7});
  std::size_t zeros_first = 0;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i) zeros_first += sample_weak(1, 2, rng)[0] == 0;
  const double sigma = std::sqrt(trials * 0.25);
  CHECK(std::abs(double(zeros_first) - trials / 2.0) < 3 * sigma);
}

TEST_CASE("sample_weak on (6,3) passes chi-square") {
  RandomStream rng(4);
  std::map<Blocks, std::size_t> index;
  for (const auto& b : enumerate_weak(6, 3)) index.emplace(b, index.size());
  std::vector<std::uint64_t> counts(index.size(), 0);
  for (int i = 0; i < 100000; ++i) ++counts.at(index.at(sample_weak(6, 3, rng)));
  CHECK(chi_square_uniform_p_value(counts) > 0.001);
}

TEST_CASE("sample_weak and sample_positive uniform on every small instance") {
  std::uint64_t seed = 100;
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto all = enumerate_weak(n, k);
      if (all.size() < 2 || all.size() > 1000) continue;
      std::map<Blocks, std::size_t> index;
      for (const auto& b : all) index.emplace(b, index.size());
      std::vector<std::uint64_t> counts(all.size(), 0);
      RandomStream rng(seed++);
      for (std::size_t i = 0; i < 50 * all.size(); ++i) ++counts.at(index.at(sample_weak(n, k, rng)));
      CHECK_MESSAGE(chi_square_uniform_p_value(counts) > 0.001, "weak n=" << n << " k=" << k);

      const auto pos = enumerate_positive(n, k);
      if (pos.size() < 2) continue;
      std::map<Blocks, std::size_t> pidx;
      for (const auto& b : pos) pidx.emplace(b, pidx.size());
      std::vector<std::uint64_t> pc(pos.size(), 0);
      for (std::size_t i = 0; i < 50 * pos.size(); ++i) ++pc.at(pidx.at(sample_positive(n, k, rng)));
      CHECK_MESSAGE(chi_square_uniform_p_value(pc) > 0.001, "positive n=" << n << " k=" << k);
    }
  }
}

TEST_CASE("short-block bound example and errors") {
  CHECK(exact_short_block_proportion(4, 2, 0) == mpq_class(2, 5));
  CHECK(short_block_proportion_bound(4, 2, 0) == mpq_class(2, 5));
  CHECK_THROWS(short_block_proportion_bound(4, 1, 0));
  for (std::size_t n = 0; n <= 6; ++n) CHECK(exact_short_block_proportion(n, 3, n) == 1);
}

TEST_CASE("short-block bound dominates exact proportion") {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::size_t k = 2; k <= 4; ++k) {
      const auto all = oracle::weak_compositions(n, k);
      for (std::size_t f = 0; f <= n; ++f) {
        std::size_t hits = 0;
        for (const auto& b : all) hits += *std::min_element(b.begin(), b.end()) <= f;
        mpq_class exact(hits, all.size());
        exact.canonicalize();
        CHECK(exact_short_block_proportion(n, k, f) == exact);
        const mpq_class bound = short_block_proportion_bound(n, k, f);
        CHECK(exact <= (bound > 1 ? mpq_class(1) : bound));
      }
    }
  }
}
