#include <set>

#include "doctest.h"
#include "genlab/random.hpp"
#include "genlab/statistics.hpp"

using namespace genlab;

TEST_CASE("streams are deterministic and independent") {
  RandomStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  std::set<std::uint64_t> firsts;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    CHECK(x == b());
    firsts.insert(x);
  }
  CHECK(firsts.size() == 100);
  RandomStream a2(42, 7);
  CHECK(a2() != c());
  RandomStream a3(42, 7);
  CHECK(a3() != d());
}

TEST_CASE("below is uniform") {
  RandomStream rng(1);
  std::vector<std::uint64_t> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto x = rng.below(7);
    REQUIRE(x < 7);
    ++counts[x];
  }
  CHECK(chi_square_uniform_p_value(counts) > 0.001);
  CHECK(rng.below(1) == 0);
}

TEST_CASE("big below is uniform and in range") {
  RandomStream rng(2);
  const mpz_class bound = 5;
  std::vector<std::uint64_t> counts(5, 0);
  for (int i = 0; i < 50000; ++i) {
    const mpz_class x = rng.below(bound);
    REQUIRE(x >= 0);
    REQUIRE(x < bound);
    ++counts[x.get_ui()];
  }
  CHECK(chi_square_uniform_p_value(counts) > 0.001);
  mpz_class huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 2, 200);
  huge += 3;
  for (int i = 0; i < 100; ++i) CHECK(rng.below(huge) < huge);
}
