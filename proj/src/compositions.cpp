#include "genlab/compositions.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace genlab {

namespace {

mpz_class binomial(std::size_t n, std::size_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Lexicographic successor of a weak composition; false after the last one,
// which is (n, 0, ..., 0).
bool next_weak(Blocks& b) {
  const std::size_t k = b.size();
  if (k < 2) return false;
  // Bump the block before the last nonzero one; the remaining mass of that
  // block moves to the end.
  std::size_t j = k - 1;
  while (j > 0 && b[j] == 0) --j;
  if (j == 0) return false;
  const std::size_t moved = b[j];
  b[j] = 0;
  b[j - 1] += 1;
  b[k - 1] = moved - 1;
  return true;
}

}  // namespace

mpz_class count_weak(std::size_t n, std::size_t k) {
  if (k == 0) return n == 0 ? 1 : 0;
  return binomial(n + k - 1, k - 1);
}

mpz_class count_positive(std::size_t n, std::size_t k) {
  if (k == 0) return n == 0 ? 1 : 0;
  if (k > n) return 0;
  return binomial(n - 1, k - 1);
}

void for_each_weak(std::size_t n, std::size_t k, const std::function<bool(const Blocks&)>& visit) {
  if (k == 0) {
    if (n == 0) visit(Blocks{});
    return;
  }
  Blocks b(k, 0);
  b[k - 1] = n;
  do {
    if (!visit(b)) return;
  } while (next_weak(b));
}

void for_each_positive(std::size_t n, std::size_t k,
                       const std::function<bool(const Blocks&)>& visit) {
  if (k == 0) {
    if (n == 0) visit(Blocks{});
    return;
  }
  if (k > n) return;
  Blocks shifted(k);
  for_each_weak(n - k, k, [&](const Blocks& w) {
    for (std::size_t i = 0; i < k; ++i) shifted[i] = w[i] + 1;
    return visit(shifted);
  });
}

std::vector<Blocks> enumerate_weak(std::size_t n, std::size_t k, std::uint64_t cap) {
  check_cap(count_weak(n, k), cap);
  std::vector<Blocks> out;
  for_each_weak(n, k, [&](const Blocks& b) {
    out.push_back(b);
    return true;
  });
  return out;
}

std::vector<Blocks> enumerate_positive(std::size_t n, std::size_t k, std::uint64_t cap) {
  check_cap(count_positive(n, k), cap);
  std::vector<Blocks> out;
  for_each_positive(n, k, [&](const Blocks& b) {
    out.push_back(b);
    return true;
  });
  return out;
}

Blocks sample_weak(std::size_t n, std::size_t k, RandomStream& rng) {
  if (k == 0) throw std::invalid_argument("sample_weak needs k >= 1");
  const std::size_t slots = n + k - 1;
  const std::size_t bars = k - 1;
  // Floyd's algorithm: uniform bars-subset of [0, slots).
  std::unordered_set<std::size_t> chosen;
  for (std::size_t j = slots - bars; j < slots; ++j) {
    const std::size_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::size_t> bar_pos(chosen.begin(), chosen.end());
  std::sort(bar_pos.begin(), bar_pos.end());

  Blocks blocks;
  blocks.reserve(k);
  std::size_t prev = 0;  // first symbol position of the current block
  for (std::size_t p : bar_pos) {
    blocks.push_back(p - prev);
    prev = p + 1;
  }
  blocks.push_back(slots - prev);
  return blocks;
}

Blocks sample_positive(std::size_t n, std::size_t k, RandomStream& rng) {
  if (k == 0 && n == 0) return {};
  if (k == 0 || k > n) throw std::invalid_argument("sample_positive needs 1 <= k <= n");
  Blocks b = sample_weak(n - k, k, rng);
  for (auto& x : b) ++x;
  return b;
}

mpq_class short_block_proportion_bound(std::size_t n, std::size_t k, std::size_t f) {
  if (k < 2) throw std::invalid_argument("short_block_proportion_bound needs k >= 2");
  mpq_class bound(mpz_class(k) * mpz_class(f + 1) * count_weak(n, k - 1), count_weak(n, k));
  bound.canonicalize();
  return bound;
}

mpq_class exact_short_block_proportion(std::size_t n, std::size_t k, std::size_t f) {
  if (k == 0) throw std::invalid_argument("exact_short_block_proportion needs k >= 1");
  const std::size_t floor_mass = k * (f + 1);
  const mpz_class all = count_weak(n, k);
  const mpz_class long_only = n >= floor_mass ? count_weak(n - floor_mass, k) : mpz_class(0);
  mpq_class out(all - long_only, all);
  out.canonicalize();
  return out;
}

}  // namespace genlab
