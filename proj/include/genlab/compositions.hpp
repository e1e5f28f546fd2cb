#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "genlab/errors.hpp"
#include "genlab/random.hpp"

namespace genlab {

/// Ordered blocks of a (weak) composition.
using Blocks = std::vector<std::size_t>;

/// Number of weak compositions of n into k: C(n+k-1, k-1). For k = 0 this
/// is 1 when n = 0 (the empty composition) and 0 otherwise.
mpz_class count_weak(std::size_t n, std::size_t k);

/// Number of compositions of n into k positive parts: C(n-1, k-1); 0 when k > n.
/// count_positive(0, 0) = 1.
mpz_class count_positive(std::size_t n, std::size_t k);

/// Visits the weak compositions of n into k in lexicographic order. The
/// visitor returns false to stop early.
void for_each_weak(std::size_t n, std::size_t k, const std::function<bool(const Blocks&)>& visit);

/// Visits compositions of n into k positive parts in lexicographic order.
void for_each_positive(std::size_t n, std::size_t k,
                       const std::function<bool(const Blocks&)>& visit);

/// Lexicographic list of all weak compositions; throws EnumerationCapExceeded
/// when count_weak(n, k) > cap.
std::vector<Blocks> enumerate_weak(std::size_t n, std::size_t k,
                                   std::uint64_t cap = kDefaultEnumerationCap);
std::vector<Blocks> enumerate_positive(std::size_t n, std::size_t k,
                                       std::uint64_t cap = kDefaultEnumerationCap);

/// Uniform weak composition of n into k >= 1 (stars and bars: a uniform
/// (k-1)-subset of the n+k-1 symbol positions marks the bars).
Blocks sample_weak(std::size_t n, std::size_t k, RandomStream& rng);

/// Uniform composition of n into k positive parts; requires 1 <= k <= n, or
/// n = k = 0.
Blocks sample_positive(std::size_t n, std::size_t k, RandomStream& rng);

/// Upper bound k(f+1) C'_{k-1}(n) / C'_k(n) on the proportion of weak
/// compositions of n into k with some block <= f. Not clipped; may exceed 1.
/// Throws std::invalid_argument for k < 2.
mpq_class short_block_proportion_bound(std::size_t n, std::size_t k, std::size_t f);

/// Exact proportion of weak compositions of n into k >= 1 with some block <= f:
/// 1 - C'_k(n - k(f+1)) / C'_k(n).
mpq_class exact_short_block_proportion(std::size_t n, std::size_t k, std::size_t f);

}  // namespace genlab
