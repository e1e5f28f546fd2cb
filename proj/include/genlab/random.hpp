#pragma once

#include <cstdint>
#include <limits>

#include <gmpxx.h>

namespace genlab {

/// Counter-based pseudo-random stream keyed by (seed, stream index).
///
/// Output i of stream (seed, s) is a SplitMix64 finalisation of
/// key(seed, s) + (i + 1) * golden, so every trial of an experiment owns an
/// independent stream regardless of which thread runs it. All derived
/// draws use explicit integer arithmetic, so results are bit-identical
/// across platforms and standard libraries.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Uniform in [0, bound) for arbitrary-precision bound > 0.
  mpz_class below(const mpz_class& bound);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// The SplitMix64 output function.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace genlab
