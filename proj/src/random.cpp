#include "genlab/random.hpp"

#include <stdexcept>
#include <vector>

namespace genlab {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_(mix64(mix64(seed + kGolden) ^ mix64(stream * kGolden + 0x632BE59BD9B4E019ULL))) {}

RandomStream::result_type RandomStream::operator()() noexcept {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

std::uint64_t RandomStream::below(std::uint64_t bound) noexcept {
  // Lemire's nearly-divisionless method.
  unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

mpz_class RandomStream::below(const mpz_class& bound) {
  if (bound <= 0) throw std::invalid_argument("RandomStream::below needs a positive bound");
  if (bound.fits_ulong_p()) return mpz_class(below(static_cast<std::uint64_t>(bound.get_ui())));

  // Rejection sampling on the smallest power of two covering bound.
  const mpz_class top = bound - 1;
  const std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
  const std::size_t limbs = (bits + 63) / 64;
  const unsigned spare = static_cast<unsigned>(limbs * 64 - bits);
  std::vector<std::uint64_t> words(limbs);
  mpz_class x;
  do {
    for (auto& w : words) w = (*this)();
    words.back() >>= spare;  // most significant limb last (order = -1)
    mpz_import(x.get_mpz_t(), limbs, -1, sizeof(std::uint64_t), 0, 0, words.data());
  } while (x >= bound);
  return x;
}

}  // namespace genlab
