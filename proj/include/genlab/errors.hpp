#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace genlab {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Cap from the GENLAB_ENUM_CAP environment variable, or kDefaultEnumerationCap.
std::uint64_t default_enumeration_cap();

/// Refusal to enumerate a population larger than the configured cap.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(const mpz_class& required, std::uint64_t cap);
  const mpz_class& required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  mpz_class required_;
  std::uint64_t cap_;
};

/// Throws EnumerationCapExceeded when size > cap.
void check_cap(const mpz_class& size, std::uint64_t cap);

}  // namespace genlab
