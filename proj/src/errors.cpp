#include "genlab/errors.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace genlab {

std::uint64_t default_enumeration_cap() {
  const char* env = std::getenv("GENLAB_ENUM_CAP");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationCap;
  std::uint64_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end) return kDefaultEnumerationCap;
  return value;
}

EnumerationCapExceeded::EnumerationCapExceeded(const mpz_class& required, std::uint64_t cap)
    : std::runtime_error("enumeration of " + required.get_str() + " items exceeds cap " +
                         std::to_string(cap)),
      required_(required),
      cap_(cap) {}

void check_cap(const mpz_class& size, std::uint64_t cap) {
  if (size > mpz_class(std::to_string(cap))) throw EnumerationCapExceeded(size, cap);
}

}  // namespace genlab
