#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "genlab/errors.hpp"
#include "genlab/presentation.hpp"
#include "genlab/random.hpp"

namespace genlab {

enum class Stratification { sum_length, max_length };

/// "sum" / "max".
std::string to_string(Stratification s);
std::optional<Stratification> parse_stratification(std::string_view text);

/// The A-generated k-relation presentations of one kind, stratified by sum
/// length or by maximum relation word length. Stratum n of the max-length
/// stratification holds the presentations whose longest relation word has
/// length exactly n, so both stratifications are spherical.
struct StratumDescriptor {
  Alphabet alphabet;
  std::size_t k = 1;
  Kind kind = Kind::monoid;
  Stratification strat = Stratification::sum_length;

  static StratumDescriptor standard(std::size_t alphabet_size, std::size_t k, Kind kind,
                                    Stratification strat) {
    return {Alphabet::standard(alphabet_size), k, kind, strat};
  }
};

/// True iff p lies in stratum n of desc (alphabet, relation count, kind and length).
bool in_stratum(const StratumDescriptor& desc, std::size_t n, const Presentation& p);

/// Number of words of length <= n (monoid) or 1 <= length <= n (semigroup).
mpz_class words_up_to(std::size_t alphabet_size, std::size_t n, Kind kind);

mpz_class stratum_size(const StratumDescriptor& desc, std::size_t n);

/// Sum of stratum sizes 1..n.
mpz_class ball_size(const StratumDescriptor& desc, std::size_t n);

/// Streams stratum n in a fixed order: for sum length, words of A^n in
/// lexicographic order, each combined with every shape in lexicographic
/// order; for max length, shapes (blocks <= n, some block = n) in
/// lexicographic order, each filled with every word of its total length in
/// lexicographic order. The visitor returns false to stop. Throws
/// EnumerationCapExceeded when stratum_size(desc, n) > cap.
void for_each_in_stratum(const StratumDescriptor& desc, std::size_t n,
                         const std::function<bool(const Presentation&)>& visit,
                         std::uint64_t cap = kDefaultEnumerationCap);

std::vector<Presentation> enumerate_stratum(const StratumDescriptor& desc, std::size_t n,
                                            std::uint64_t cap = kDefaultEnumerationCap);

/// Exactly uniform draw from stratum n. Throws std::domain_error if the
/// stratum is empty.
Presentation sample_stratum(const StratumDescriptor& desc, std::size_t n, RandomStream& rng);

/// Uniform draw from the ball B_n = S_1 u ... u S_n: stratum j is chosen with
/// probability |S_j| / |B_n|.
Presentation sample_ball(const StratumDescriptor& desc, std::size_t n, RandomStream& rng);

/// Visits every word of length `length` over an alphabet of the given size
/// in lexicographic order.
void for_each_word(std::size_t alphabet_size, std::size_t length,
                   const std::function<bool(const Word&)>& visit);

/// Uniform word of the given length.
Word sample_word(std::size_t alphabet_size, std::size_t length, RandomStream& rng);

}  // namespace genlab
