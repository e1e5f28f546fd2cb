#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "genlab/presentation.hpp"

namespace genlab {

/// Position of a factor inside the relation words: slot (0..2k) and start.
struct Occurrence {
  std::size_t slot;
  std::size_t start;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// For each start position i of `text`, the length of the longest factor
/// beginning at i that also begins at some other position j != i. Factors
/// never extend past a `separator` entry; separators themselves never match.
std::vector<std::uint32_t> longest_repeat_at(std::span<const std::int32_t> text,
                                             std::int32_t separator_floor);

/// Longest factor of `w` occurring at two distinct start positions
/// (0 if every letter is distinct or w is empty).
std::size_t longest_repeated_factor(const Word& w);

/// Factor-occurrence structure over the 2k relation words of a presentation.
///
/// Relation words are taken with slot (multiset) semantics: equal words in
/// different slots are distinct occurrences, as are overlapping occurrences
/// inside one word. A piece is a nonempty word with at least two
/// occurrences; pieces are closed under nonempty factors.
///
/// The index stores, for every (slot, start), the longest piece beginning
/// there, computed by a quadratic longest-common-extension sweep.
class PieceIndex {
 public:
  explicit PieceIndex(const Presentation& p);

  std::size_t slot_count() const noexcept { return words_.size(); }
  const Word& word(std::size_t slot) const { return words_.at(slot); }

  /// Occurrences of w across all slots. Empty w yields none.
  std::vector<Occurrence> occurrences(const Word& w) const;
  std::size_t occurrence_count(const Word& w) const;
  bool is_piece(const Word& w) const;

  /// Longest piece beginning at position `start` of relation word `slot`.
  std::size_t longest_piece_at(std::size_t slot, std::size_t start) const;

  /// Longest piece that is a prefix of w[start..] for an arbitrary word w.
  std::size_t longest_piece_prefix(const Word& w, std::size_t start) const;

  /// 0 if there are no pieces.
  std::size_t max_piece_length() const noexcept { return max_piece_; }

  /// Every distinct piece with its occurrence count, in ShortLex order.
  std::vector<std::pair<Word, std::size_t>> pieces() const;

 private:
  std::vector<Word> words_;
  std::vector<std::size_t> offset_;       // start of each slot in longest_
  std::vector<std::uint32_t> longest_;  // per (slot, start)
  std::size_t max_piece_ = 0;
};

/// Minimal number of pieces whose product is w; 0 for the empty word;
/// nullopt when w has no factorisation into pieces. Greedy longest-prefix,
/// which is optimal because pieces are factor-closed.
std::optional<std::size_t> min_piece_decomposition(const PieceIndex& index, const Word& w);
std::optional<std::size_t> min_piece_decomposition(const Presentation& p, const Word& w);

/// Same, for relation word `slot` (uses the precomputed per-position table).
std::optional<std::size_t> min_piece_decomposition_of_slot(const PieceIndex& index,
                                                           std::size_t slot);

std::size_t max_piece_length(const Presentation& p);

/// True iff no relation word is a product of fewer than m pieces. m >= 1.
bool satisfies_C(const PieceIndex& index, std::size_t m);
bool satisfies_C(const Presentation& p, std::size_t m);

/// Largest m with C(m); nullopt means unbounded (no relation word is a
/// product of pieces).
std::optional<std::size_t> overlap_degree(const PieceIndex& index);
std::optional<std::size_t> overlap_degree(const Presentation& p);

}  // namespace genlab
