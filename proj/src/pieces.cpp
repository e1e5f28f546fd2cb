#include "genlab/pieces.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace genlab {

std::vector<std::uint32_t> longest_repeat_at(std::span<const std::int32_t> text,
                                             std::int32_t separator_floor) {
  const std::size_t len = text.size();
  std::vector<std::uint32_t> longest(len, 0);
  // prev[j] = lce(i+1, j), cur[j] = lce(i, j), only for j > i.
  std::vector<std::uint32_t> prev(len + 1, 0), cur(len + 1, 0);
  for (std::size_t i = len; i-- > 0;) {
    const std::int32_t c = text[i];
    const bool letter = c < separator_floor;
    std::uint32_t best_i = 0;
    for (std::size_t j = i + 1; j < len; ++j) {
      const std::uint32_t v = (letter && text[j] == c) ? prev[j + 1] + 1 : 0;
      cur[j] = v;
      if (v > best_i) best_i = v;
      if (v > longest[j]) longest[j] = v;
    }
    cur[len] = 0;
    if (best_i > longest[i]) longest[i] = best_i;
    std::swap(prev, cur);
  }
  return longest;
}

std::size_t longest_repeated_factor(const Word& w) {
  std::vector<std::int32_t> text(w.begin(), w.end());
  const auto at = longest_repeat_at(text, static_cast<std::int32_t>(kMaxAlphabetSize));
  return at.empty() ? 0 : *std::max_element(at.begin(), at.end());
}

PieceIndex::PieceIndex(const Presentation& p) {
  words_.reserve(p.slot_count());
  for (std::size_t s = 0; s < p.slot_count(); ++s) words_.push_back(p.slot(s));

  const auto floor = static_cast<std::int32_t>(kMaxAlphabetSize);
  std::vector<std::int32_t> text;
  text.reserve(p.sum_length() + words_.size());
  offset_.reserve(words_.size());
  for (std::size_t s = 0; s < words_.size(); ++s) {
    offset_.push_back(text.size());
    text.insert(text.end(), words_[s].begin(), words_[s].end());
    text.push_back(floor + static_cast<std::int32_t>(s));  // unique separator
  }
  longest_ = longest_repeat_at(text, floor);
  max_piece_ = longest_.empty() ? 0 : *std::max_element(longest_.begin(), longest_.end());
}

std::vector<Occurrence> PieceIndex::occurrences(const Word& w) const {
  std::vector<Occurrence> out;
  if (w.empty()) return out;
  for (std::size_t s = 0; s < words_.size(); ++s) {
    const Word& rw = words_[s];
    if (rw.size() < w.size()) continue;
    for (std::size_t i = 0; i + w.size() <= rw.size(); ++i) {
      if (std::equal(w.begin(), w.end(), rw.begin() + static_cast<std::ptrdiff_t>(i))) {
        out.push_back({s, i});
      }
    }
  }
  return out;
}

std::size_t PieceIndex::occurrence_count(const Word& w) const {
  if (w.empty()) return 0;
  std::size_t count = 0;
  for (const Word& rw : words_) count += rw.count_occurrences(w.letters());
  return count;
}

bool PieceIndex::is_piece(const Word& w) const {
  if (w.empty() || w.size() > max_piece_) return false;
  return occurrence_count(w) >= 2;
}

std::size_t PieceIndex::longest_piece_at(std::size_t slot, std::size_t start) const {
  if (slot >= words_.size() || start > words_[slot].size()) {
    throw std::out_of_range("PieceIndex::longest_piece_at");
  }
  if (start == words_[slot].size()) return 0;
  return longest_[offset_[slot] + start];
}

std::size_t PieceIndex::longest_piece_prefix(const Word& w, std::size_t start) const {
  std::size_t len = 0;
  while (start + len < w.size() && len < max_piece_ && is_piece(w.factor(start, len + 1))) {
    ++len;
  }
  return len;
}

std::vector<std::pair<Word, std::size_t>> PieceIndex::pieces() const {
  std::map<Word, std::size_t, ShortLex> found;
  for (std::size_t s = 0; s < words_.size(); ++s) {
    for (std::size_t i = 0; i < words_[s].size(); ++i) {
      for (std::size_t l = 1; l <= longest_piece_at(s, i); ++l) {
        Word f = words_[s].factor(i, l);
        if (!found.contains(f)) {
          const std::size_t count = occurrence_count(f);
          found.emplace(std::move(f), count);
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

namespace {

template <typename LongestAt>
std::optional<std::size_t> greedy_decomposition(std::size_t length, LongestAt longest_at) {
  std::size_t pos = 0;
  std::size_t count = 0;
  while (pos < length) {
    const std::size_t step = longest_at(pos);
    if (step == 0) return std::nullopt;
    pos += step;
    ++count;
  }
  return count;
}

}  // namespace

std::optional<std::size_t> min_piece_decomposition(const PieceIndex& index, const Word& w) {
  return greedy_decomposition(w.size(),
                              [&](std::size_t pos) { return index.longest_piece_prefix(w, pos); });
}

std::optional<std::size_t> min_piece_decomposition(const Presentation& p, const Word& w) {
  return min_piece_decomposition(PieceIndex(p), w);
}

std::optional<std::size_t> min_piece_decomposition_of_slot(const PieceIndex& index,
                                                           std::size_t slot) {
  return greedy_decomposition(index.word(slot).size(), [&](std::size_t pos) {
    return index.longest_piece_at(slot, pos);
  });
}

std::size_t max_piece_length(const Presentation& p) { return PieceIndex(p).max_piece_length(); }

bool satisfies_C(const PieceIndex& index, std::size_t m) {
  if (m == 0) throw std::invalid_argument("satisfies_C needs m >= 1");
  for (std::size_t s = 0; s < index.slot_count(); ++s) {
    const auto d = min_piece_decomposition_of_slot(index, s);
    if (d && *d < m) return false;
  }
  return true;
}

bool satisfies_C(const Presentation& p, std::size_t m) { return satisfies_C(PieceIndex(p), m); }

std::optional<std::size_t> overlap_degree(const PieceIndex& index) {
  std::optional<std::size_t> degree;
  for (std::size_t s = 0; s < index.slot_count(); ++s) {
    const auto d = min_piece_decomposition_of_slot(index, s);
    if (d && (!degree || *d < *degree)) degree = d;
  }
  return degree;
}

std::optional<std::size_t> overlap_degree(const Presentation& p) {
  return overlap_degree(PieceIndex(p));
}

}  // namespace genlab
