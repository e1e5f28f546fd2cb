#include "genlab/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace genlab {

std::string to_string(Kind kind) {
  return kind == Kind::monoid ? "monoid" : "semigroup";
}

std::optional<Kind> parse_kind(std::string_view text) {
  if (text == "monoid") return Kind::monoid;
  if (text == "semigroup") return Kind::semigroup;
  return std::nullopt;
}

std::size_t Shape::total() const noexcept {
  return std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0});
}

std::size_t Shape::min_block() const noexcept {
  return blocks_.empty() ? 0 : *std::min_element(blocks_.begin(), blocks_.end());
}

std::size_t Shape::max_block() const noexcept {
  return blocks_.empty() ? 0 : *std::max_element(blocks_.begin(), blocks_.end());
}

Presentation::Presentation(Alphabet alphabet, std::vector<Relation> relations, Kind kind)
    : alphabet_(std::move(alphabet)), relations_(std::move(relations)), kind_(kind) {
  for (const auto& r : relations_) {
    for (const Word* w : {&r.lhs, &r.rhs}) {
      if (w->letter_bound() > alphabet_.size()) {
        throw InvalidPresentation("relation word uses a letter outside the alphabet");
      }
      if (kind_ == Kind::semigroup && w->empty()) {
        throw InvalidPresentation("semigroup presentation has an empty relation word");
      }
    }
  }
}

const Word& Presentation::slot(std::size_t s) const {
  const Relation& r = relations_.at(s / 2);
  return s % 2 == 0 ? r.lhs : r.rhs;
}

Shape Presentation::shape() const {
  std::vector<std::size_t> blocks;
  blocks.reserve(slot_count());
  for (const auto& r : relations_) {
    blocks.push_back(r.lhs.size());
    blocks.push_back(r.rhs.size());
  }
  return Shape(std::move(blocks));
}

std::size_t Presentation::sum_length() const noexcept {
  std::size_t total = 0;
  for (const auto& r : relations_) total += r.lhs.size() + r.rhs.size();
  return total;
}

std::size_t Presentation::max_length() const noexcept {
  std::size_t longest = 0;
  for (const auto& r : relations_) longest = std::max({longest, r.lhs.size(), r.rhs.size()});
  return longest;
}

Presentation assemble(const Alphabet& alphabet, const Word& word, const Shape& shape, Kind kind) {
  if (shape.size() % 2 != 0) {
    throw InvalidPresentation("shape must have an even number of blocks");
  }
  if (shape.total() != word.size()) {
    throw InvalidPresentation("word length " + std::to_string(word.size()) +
                              " does not match shape total " + std::to_string(shape.total()));
  }
  std::vector<Relation> relations;
  relations.reserve(shape.relation_count());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < shape.relation_count(); ++i) {
    const std::size_t l = shape.blocks()[2 * i];
    const std::size_t r = shape.blocks()[2 * i + 1];
    Relation rel{word.factor(pos, l), word.factor(pos + l, r)};
    pos += l + r;
    relations.push_back(std::move(rel));
  }
  return Presentation(alphabet, std::move(relations), kind);
}

std::pair<Word, Shape> decompose(const Presentation& p) {
  std::vector<Letter> letters;
  letters.reserve(p.sum_length());
  for (const auto& r : p.relations()) {
    letters.insert(letters.end(), r.lhs.begin(), r.lhs.end());
    letters.insert(letters.end(), r.rhs.begin(), r.rhs.end());
  }
  return {Word(std::move(letters)), p.shape()};
}

bool canonical_less(const UnorderedPresentation::Pair& a, const UnorderedPresentation::Pair& b) {
  ShortLex less;
  if (less(a.first, b.first)) return true;
  if (less(b.first, a.first)) return false;
  return less(a.second, b.second);
}

UnorderedPresentation::UnorderedPresentation(Alphabet alphabet, std::vector<Pair> relations,
                                             Kind kind)
    : alphabet_(std::move(alphabet)), relations_(std::move(relations)), kind_(kind) {
  for (auto& [u, v] : relations_) {
    if (ShortLex{}(v, u)) std::swap(u, v);
  }
  std::sort(relations_.begin(), relations_.end(), canonical_less);
  relations_.erase(std::unique(relations_.begin(), relations_.end()), relations_.end());
}

std::size_t UnorderedPresentation::sum_length() const noexcept {
  std::size_t total = 0;
  for (const auto& [u, v] : relations_) total += u.size() + v.size();
  return total;
}

std::size_t UnorderedPresentation::max_length() const noexcept {
  std::size_t longest = 0;
  for (const auto& [u, v] : relations_) longest = std::max({longest, u.size(), v.size()});
  return longest;
}

UnorderedPresentation forget_order(const Presentation& p) {
  std::vector<UnorderedPresentation::Pair> pairs;
  pairs.reserve(p.relation_count());
  for (const auto& r : p.relations()) pairs.emplace_back(r.lhs, r.rhs);
  return UnorderedPresentation(p.alphabet(), std::move(pairs), p.kind());
}

Presentation semigroup_as_monoid(const Presentation& p) {
  if (p.kind() != Kind::semigroup) {
    throw InvalidPresentation("semigroup_as_monoid expects a semigroup presentation");
  }
  return Presentation(p.alphabet(), p.relations(), Kind::monoid);
}

bool has_distinct_relations(const Presentation& p) {
  return forget_order(p).relation_count() == p.relation_count();
}

}  // namespace genlab
