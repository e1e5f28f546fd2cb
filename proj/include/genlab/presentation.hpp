#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "genlab/word.hpp"

namespace genlab {

enum class Kind { monoid, semigroup };

std::string to_string(Kind kind);
std::optional<Kind> parse_kind(std::string_view text);

struct Relation {
  Word lhs;
  Word rhs;

  friend bool operator==(const Relation&, const Relation&) = default;
  friend auto operator<=>(const Relation&, const Relation&) = default;
};

/// Thrown when a presentation or shape violates its invariants.
class InvalidPresentation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lengths of the 2k relation words, in the order lhs_1, rhs_1, ..., lhs_k, rhs_k.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<std::size_t> blocks) : blocks_(std::move(blocks)) {}

  const std::vector<std::size_t>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  std::size_t relation_count() const noexcept { return blocks_.size() / 2; }
  std::size_t total() const noexcept;
  /// Smallest block, 0 for the empty shape.
  std::size_t min_block() const noexcept;
  std::size_t max_block() const noexcept;

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  std::vector<std::size_t> blocks_;
};

/// An ordered finite presentation <A | R> of a monoid or semigroup.
/// Immutable after construction.
class Presentation {
 public:
  /// Throws InvalidPresentation if a relation uses a letter outside the
  /// alphabet, or if kind is semigroup and some relation word is empty.
  Presentation(Alphabet alphabet, std::vector<Relation> relations, Kind kind);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  Kind kind() const noexcept { return kind_; }

  std::size_t relation_count() const noexcept { return relations_.size(); }
  /// 2k relation words indexed by slot: slot 2i is lhs_i, slot 2i+1 is rhs_i.
  std::size_t slot_count() const noexcept { return 2 * relations_.size(); }
  const Word& slot(std::size_t s) const;

  Shape shape() const;
  std::size_t sum_length() const noexcept;
  std::size_t max_length() const noexcept;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Relation> relations_;
  Kind kind_;
};

/// Presentation whose relation words are the consecutive block-slices of
/// `word` according to `shape`. Throws InvalidPresentation when the shape has
/// an odd number of blocks or its total differs from |word|.
Presentation assemble(const Alphabet& alphabet, const Word& word, const Shape& shape,
                      Kind kind = Kind::monoid);

/// Inverse of assemble: concatenation of the relation words and their lengths.
std::pair<Word, Shape> decompose(const Presentation& p);

/// A set of unordered relations; each pair stored in ShortLex order, the set
/// sorted and duplicate-free.
class UnorderedPresentation {
 public:
  using Pair = std::pair<Word, Word>;

  UnorderedPresentation(Alphabet alphabet, std::vector<Pair> relations, Kind kind);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Pair>& relations() const noexcept { return relations_; }
  Kind kind() const noexcept { return kind_; }
  std::size_t relation_count() const noexcept { return relations_.size(); }
  std::size_t sum_length() const noexcept;
  std::size_t max_length() const noexcept;

  friend bool operator==(const UnorderedPresentation&, const UnorderedPresentation&) = default;
  friend bool operator<(const UnorderedPresentation& a, const UnorderedPresentation& b) {
    return a.relations_ < b.relations_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Pair> relations_;
  Kind kind_;
};

/// Canonical ordering for pairs inside an UnorderedPresentation.
bool canonical_less(const UnorderedPresentation::Pair& a, const UnorderedPresentation::Pair& b);

/// Forgets relation order and orientation; duplicates and (u,v)/(v,u) twins collapse.
UnorderedPresentation forget_order(const Presentation& p);

/// The identity embedding of semigroup presentations into monoid
/// presentations. Throws InvalidPresentation if `p` is not a semigroup presentation.
Presentation semigroup_as_monoid(const Presentation& p);

/// True if no relation repeats and no two relations are (u,v), (v,u) with u != v.
bool has_distinct_relations(const Presentation& p);

}  // namespace genlab
