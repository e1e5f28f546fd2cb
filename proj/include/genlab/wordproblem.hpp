#pragma once

#include <cstddef>
#include <optional>
#include <unordered_set>
#include <vector>

#include "genlab/presentation.hpp"

namespace genlab {

/// Bounds for breadth-first search over one-step equivalence.
struct RewriteLimits {
  std::size_t max_states = 100'000;
  /// 0 means "4 x the longest of the input words and relation words".
  std::size_t max_word_length = 0;
  std::size_t max_depth = 64;
};

enum class Verdict { equivalent, not_equivalent, inconclusive };

/// Why a search stopped short of exhausting the class.
enum class LimitHit { none, states, depth, word_length };

struct EquivalenceResult {
  Verdict verdict = Verdict::inconclusive;
  /// Minimal one-step distance when verdict == equivalent.
  std::size_t distance = 0;
  LimitHit limit = LimitHit::none;
  /// Words discovered and the size of the unexpanded frontier at stop time.
  std::size_t states = 0;
  std::size_t frontier = 0;
};

/// All words one-step equivalent to w: w = a x b becomes a y b for a relation
/// (x, y) used in either direction. w itself is included only if some
/// rewrite reproduces it (e.g. a relation (x, x)).
std::vector<Word> one_step_neighbors(const Presentation& p, const Word& w);

struct ClassResult {
  /// Complete when exhausted is true; otherwise the words found so far.
  std::unordered_set<Word> words;
  bool exhausted = false;
  LimitHit limit = LimitHit::none;
  std::size_t frontier = 0;
  std::size_t depth = 0;
};

/// Breadth-first closure of {w} under one_step_neighbors.
ClassResult equivalence_class(const Presentation& p, const Word& w, RewriteLimits limits = {});

/// Decides u == v within limits; never returns a wrong verdict. A negative
/// verdict requires the class of u to be exhausted without pruning.
EquivalenceResult equivalent(const Presentation& p, const Word& u, const Word& v,
                             RewriteLimits limits = {});

struct StructuralReport {
  /// Two slots carry the same relation word.
  bool duplicate_relation_word = false;
  /// Some relation word is a factor of the word in a different slot.
  bool relation_word_factor_of_another = false;
};

StructuralReport structural_checks(const Presentation& p);

}  // namespace genlab
