#include "genlab/wordproblem.hpp"

#include <algorithm>

namespace genlab {

namespace {

std::size_t effective_word_limit(const Presentation& p, const RewriteLimits& limits,
                                 std::size_t input_length) {
  if (limits.max_word_length != 0) return limits.max_word_length;
  std::size_t longest = std::max(input_length, p.max_length());
  return std::max<std::size_t>(4 * longest, 1);
}

void add_rewrites(const Word& w, const Word& from, const Word& to, std::vector<Word>& out) {
  if (from.size() > w.size()) return;
  for (std::size_t i = 0; i + from.size() <= w.size(); ++i) {
    if (!std::equal(from.begin(), from.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) {
      continue;
    }
    std::vector<Letter> next;
    next.reserve(w.size() - from.size() + to.size());
    next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    next.insert(next.end(), to.begin(), to.end());
    next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i + from.size()), w.end());
    out.emplace_back(std::move(next));
  }
}

struct Search {
  std::unordered_set<Word> seen;
  bool found = false;
  std::size_t found_depth = 0;
  bool exhausted = false;
  LimitHit limit = LimitHit::none;
  std::size_t frontier = 0;
  std::size_t depth = 0;
};

// Breadth-first search from `start`, stopping early when `target` is seen.
Search bfs(const Presentation& p, const Word& start, const Word* target,
           const RewriteLimits& limits, std::size_t word_limit) {
  Search s;
  s.seen.insert(start);
  if (target != nullptr && start == *target) {
    s.found = true;
    return s;
  }
  std::vector<Word> layer{start};
  bool pruned = false;
  while (!layer.empty()) {
    if (s.depth >= limits.max_depth) {
      s.limit = LimitHit::depth;
      s.frontier = layer.size();
      return s;
    }
    std::vector<Word> next_layer;
    for (std::size_t idx = 0; idx < layer.size(); ++idx) {
      for (Word& nb : one_step_neighbors(p, layer[idx])) {
        if (nb.size() > word_limit) {
          pruned = true;
          continue;
        }
        if (s.seen.contains(nb)) continue;
        if (s.seen.size() >= limits.max_states) {
          s.limit = LimitHit::states;
          s.frontier = layer.size() - idx + next_layer.size();
          return s;
        }
        if (target != nullptr && nb == *target) {
          s.seen.insert(nb);
          s.found = true;
          s.found_depth = s.depth + 1;
          return s;
        }
        s.seen.insert(nb);
        next_layer.push_back(std::move(nb));
      }
    }
    layer = std::move(next_layer);
    ++s.depth;
  }
  if (pruned) {
    s.limit = LimitHit::word_length;
  } else {
    s.exhausted = true;
  }
  return s;
}

}  // namespace

std::vector<Word> one_step_neighbors(const Presentation& p, const Word& w) {
  std::vector<Word> out;
  for (const auto& r : p.relations()) {
    add_rewrites(w, r.lhs, r.rhs, out);
    add_rewrites(w, r.rhs, r.lhs, out);
  }
  std::sort(out.begin(), out.end(), ShortLex{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ClassResult equivalence_class(const Presentation& p, const Word& w, RewriteLimits limits) {
  Search s = bfs(p, w, nullptr, limits, effective_word_limit(p, limits, w.size()));
  ClassResult out;
  out.words = std::move(s.seen);
  out.exhausted = s.exhausted;
  out.limit = s.limit;
  out.frontier = s.frontier;
  out.depth = s.depth;
  return out;
}

EquivalenceResult equivalent(const Presentation& p, const Word& u, const Word& v,
                             RewriteLimits limits) {
  const std::size_t word_limit = effective_word_limit(p, limits, std::max(u.size(), v.size()));
  Search s = bfs(p, u, &v, limits, word_limit);
  EquivalenceResult out;
  out.states = s.seen.size();
  out.frontier = s.frontier;
  out.limit = s.limit;
  if (s.found) {
    out.verdict = Verdict::equivalent;
    out.distance = s.found_depth;
  } else if (s.exhausted) {
    out.verdict = Verdict::not_equivalent;
  } else {
    out.verdict = Verdict::inconclusive;
  }
  return out;
}

StructuralReport structural_checks(const Presentation& p) {
  StructuralReport report;
  for (std::size_t s = 0; s < p.slot_count(); ++s) {
    for (std::size_t t = 0; t < p.slot_count(); ++t) {
      if (s == t) continue;
      const Word& a = p.slot(s);
      const Word& b = p.slot(t);
      if (a == b) report.duplicate_relation_word = true;
      if (b.count_occurrences(a.letters()) > 0) report.relation_word_factor_of_another = true;
    }
  }
  return report;
}

}  // namespace genlab
