#include "genlab/strata.hpp"

#include <stdexcept>

#include "genlab/compositions.hpp"

namespace genlab {

namespace {

mpz_class power(std::size_t base, std::size_t exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

// Lexicographic successor among vectors with entries in [lo, hi]; false on wrap.
bool next_bounded(Blocks& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = b.size(); i-- > 0;) {
    if (b[i] < hi) {
      ++b[i];
      return true;
    }
    b[i] = lo;
  }
  return false;
}

// Word of the given length whose letters are the base-|A| digits of index,
// most significant first.
Word word_from_index(mpz_class index, std::size_t alphabet_size, std::size_t length) {
  std::vector<Letter> letters(length);
  for (std::size_t i = length; i-- > 0;) {
    letters[i] = static_cast<Letter>(mpz_fdiv_q_ui(index.get_mpz_t(), index.get_mpz_t(),
                                                   static_cast<unsigned long>(alphabet_size)));
  }
  return Word(std::move(letters));
}

Word sample_short_word(const std::vector<mpz_class>& cumulative, std::size_t alphabet_size,
                       std::size_t min_length, RandomStream& rng) {
  // cumulative[l] = number of words with min_length <= length <= l.
  const mpz_class x = rng.below(cumulative.back());
  std::size_t l = min_length;
  while (x >= cumulative[l]) ++l;
  const mpz_class below_l = l == 0 ? mpz_class(0) : cumulative[l - 1];
  return word_from_index(x - below_l, alphabet_size, l);
}

}  // namespace

std::string to_string(Stratification s) {
  return s == Stratification::sum_length ? "sum" : "max";
}

std::optional<Stratification> parse_stratification(std::string_view text) {
  if (text == "sum") return Stratification::sum_length;
  if (text == "max") return Stratification::max_length;
  return std::nullopt;
}

bool in_stratum(const StratumDescriptor& desc, std::size_t n, const Presentation& p) {
  if (p.alphabet() != desc.alphabet || p.kind() != desc.kind || p.relation_count() != desc.k) {
    return false;
  }
  return (desc.strat == Stratification::sum_length ? p.sum_length() : p.max_length()) == n;
}

mpz_class words_up_to(std::size_t alphabet_size, std::size_t n, Kind kind) {
  mpz_class total = 0;
  for (std::size_t i = kind == Kind::monoid ? 0 : 1; i <= n; ++i) total += power(alphabet_size, i);
  return total;
}

mpz_class stratum_size(const StratumDescriptor& desc, std::size_t n) {
  const std::size_t a = desc.alphabet.size();
  const std::size_t slots = 2 * desc.k;
  if (desc.strat == Stratification::sum_length) {
    const mpz_class shapes =
        desc.kind == Kind::monoid ? count_weak(n, slots) : count_positive(n, slots);
    return power(a, n) * shapes;
  }
  const mpz_class upto = words_up_to(a, n, desc.kind);
  const mpz_class below = n == 0 ? mpz_class(0) : words_up_to(a, n - 1, desc.kind);
  mpz_class hi, lo;
  mpz_pow_ui(hi.get_mpz_t(), upto.get_mpz_t(), slots);
  mpz_pow_ui(lo.get_mpz_t(), below.get_mpz_t(), slots);
  return hi - lo;
}

mpz_class ball_size(const StratumDescriptor& desc, std::size_t n) {
  mpz_class total = 0;
  for (std::size_t j = 1; j <= n; ++j) total += stratum_size(desc, j);
  return total;
}

void for_each_word(std::size_t alphabet_size, std::size_t length,
                   const std::function<bool(const Word&)>& visit) {
  if (alphabet_size == 0) {
    if (length == 0) visit(Word{});
    return;
  }
  std::vector<Letter> letters(length, 0);
  const auto top = static_cast<Letter>(alphabet_size - 1);
  while (true) {
    if (!visit(Word(letters))) return;
    std::size_t i = length;
    while (i > 0 && letters[i - 1] == top) letters[--i] = 0;
    if (i == 0) return;
    ++letters[i - 1];
  }
}

void for_each_in_stratum(const StratumDescriptor& desc, std::size_t n,
                         const std::function<bool(const Presentation&)>& visit,
                         std::uint64_t cap) {
  check_cap(stratum_size(desc, n), cap);
  const std::size_t a = desc.alphabet.size();
  const std::size_t slots = 2 * desc.k;

  if (desc.strat == Stratification::sum_length) {
    const auto shapes = desc.kind == Kind::monoid ? enumerate_weak(n, slots, cap)
                                                  : enumerate_positive(n, slots, cap);
    bool go = true;
    for_each_word(a, n, [&](const Word& w) {
      for (const auto& blocks : shapes) {
        if (!visit(assemble(desc.alphabet, w, Shape(blocks), desc.kind))) return go = false;
      }
      return true;
    });
    return;
  }

  const std::size_t lo = desc.kind == Kind::monoid ? 0 : 1;
  if (n < lo) return;
  Blocks blocks(slots, lo);
  bool go = true;
  do {
    bool has_max = false;
    for (auto b : blocks) has_max = has_max || b == n;
    if (!has_max) continue;
    const Shape shape(blocks);
    for_each_word(a, shape.total(), [&](const Word& w) {
      go = visit(assemble(desc.alphabet, w, shape, desc.kind));
      return go;
    });
  } while (go && next_bounded(blocks, lo, n));
}

std::vector<Presentation> enumerate_stratum(const StratumDescriptor& desc, std::size_t n,
                                            std::uint64_t cap) {
  std::vector<Presentation> out;
  for_each_in_stratum(
      desc, n,
      [&](const Presentation& p) {
        out.push_back(p);
        return true;
      },
      cap);
  return out;
}

Word sample_word(std::size_t alphabet_size, std::size_t length, RandomStream& rng) {
  std::vector<Letter> letters(length);
  for (auto& l : letters) l = static_cast<Letter>(rng.below(alphabet_size));
  return Word(std::move(letters));
}

Presentation sample_stratum(const StratumDescriptor& desc, std::size_t n, RandomStream& rng) {
  const std::size_t a = desc.alphabet.size();
  const std::size_t slots = 2 * desc.k;
  if (stratum_size(desc, n) == 0) {
    throw std::domain_error("stratum " + std::to_string(n) + " is empty");
  }

  if (desc.strat == Stratification::sum_length) {
    const Word w = sample_word(a, n, rng);
    const Blocks blocks =
        desc.kind == Kind::monoid ? sample_weak(n, slots, rng) : sample_positive(n, slots, rng);
    return assemble(desc.alphabet, w, Shape(blocks), desc.kind);
  }

  const std::size_t lo = desc.kind == Kind::monoid ? 0 : 1;
  std::vector<mpz_class> cumulative(n + 1, 0);
  mpz_class running = 0;
  for (std::size_t l = lo; l <= n; ++l) {
    running += power(a, l);
    cumulative[l] = running;
  }
  std::vector<Relation> relations(desc.k);
  while (true) {
    bool reaches_n = false;
    for (auto& r : relations) {
      r.lhs = sample_short_word(cumulative, a, lo, rng);
      r.rhs = sample_short_word(cumulative, a, lo, rng);
      reaches_n = reaches_n || r.lhs.size() == n || r.rhs.size() == n;
    }
    if (reaches_n) break;
  }
  return Presentation(desc.alphabet, std::move(relations), desc.kind);
}

Presentation sample_ball(const StratumDescriptor& desc, std::size_t n, RandomStream& rng) {
  const mpz_class total = ball_size(desc, n);
  if (total == 0) throw std::domain_error("sample_ball: empty ball");
  mpz_class x = rng.below(total);
  for (std::size_t j = 1; j <= n; ++j) {
    const mpz_class size = stratum_size(desc, j);
    if (x < size) return sample_stratum(desc, j, rng);
    x -= size;
  }
  throw std::logic_error("sample_ball: cumulative sizes exhausted");
}

}  // namespace genlab
