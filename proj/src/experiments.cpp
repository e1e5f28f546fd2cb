#include "genlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "genlab/compositions.hpp"
#include "genlab/pieces.hpp"
#include "genlab/random.hpp"
#include "genlab/statistics.hpp"

namespace genlab {

namespace {

mpz_class power(std::size_t base, std::size_t exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

mpz_class factorial(std::size_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

double log_base(double x, double base) { return std::log(x) / std::log(base); }

}  // namespace

// ---------------------------------------------------------------------------
// Repeated factors

std::vector<mpz_class> repeated_factor_histogram(std::size_t alphabet_size, std::size_t c,
                                                 std::uint64_t cap) {
  check_cap(power(alphabet_size, c), cap);
  std::vector<std::uint64_t> counts(c + 1, 0);
  for_each_word(alphabet_size, c, [&](const Word& w) {
    ++counts[longest_repeated_factor(w)];
    return true;
  });
  std::vector<mpz_class> out;
  out.reserve(counts.size());
  for (auto v : counts) out.emplace_back(std::to_string(v));
  return out;
}

mpz_class count_repeated_factor_words(std::size_t alphabet_size, std::size_t c, std::size_t p,
                                      std::uint64_t cap) {
  const auto hist = repeated_factor_histogram(alphabet_size, c, cap);
  mpz_class total = 0;
  for (std::size_t l = std::max<std::size_t>(p, 1); l < hist.size(); ++l) total += hist[l];
  return total;
}

// ---------------------------------------------------------------------------
// Bounds

double clip(double x) { return std::clamp(x, 0.0, 1.0); }

mpq_class clip(const mpq_class& x) {
  if (x < 0) return 0;
  if (x > 1) return 1;
  return x;
}

mpz_class repeated_factor_bound(std::size_t alphabet_size, std::size_t c, std::size_t p) {
  if (p > c) return 0;
  return mpz_class(c) * mpz_class(c) * power(alphabet_size, c - p);
}

mpq_class piece_length_bound(std::size_t n, std::size_t r, std::size_t alphabet_size) {
  mpq_class out(mpz_class(n) * mpz_class(n), power(alphabet_size, r));
  out.canonicalize();
  return out;
}

double fixed_shape_failure_bound(std::size_t n, std::size_t min_block, std::size_t m,
                                 std::size_t alphabet_size) {
  if (m < 2) throw std::invalid_argument("fixed_shape_failure_bound needs m >= 2");
  const double exponent = static_cast<double>(min_block) / static_cast<double>(m - 1);
  return static_cast<double>(n) * static_cast<double>(n) /
         std::pow(static_cast<double>(alphabet_size), exponent);
}

bool within_fixed_shape_failure_bound(const mpq_class& x, std::size_t n, std::size_t min_block,
                                      std::size_t m, std::size_t alphabet_size) {
  if (m < 2) throw std::invalid_argument("within_fixed_shape_failure_bound needs m >= 2");
  if (x < 0) throw std::invalid_argument("proportion must be non-negative");
  if (x > 1) return false;
  // x <= n^2 / a^(K/(m-1))  <=>  x^(m-1) a^K <= n^(2(m-1)).
  mpq_class lhs = 1;
  for (std::size_t i = 0; i + 1 < m; ++i) lhs *= x;
  lhs *= power(alphabet_size, min_block);
  const mpz_class rhs = power(n, 2 * (m - 1));
  return lhs <= rhs;
}

mpq_class short_word_bound(std::size_t k, std::size_t alphabet_size, std::size_t n,
                           std::size_t f) {
  if (f >= n) return mpq_class(2 * k);
  mpq_class out(mpz_class(2 * k), power(alphabet_size, n - f));
  out.canonicalize();
  return out;
}

double max_length_bound(std::size_t alphabet_size, std::size_t k, std::size_t m, std::size_t n,
                        double d) {
  if (m < 2) throw std::invalid_argument("max_length_bound needs m >= 2");
  const double a = static_cast<double>(alphabet_size);
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  const double first = 2 * kk * std::pow(a, -(1 - d) * nn);
  const double second = 4 * kk * kk * nn * nn * std::pow(a, -d * nn / static_cast<double>(m - 1));
  return first + second;
}

std::vector<double> d_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 19; ++i) grid.push_back(i / 20.0);
  return grid;
}

BoundReport bounds(const StratumDescriptor& desc, std::size_t n, std::size_t m) {
  if (m == 0) throw std::invalid_argument("bounds needs m >= 1");
  BoundReport r;
  r.n = n;
  r.m = m;
  r.strat = desc.strat;
  const std::size_t a = desc.alphabet.size();
  const std::size_t slots = 2 * desc.k;
  const bool monoid = desc.kind == Kind::monoid;

  if (m == 1) {
    // Only an empty relation word breaks C(1).
    r.tail_term = 0.0;
    if (!monoid) {
      r.short_term = 0.0;
    } else if (desc.strat == Stratification::sum_length) {
      r.short_term = slots >= 2 ? short_block_proportion_bound(n, slots, 0).get_d() : 0.0;
    } else {
      r.short_term = n == 0 ? 1.0 : short_word_bound(desc.k, a, n, 0).get_d();
    }
    r.composite = clip(r.short_term + r.tail_term);
    return r;
  }
  if (a < 2 || n == 0) return r;

  if (desc.strat == Stratification::sum_length) {
    const double f_real = 3.0 * static_cast<double>(m - 1) * log_base(static_cast<double>(n),
                                                                      static_cast<double>(a));
    // Nudge down so exact powers (f_real integral) are not lost to rounding.
    const auto f = static_cast<std::size_t>(std::floor(f_real + 1e-9));
    r.threshold = f;
    if (slots < 2) {
      r.short_term = 0.0;
    } else if (monoid) {
      r.short_term = short_block_proportion_bound(n, slots, f).get_d();
    } else if (f == 0 || n < slots) {
      r.short_term = 0.0;
    } else {
      // Positive blocks <= f are weak blocks <= f - 1 of n - 2k.
      r.short_term = short_block_proportion_bound(n - slots, slots, f - 1).get_d();
    }
    r.tail_term = 1.0 / static_cast<double>(n);
  } else {
    double best = std::numeric_limits<double>::infinity();
    double best_d = 0.0;
    for (double d : d_grid()) {
      const double v = max_length_bound(a, desc.k, m, n, d);
      if (v < best) {
        best = v;
        best_d = d;
      }
    }
    r.d = best_d;
    r.threshold = static_cast<std::size_t>(std::floor(best_d * static_cast<double>(n)));
    r.short_term = 2.0 * static_cast<double>(desc.k) *
                   std::pow(static_cast<double>(a), -(1 - best_d) * static_cast<double>(n));
    r.tail_term = best - r.short_term;
  }
  r.composite = clip(r.short_term + r.tail_term);
  return r;
}

// ---------------------------------------------------------------------------
// Exact proportions

mpq_class ExactCount::proportion() const {
  if (total == 0) return 0;
  mpq_class out(hits, total);
  out.canonicalize();
  return out;
}

ExactCount exact_failure_count(const StratumDescriptor& desc, std::size_t n, std::size_t m,
                               std::uint64_t cap) {
  std::uint64_t hits = 0, total = 0;
  for_each_in_stratum(
      desc, n,
      [&](const Presentation& p) {
        ++total;
        if (!satisfies_C(PieceIndex(p), m)) ++hits;
        return true;
      },
      cap);
  return {mpz_class(std::to_string(hits)), mpz_class(std::to_string(total))};
}

mpq_class exact_failure_proportion(const StratumDescriptor& desc, std::size_t n, std::size_t m,
                                   std::uint64_t cap) {
  return exact_failure_count(desc, n, m, cap).proportion();
}

mpq_class exact_piece_proportion(const StratumDescriptor& desc, std::size_t n, std::size_t r,
                                 std::uint64_t cap) {
  std::uint64_t hits = 0, total = 0;
  for_each_in_stratum(
      desc, n,
      [&](const Presentation& p) {
        ++total;
        if (PieceIndex(p).max_piece_length() >= r) ++hits;
        return true;
      },
      cap);
  return ExactCount{mpz_class(std::to_string(hits)), mpz_class(std::to_string(total))}
      .proportion();
}

ShapeCensus shape_census(std::size_t alphabet_size, const Shape& shape, std::uint64_t cap) {
  const std::size_t total = shape.total();
  check_cap(power(alphabet_size, total), cap);
  const Alphabet alphabet = Alphabet::standard(alphabet_size);
  std::vector<std::uint64_t> pieces(total + 1, 0), degrees(total + 2, 0);
  std::uint64_t unbounded = 0, count = 0;
  for_each_word(alphabet_size, total, [&](const Word& w) {
    const PieceIndex index(assemble(alphabet, w, shape));
    ++count;
    ++pieces[index.max_piece_length()];
    const auto d = overlap_degree(index);
    if (d) {
      ++degrees[std::min(*d, total + 1)];
    } else {
      ++unbounded;
    }
    return true;
  });
  ShapeCensus census;
  census.shape = shape;
  census.total = mpz_class(std::to_string(count));
  for (auto v : pieces) census.max_piece_histogram.emplace_back(std::to_string(v));
  for (auto v : degrees) census.degree_histogram.emplace_back(std::to_string(v));
  census.unbounded = mpz_class(std::to_string(unbounded));
  return census;
}

mpq_class ShapeCensus::piece_proportion(std::size_t r) const {
  mpz_class hits = 0;
  for (std::size_t l = r; l < max_piece_histogram.size(); ++l) hits += max_piece_histogram[l];
  return ExactCount{hits, total}.proportion();
}

mpq_class ShapeCensus::failure_proportion(std::size_t m) const {
  mpz_class hits = 0;
  for (std::size_t d = 0; d < m && d < degree_histogram.size(); ++d) hits += degree_histogram[d];
  return ExactCount{hits, total}.proportion();
}

// ---------------------------------------------------------------------------
// Monte Carlo

namespace {

std::uint64_t stratum_seed(std::uint64_t seed, std::size_t n) {
  return mix64(seed) ^ mix64(0x5EED0000ULL + n);
}

}  // namespace

ProportionEstimate estimate_failure_proportion(const StratumDescriptor& desc, std::size_t n,
                                               std::size_t m, std::uint64_t trials,
                                               std::uint64_t seed, unsigned jobs) {
  if (trials == 0) throw std::invalid_argument("estimate_failure_proportion needs trials >= 1");
  if (m == 0) throw std::invalid_argument("estimate_failure_proportion needs m >= 1");
  if (stratum_size(desc, n) == 0) {
    throw std::domain_error("stratum " + std::to_string(n) + " is empty");
  }
  const std::uint64_t key = stratum_seed(seed, n);
  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t failures = 0;
    for (std::uint64_t t = begin; t < end; ++t) {
      RandomStream rng(key, t);
      if (!satisfies_C(PieceIndex(sample_stratum(desc, n, rng)), m)) ++failures;
    }
    return failures;
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(
                                                   trials, 1024))));
  std::vector<std::uint64_t> partial(jobs, 0);
  if (jobs == 1) {
    partial[0] = run(0, trials);
  } else {
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      const std::uint64_t begin = trials * j / jobs;
      const std::uint64_t end = trials * (j + 1) / jobs;
      workers.emplace_back([&, j, begin, end] { partial[j] = run(begin, end); });
    }
    for (auto& w : workers) w.join();
  }

  ProportionEstimate e;
  e.n = n;
  e.trials = trials;
  for (auto f : partial) e.failures += f;
  e.estimate = static_cast<double>(e.failures) / static_cast<double>(trials);
  const Interval ci = clopper_pearson(e.failures, trials, 0.99);
  e.ci_low = ci.low;
  e.ci_high = ci.high;
  return e;
}

std::vector<ConvergenceRow> convergence_report(const StratumDescriptor& desc, std::size_t m,
                                               std::vector<std::size_t> n_list,
                                               std::uint64_t trials, std::uint64_t seed,
                                               unsigned jobs) {
  std::sort(n_list.begin(), n_list.end());
  n_list.erase(std::unique(n_list.begin(), n_list.end()), n_list.end());
  std::vector<ConvergenceRow> rows;
  rows.reserve(n_list.size());
  for (std::size_t n : n_list) {
    rows.push_back({estimate_failure_proportion(desc, n, m, trials, seed, jobs),
                    bounds(desc, n, m).composite});
  }
  return rows;
}

std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

const std::string& csv_header() {
  static const std::string header =
      "n,strat,kind,alphabet,k,m,trials,failures,estimate,ci_low,ci_high,bound";
  return header;
}

void write_csv(std::ostream& out, const StratumDescriptor& desc, std::size_t m,
               const std::vector<ConvergenceRow>& rows) {
  for (const auto& row : rows) {
    const auto& e = row.estimate;
    out << e.n << ',' << to_string(desc.strat) << ',' << to_string(desc.kind) << ','
        << desc.alphabet.size() << ',' << desc.k << ',' << m << ',' << e.trials << ','
        << e.failures << ',' << format_float(e.estimate) << ',' << format_float(e.ci_low) << ','
        << format_float(e.ci_high) << ',' << format_float(row.bound) << '\n';
  }
}

void write_json(std::ostream& out, const StratumDescriptor& desc, std::size_t m,
                const std::vector<ConvergenceRow>& rows) {
  // Round through the 10-significant-digit text form so both outputs agree.
  const auto num = [](double x) { return std::stod(format_float(x)); };
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    const auto& e = row.estimate;
    arr.push_back({{"n", e.n},
                   {"strat", to_string(desc.strat)},
                   {"kind", to_string(desc.kind)},
                   {"alphabet", desc.alphabet.size()},
                   {"k", desc.k},
                   {"m", m},
                   {"trials", e.trials},
                   {"failures", e.failures},
                   {"estimate", num(e.estimate)},
                   {"ci_low", num(e.ci_low)},
                   {"ci_high", num(e.ci_high)},
                   {"bound", num(row.bound)}});
  }
  out << arr.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Stratification maps

std::string to_string(MapId id) {
  return id == MapId::forget_order ? "forget_order" : "semigroup_as_monoid";
}

std::optional<MapId> parse_map_id(std::string_view text) {
  if (text == "forget_order") return MapId::forget_order;
  if (text == "semigroup_as_monoid") return MapId::semigroup_as_monoid;
  return std::nullopt;
}

std::vector<UnorderedPresentation> enumerate_unordered(const StratumDescriptor& desc,
                                                       std::size_t n, std::uint64_t cap) {
  const std::size_t a = desc.alphabet.size();
  const std::size_t min_len = desc.kind == Kind::monoid ? 0 : 1;
  const bool sum = desc.strat == Stratification::sum_length;

  std::vector<Word> words;
  for (std::size_t l = min_len; l <= n; ++l) {
    for_each_word(a, l, [&](const Word& w) {
      words.push_back(w);
      return true;
    });
  }
  // Canonical pairs u <= v (ShortLex) fitting in stratum n.
  using Pair = UnorderedPresentation::Pair;
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      const std::size_t len = sum ? words[i].size() + words[j].size()
                                  : std::max(words[i].size(), words[j].size());
      if (len <= n) pairs.emplace_back(words[i], words[j]);
    }
  }
  std::sort(pairs.begin(), pairs.end(), canonical_less);

  std::vector<UnorderedPresentation> out;
  std::vector<Pair> chosen;
  std::uint64_t visited = 0;
  // Choose k distinct pairs with increasing index; `used` is the sum length
  // so far (sum) or whether some word reached n (max).
  auto rec = [&](auto&& self, std::size_t from, std::size_t used, bool reached) -> void {
    if (++visited > cap) throw EnumerationCapExceeded(mpz_class(std::to_string(visited)), cap);
    if (chosen.size() == desc.k) {
      if (sum ? used == n : reached) {
        out.emplace_back(desc.alphabet, chosen, desc.kind);
      }
      return;
    }
    for (std::size_t i = from; i < pairs.size(); ++i) {
      const auto& [u, v] = pairs[i];
      const std::size_t len = u.size() + v.size();
      if (sum && used + len > n) continue;
      chosen.push_back(pairs[i]);
      self(self, i + 1, used + len, reached || u.size() == n || v.size() == n);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0, false);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

MapReport verify_forget_order(const StratumDescriptor& desc, std::size_t n, std::uint64_t cap) {
  MapReport report;
  report.map = MapId::forget_order;
  report.n = n;
  report.stratification_preserving = true;

  std::map<UnorderedPresentation, std::size_t> fibres;
  std::uint64_t domain = 0, restricted = 0;
  for_each_in_stratum(
      desc, n,
      [&](const Presentation& p) {
        ++domain;
        if (!has_distinct_relations(p)) return true;
        ++restricted;
        UnorderedPresentation y = forget_order(p);
        const std::size_t len = desc.strat == Stratification::sum_length ? y.sum_length()
                                                                         : y.max_length();
        if (len != n || y.relation_count() != desc.k) report.stratification_preserving = false;
        ++fibres[std::move(y)];
        return true;
      },
      cap);

  const auto codomain = enumerate_unordered(desc, n, cap);
  report.domain_size = mpz_class(std::to_string(domain));
  report.restricted_size = mpz_class(std::to_string(restricted));
  report.codomain_size = mpz_class(std::to_string(codomain.size()));
  report.image_size = fibres.size();
  report.outside_proportion = 0;

  report.surjective = fibres.size() == codomain.size();
  for (const auto& y : codomain) {
    if (!fibres.contains(y)) {
      report.surjective = false;
      break;
    }
  }

  report.fibre_formula_holds = true;
  const mpz_class k_fact = factorial(desc.k);
  for (const auto& [y, size] : fibres) {
    std::size_t nonsym = 0;
    for (const auto& [u, v] : y.relations()) nonsym += u != v ? 1 : 0;
    if (mpz_class(std::to_string(size)) != k_fact * power(2, nonsym)) {
      report.fibre_formula_holds = false;
    }
  }
  if (!fibres.empty()) {
    report.min_fibre = std::numeric_limits<std::size_t>::max();
    for (const auto& [y, size] : fibres) {
      report.min_fibre = std::min(report.min_fibre, size);
      report.max_fibre = std::max(report.max_fibre, size);
    }
    report.d_ratio = mpq_class(mpz_class(std::to_string(report.max_fibre)),
                               mpz_class(std::to_string(report.min_fibre)));
    report.d_ratio.canonicalize();
  }
  return report;
}

MapReport verify_semigroup_as_monoid(const StratumDescriptor& desc, std::size_t n,
                                     std::uint64_t cap) {
  MapReport report;
  report.map = MapId::semigroup_as_monoid;
  report.n = n;
  report.stratification_preserving = true;

  StratumDescriptor semi = desc;
  semi.kind = Kind::semigroup;
  StratumDescriptor mono = desc;
  mono.kind = Kind::monoid;

  using Key = std::pair<Word, Shape>;
  std::map<Key, std::size_t> fibres;
  std::uint64_t domain = 0;
  for_each_in_stratum(
      semi, n,
      [&](const Presentation& p) {
        ++domain;
        const Presentation y = semigroup_as_monoid(p);
        if (!in_stratum(mono, n, y)) report.stratification_preserving = false;
        ++fibres[decompose(y)];
        return true;
      },
      cap);

  std::set<Key> target;
  std::uint64_t codomain = 0;
  for_each_in_stratum(
      mono, n,
      [&](const Presentation& p) {
        ++codomain;
        if (p.shape().min_block() > 0 || p.slot_count() == 0) target.insert(decompose(p));
        return true;
      },
      cap);

  report.domain_size = mpz_class(std::to_string(domain));
  report.restricted_size = report.domain_size;
  report.codomain_size = mpz_class(std::to_string(codomain));
  report.image_size = fibres.size();
  report.surjective = fibres.size() == target.size() &&
                      std::all_of(target.begin(), target.end(),
                                  [&](const Key& key) { return fibres.contains(key); });
  report.fibre_formula_holds = std::all_of(fibres.begin(), fibres.end(),
                                           [](const auto& kv) { return kv.second == 1; });
  if (!fibres.empty()) {
    report.min_fibre = std::numeric_limits<std::size_t>::max();
    for (const auto& [key, size] : fibres) {
      report.min_fibre = std::min(report.min_fibre, size);
      report.max_fibre = std::max(report.max_fibre, size);
    }
    report.d_ratio = mpq_class(mpz_class(std::to_string(report.max_fibre)),
                               mpz_class(std::to_string(report.min_fibre)));
    report.d_ratio.canonicalize();
  }
  if (codomain > 0) {
    report.outside_proportion =
        mpq_class(mpz_class(std::to_string(codomain - target.size())),
                  mpz_class(std::to_string(codomain)));
    report.outside_proportion.canonicalize();
  }
  return report;
}

}  // namespace

MapReport verify_map(MapId map, const StratumDescriptor& desc, std::size_t n, std::uint64_t cap) {
  return map == MapId::forget_order ? verify_forget_order(desc, n, cap)
                                    : verify_semigroup_as_monoid(desc, n, cap);
}

}  // namespace genlab
