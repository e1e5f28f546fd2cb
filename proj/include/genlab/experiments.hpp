#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "genlab/errors.hpp"
#include "genlab/presentation.hpp"
#include "genlab/strata.hpp"

namespace genlab {

// ---------------------------------------------------------------------------
// Repeated factors

/// Histogram over words of length c: entry l counts the words whose longest
/// factor occurring at two distinct start positions has length exactly l.
/// Throws EnumerationCapExceeded when |A|^c > cap.
std::vector<mpz_class> repeated_factor_histogram(std::size_t alphabet_size, std::size_t c,
                                                 std::uint64_t cap = kDefaultEnumerationCap);

/// Number of words of length c with some factor of length >= p occurring at
/// two distinct start positions.
mpz_class count_repeated_factor_words(std::size_t alphabet_size, std::size_t c, std::size_t p,
                                      std::uint64_t cap = kDefaultEnumerationCap);

// ---------------------------------------------------------------------------
// Closed-form bounds. Raw values are unclipped; clip() maps into [0, 1].

double clip(double x);
mpq_class clip(const mpq_class& x);

/// c^2 |A|^(c-p): bound on count_repeated_factor_words.
mpz_class repeated_factor_bound(std::size_t alphabet_size, std::size_t c, std::size_t p);

/// n^2 |A|^-r: bound on the proportion of presentations of a fixed shape of
/// total n with a piece of length >= r.
mpq_class piece_length_bound(std::size_t n, std::size_t r, std::size_t alphabet_size);

/// n^2 / |A|^(K/(m-1)): bound on the proportion of presentations of a fixed
/// shape (total n, smallest block K) failing C(m), m >= 2.
double fixed_shape_failure_bound(std::size_t n, std::size_t min_block, std::size_t m,
                                 std::size_t alphabet_size);

/// Exact test of x <= min(1, n^2 / |A|^(K/(m-1))) for rational x >= 0,
/// comparing x^(m-1) |A|^K against n^(2(m-1)).
bool within_fixed_shape_failure_bound(const mpq_class& x, std::size_t n, std::size_t min_block,
                                      std::size_t m, std::size_t alphabet_size);

/// 2k / |A|^(n-f): bound on the proportion of max-length stratum n
/// presentations having a relation word of length <= f.
mpq_class short_word_bound(std::size_t k, std::size_t alphabet_size, std::size_t n,
                           std::size_t f);

/// B(n, d) = 2k / |A|^((1-d)n) + 4 k^2 n^2 / |A|^(dn/(m-1)), unclipped.
double max_length_bound(std::size_t alphabet_size, std::size_t k, std::size_t m, std::size_t n,
                        double d);

/// The grid 0.05, 0.10, ..., 0.95 searched for the best d.
std::vector<double> d_grid();

struct BoundReport {
  std::size_t n = 0;
  std::size_t m = 0;
  Stratification strat = Stratification::sum_length;
  /// Proportion bound for presentations with a short relation word.
  double short_term = 1.0;
  /// Bound on the failing proportion among the remaining presentations.
  double tail_term = 1.0;
  /// min(1, short_term + tail_term).
  double composite = 1.0;
  /// Short-word threshold: f(n) for sum length, or the minimising d (as
  /// floor(d n)) for max length.
  std::size_t threshold = 0;
  /// Minimising grid value of d (max length only).
  std::optional<double> d;
};

/// Composite bound on the proportion of stratum n failing C(m).
///
/// Sum length (m >= 2): short-block term k'(k'-1)(f+1)/(n+k'-1) with
/// k' = 2k and f = floor(3(m-1) log_|A| n), plus the tail 1/n. Max length
/// (m >= 2): min over the d grid of B(n, d). For m = 1 only empty relation
/// words fail, giving the f = 0 short term alone (0 for semigroups).
/// Alphabets of size < 2 get the trivial bound 1.
BoundReport bounds(const StratumDescriptor& desc, std::size_t n, std::size_t m);

// ---------------------------------------------------------------------------
// Exact proportions over enumerated populations

struct ExactCount {
  mpz_class hits;
  mpz_class total;
  mpq_class proportion() const;
};

/// Presentations of stratum n failing C(m).
ExactCount exact_failure_count(const StratumDescriptor& desc, std::size_t n, std::size_t m,
                               std::uint64_t cap = kDefaultEnumerationCap);
mpq_class exact_failure_proportion(const StratumDescriptor& desc, std::size_t n, std::size_t m,
                                   std::uint64_t cap = kDefaultEnumerationCap);

/// Presentations of stratum n with a piece of length >= r.
mpq_class exact_piece_proportion(const StratumDescriptor& desc, std::size_t n, std::size_t r,
                                 std::uint64_t cap = kDefaultEnumerationCap);

/// Per-shape statistics over all |A|^total presentations of one shape.
struct ShapeCensus {
  Shape shape;
  mpz_class total;
  /// Entry l: presentations whose longest piece has length exactly l.
  std::vector<mpz_class> max_piece_histogram;
  /// Entry d: presentations with overlap degree d (capped at the last entry);
  /// unbounded presentations are counted separately.
  std::vector<mpz_class> degree_histogram;
  mpz_class unbounded;

  mpq_class piece_proportion(std::size_t r) const;  // longest piece >= r
  mpq_class failure_proportion(std::size_t m) const;  // fails C(m)
};

ShapeCensus shape_census(std::size_t alphabet_size, const Shape& shape,
                         std::uint64_t cap = kDefaultEnumerationCap);

// ---------------------------------------------------------------------------
// Monte Carlo

struct ProportionEstimate {
  std::size_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
};

/// Fraction of uniformly sampled stratum-n presentations failing C(m).
/// Trial t draws from RandomStream keyed by (seed, n, t), so the result is
/// identical for every jobs >= 1.
ProportionEstimate estimate_failure_proportion(const StratumDescriptor& desc, std::size_t n,
                                               std::size_t m, std::uint64_t trials,
                                               std::uint64_t seed, unsigned jobs = 1);

struct ConvergenceRow {
  ProportionEstimate estimate;
  double bound = 1.0;
};

std::vector<ConvergenceRow> convergence_report(const StratumDescriptor& desc, std::size_t m,
                                               std::vector<std::size_t> n_list,
                                               std::uint64_t trials, std::uint64_t seed,
                                               unsigned jobs = 1);

/// `%.10g` rendering used for every floating column.
std::string format_float(double x);

/// Header line of the experiment CSV schema (without newline).
const std::string& csv_header();

/// CSV body rows for one descriptor and m.
void write_csv(std::ostream& out, const StratumDescriptor& desc, std::size_t m,
               const std::vector<ConvergenceRow>& rows);

/// JSON array mirror of write_csv with identical field names.
void write_json(std::ostream& out, const StratumDescriptor& desc, std::size_t m,
                const std::vector<ConvergenceRow>& rows);

// ---------------------------------------------------------------------------
// Stratification maps

enum class MapId { forget_order, semigroup_as_monoid };

std::string to_string(MapId id);
std::optional<MapId> parse_map_id(std::string_view text);

struct MapReport {
  MapId map = MapId::forget_order;
  std::size_t n = 0;
  /// |X_n|, |X_n n X'| and |Y_n|.
  mpz_class domain_size;
  mpz_class restricted_size;
  mpz_class codomain_size;
  std::size_t image_size = 0;
  bool stratification_preserving = false;
  /// f(X_n n X') = Y_n n Y'.
  bool surjective = false;
  std::size_t min_fibre = 0;
  std::size_t max_fibre = 0;
  mpq_class d_ratio;
  /// Every fibre equals k! 2^s, s the number of non-symmetric relations of
  /// its image (forget_order); every fibre is 1 (semigroup_as_monoid).
  bool fibre_formula_holds = false;
  /// |Y_n \ Y'| / |Y_n|.
  mpq_class outside_proportion;
};

/// Exhaustively checks the hypotheses on stratum n.
///
/// forget_order: X = ordered presentations of desc.kind, X' those with no
/// repeated relation and no (u,v)/(v,u) twin, Y = unordered presentations
/// with k relations (enumerated independently), Y' = Y.
/// semigroup_as_monoid: X = X' = semigroup presentations, Y = monoid
/// presentations, Y' = those with no empty relation word. desc.kind is ignored.
MapReport verify_map(MapId map, const StratumDescriptor& desc, std::size_t n,
                     std::uint64_t cap = kDefaultEnumerationCap);

/// All unordered k-relation presentations of stratum n, sorted.
std::vector<UnorderedPresentation> enumerate_unordered(const StratumDescriptor& desc,
                                                       std::size_t n,
                                                       std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace genlab
