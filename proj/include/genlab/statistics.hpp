#pragma once

#include <cstdint>
#include <span>

namespace genlab {

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

/// Exact (Clopper-Pearson) two-sided interval for a binomial proportion.
Interval clopper_pearson(std::uint64_t successes, std::uint64_t trials, double confidence = 0.99);

/// Pearson chi-square statistic of observed counts against expected
/// probabilities (which must sum to 1).
double chi_square_statistic(std::span<const std::uint64_t> observed,
                            std::span<const double> expected);

/// Upper-tail p-value of the chi-square goodness-of-fit test with
/// observed.size() - 1 degrees of freedom.
double chi_square_p_value(std::span<const std::uint64_t> observed,
                          std::span<const double> expected);

/// Same against the uniform distribution on observed.size() outcomes.
double chi_square_uniform_p_value(std::span<const std::uint64_t> observed);

}  // namespace genlab
