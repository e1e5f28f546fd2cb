#include "genlab/statistics.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/special_functions/beta.hpp>

namespace genlab {

Interval clopper_pearson(std::uint64_t successes, std::uint64_t trials, double confidence) {
  if (trials == 0) return {0.0, 1.0};
  if (successes > trials) throw std::invalid_argument("clopper_pearson: successes > trials");
  const double alpha = 1.0 - confidence;
  const auto x = static_cast<double>(successes);
  const auto n = static_cast<double>(trials);
  Interval out;
  out.low = successes == 0 ? 0.0 : boost::math::ibeta_inv(x, n - x + 1, alpha / 2);
  out.high = successes == trials ? 1.0 : boost::math::ibeta_inv(x + 1, n - x, 1 - alpha / 2);
  return out;
}

double chi_square_statistic(std::span<const std::uint64_t> observed,
                            std::span<const double> expected) {
  if (observed.size() != expected.size() || observed.empty()) {
    throw std::invalid_argument("chi_square_statistic: size mismatch");
  }
  const double total = static_cast<double>(
      std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = expected[i] * total;
    const double d = static_cast<double>(observed[i]) - e;
    stat += d * d / e;
  }
  return stat;
}

double chi_square_p_value(std::span<const std::uint64_t> observed,
                          std::span<const double> expected) {
  if (observed.size() < 2) return 1.0;
  const double stat = chi_square_statistic(observed, expected);
  const boost::math::chi_squared dist(static_cast<double>(observed.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

double chi_square_uniform_p_value(std::span<const std::uint64_t> observed) {
  const std::vector<double> expected(observed.size(), 1.0 / static_cast<double>(observed.size()));
  return chi_square_p_value(observed, expected);
}

}  // namespace genlab
