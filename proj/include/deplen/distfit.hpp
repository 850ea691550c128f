#pragma once

// Maximum-likelihood fits of dependency-length samples on 1..d_max and AIC
// model comparison.
//
//   geometric             p(d) ∝ q^d                      k = 1
//   zeta                  p(d) ∝ d^(-gamma)               k = 1
//   two_regime_geometric  weight w on 1..b with p ∝ q1^d,
//                         1 - w on b+1..d_max with p ∝ q2^d  k = 3 (q1, q2, b)
//
// In the two-regime model w is fixed at the empirical share of observations
// at or below b, so it is not counted as a free parameter.
//
// Fits take a count histogram: counts[d - 1] observations of length d.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "deplen/pmf.hpp"

namespace deplen::fit {

enum class Family { geometric, zeta, two_regime_geometric };

std::string to_string(Family family);

// Search intervals of the 1-D maximizations.
inline constexpr double kDecayLower = 1e-6;
inline constexpr double kDecayUpper = 1.0 - 1e-6;
inline constexpr double kExponentLower = 1e-6;
inline constexpr double kExponentUpper = 20.0;
inline constexpr double kTolerance = 1e-10;

enum class Boundary { none, lower, upper };

std::string to_string(Boundary boundary);

struct FitResult {
  Family family = Family::geometric;
  // geometric: q; zeta: gamma; two_regime_geometric: q1, q2, b, w.
  std::map<std::string, double> params;
  int d_min = 1;
  int d_max = 1;
  double log_likelihood = 0.0;
  int free_parameters = 1;
  double aic = 0.0;
  std::int64_t sample_size = 0;
  // Set when the likelihood is maximized at an end of the search interval
  // (for two-regime fits, at an end for either segment).
  Boundary boundary = Boundary::none;
  std::vector<std::string> notes;

  double param(const std::string& name) const { return params.at(name); }
};

// Histogram of a sample. Throws DomainError for values outside 1..d_max.
std::vector<std::int64_t> histogram(std::span<const int> sample, int d_max);

// Throw NoDataError on an empty sample.
FitResult fit_geometric(std::span<const std::int64_t> counts);
FitResult fit_zeta(std::span<const std::int64_t> counts);

// Grid search over breakpoints b in [b_first, b_last], which must lie within
// 2..d_max-1 (DomainError otherwise). Ties go to the smaller b. Throws
// NoDataError when every b leaves a segment empty.
FitResult fit_two_regime(std::span<const std::int64_t> counts, int b_first, int b_last);

inline FitResult fit_geometric(std::span<const int> sample, int d_max) {
  return fit_geometric(histogram(sample, d_max));
}
inline FitResult fit_zeta(std::span<const int> sample, int d_max) { return fit_zeta(histogram(sample, d_max)); }
inline FitResult fit_two_regime(std::span<const int> sample, int d_max, int b_first, int b_last) {
  return fit_two_regime(histogram(sample, d_max), b_first, b_last);
}

// Log-likelihoods at arbitrary parameters, for probing optimizer output.
double geometric_log_likelihood(std::span<const std::int64_t> counts, double q);
double zeta_log_likelihood(std::span<const std::int64_t> counts, double gamma);

// The fitted distribution over 1..d_max.
LengthPmf fitted_pmf(const FitResult& result);

LengthPmf geometric_pmf(double q, int d_max);
LengthPmf zeta_pmf(double gamma, int d_max);
LengthPmf two_regime_pmf(double q1, double q2, int breakpoint, double first_weight, int d_max);

struct RankedFit {
  Family family;
  double aic = 0.0;
  double delta_aic = 0.0;  // relative to the best
};

// Ascending AIC. Throws ComparisonError for fewer than two results or for
// results from different samples (size or truncation).
std::vector<RankedFit> compare(std::span<const FitResult> results);

}  // namespace deplen::fit
