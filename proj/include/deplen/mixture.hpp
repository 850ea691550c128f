#pragma once

// Sentence-length distributions, mixtures of conditional dependency-length
// distributions over them, and the null-model moments they induce.
//
// A mixture pools p(d | n) over n with weights p(n). Two weightings matter:
// sentence weighting uses p(n) as given; dependency weighting uses
// (n - 1) p(n), normalized, which is what pooling every dependency of a
// corpus (MDD) does implicitly.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "deplen/pmf.hpp"
#include "deplen/stats.hpp"

namespace deplen::mixture {

enum class LengthKind { uniform, truncated_zeta, empirical };

std::string to_string(LengthKind kind);

class LengthDistribution {
 public:
  // p(n) = 1 / (n_max - n_min + 1) on n_min..n_max.
  static LengthDistribution uniform(int n_min, int n_max);
  // p(n) proportional to 1/n on n_min..n_max.
  static LengthDistribution truncated_zeta(int n_min, int n_max);
  // Normalized weights; n_max is the largest key. Throws ValidationError on
  // keys below n_min, negative weights or a zero total.
  static LengthDistribution empirical(const std::map<int, double>& weights, int n_min = 2);
  static LengthDistribution point_mass(int n, int n_min = 2);

  LengthKind kind() const { return kind_; }
  int n_min() const { return n_min_; }
  int n_max() const { return n_max_; }
  double p(int n) const;

 private:
  LengthDistribution(LengthKind kind, int n_min, int n_max, std::vector<double> probs);

  LengthKind kind_;
  int n_min_;
  int n_max_;
  std::vector<double> probs_;  // index n - n_min
};

// E[n]. Uniform and truncated zeta with n_min = 2 use their closed forms
// (see below); everything else sums p(n) n.
double expectation_n(const LengthDistribution& lengths);

// E[n^2]. Uniform uses the sum-of-squares closed form.
double expectation_n2(const LengthDistribution& lengths);

// (n_max (n_max + 1) / 2 - 1) / (n_max - 1); E[n] of the uniform on 2..n_max.
double uniform_expectation_closed_form(int n_max);
// (n_max - 1) / sum_{n=2}^{n_max} 1/n; E[n] of the truncated zeta on 2..n_max.
double zeta_expectation_closed_form(int n_max);

// Null-model E[d] = (E[n] + 1) / 3 with sentence weighting. The identity
// assumes n_min = 2; throws AssumptionError otherwise.
double null_expected_d(const LengthDistribution& lengths);

// Null-model E[D] = (E[n^2] - 1) / 3. Throws AssumptionError unless n_min = 2.
double null_expected_D(const LengthDistribution& lengths);

// sum_n w(n) (n + 1) / 3 with w(n) proportional to (n - 1) p(n): the null
// value an MDD over the same corpus estimates. Valid for any n_min >= 2.
double null_expected_d_dependency_weighted(const LengthDistribution& lengths);

// sum_n p(n) (n + 1) / 3 by direct summation, valid for any n_min >= 2.
double null_expected_d_sentence_weighted(const LengthDistribution& lengths);

// Rate linkage for geometric conditionals p(d | n) proportional to q(n)^d on 1..n-1.
enum class GeometricLinkage {
  null_mean,  // q(n) such that the conditional mean is (n + 1) / 3
  fixed,      // q(n) = q
  log_rate,   // -ln q(n) interpolated geometrically from rate_first at n_min to rate_last at n_max
};

std::string to_string(GeometricLinkage linkage);

struct NullConditional {};

struct GeometricConditional {
  GeometricLinkage linkage = GeometricLinkage::null_mean;
  double q = 0.5;
  double rate_first = 3.0;
  double rate_last = 0.02;
};

struct EmpiricalConditional {
  std::map<int, LengthPmf> by_n;  // p(d | n), each over 1..n-1
};

using ConditionalFamily = std::variant<NullConditional, GeometricConditional, EmpiricalConditional>;

std::string family_name(const ConditionalFamily& family);

struct MixtureSpec {
  LengthDistribution lengths;
  ConditionalFamily conditional;
};

// Decay q(n) chosen by the linkage; lengths supplies the interpolation range.
double geometric_decay(const GeometricConditional& family, int n, const LengthDistribution& lengths);

// p(d | n) over 1..n-1 ∝ q^d.
LengthPmf truncated_geometric_conditional(double q, int n);

// p(d | n) of the given family. Throws ValidationError for an empirical
// family lacking n or carrying a pmf of the wrong support.
LengthPmf conditional(const MixtureSpec& spec, int n);

enum class Weighting { sentence, dependency };

std::string to_string(Weighting weighting);

// sum_n p(d | n) w(n) over d = 1..n_max-1. Throws ValidationError when a
// conditional is not normalized (1e-9) or has the wrong support.
LengthPmf mix(const MixtureSpec& spec, Weighting weighting = Weighting::sentence);

// sum_n w(n) E[d | n] computed from the conditionals; equals mix(...).mean().
double mixture_mean(const MixtureSpec& spec, Weighting weighting = Weighting::sentence);

struct Fig2Row {
  int n_max = 0;
  double uniform = 0.0;
  double zeta = 0.0;
};

// E[n] of the uniform and the truncated zeta on 2..n_max for each n_max in
// [first, last]. Throws DomainError when first < 2 or last < first.
std::vector<Fig2Row> fig2_table(int first, int last);

// Dependency-length corpus drawn from a mixture. Sentence i draws its length
// and its n - 1 lengths from Rng::substream(seed, i); sentences are added
// until at least min_dependencies dependencies are counted.
stats::LengthConditionedTable simulate_table(const MixtureSpec& spec, std::int64_t min_dependencies,
                                             std::uint64_t seed, int table_n_min = 2);

struct NullMomentEstimate {
  std::int64_t sentences = 0;
  double mean_mean_length = 0.0;
  double se_mean_length = 0.0;
  double mean_total_length = 0.0;
  double se_total_length = 0.0;
};

// Monte Carlo over whole sentences: length from `lengths`, uniform random
// labeled tree, uniform random arrangement, one substream per sentence.
// Bit-identical for any n_workers.
NullMomentEstimate simulate_null_moments(const LengthDistribution& lengths, std::int64_t sentences,
                                         std::uint64_t seed, int n_workers = 1);

}  // namespace deplen::mixture
