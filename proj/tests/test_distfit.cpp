#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "deplen/distfit.hpp"
#include "deplen/error.hpp"
#include "deplen/mixture.hpp"
#include "deplen/random.hpp"

using namespace deplen;
using namespace deplen::fit;

namespace {

// Samplers written independently of the library's pmf helpers.
int draw_geometric(Rng& rng, double q, int d_max) {
  for (;;) {
    const double u = 1.0 - rng.uniform01();  // (0, 1]
    const int d = 1 + static_cast<int>(std::floor(std::log(u) / std::log(q)));
    if (d <= d_max) return d;
  }
}

std::vector<int> geometric_sample(double q, int d_max, int size, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> out;
  for (int i = 0; i < size; ++i) out.push_back(draw_geometric(rng, q, d_max));
  return out;
}

std::vector<int> zeta_sample(double gamma, int d_max, int size, std::uint64_t seed) {
  std::vector<double> cdf;
  double acc = 0;
  for (int d = 1; d <= d_max; ++d) cdf.push_back(acc += std::pow(d, -gamma));
  Rng rng(seed);
  std::vector<int> out;
  for (int i = 0; i < size; ++i) {
    const double u = rng.uniform01() * acc;
    out.push_back(1 + static_cast<int>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin()));
  }
  return out;
}

std::vector<int> two_regime_sample(int b, double q1, double q2, double w, int d_max, int size, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> out;
  for (int i = 0; i < size; ++i) {
    out.push_back(rng.uniform01() < w ? draw_geometric(rng, q1, b) : b + draw_geometric(rng, q2, d_max - b));
  }
  return out;
}

double direct_geometric_ll(std::span<const std::int64_t> counts, double q) {
  double z = 0, ll = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) z += std::pow(q, static_cast<double>(i + 1));
  for (std::size_t i = 0; i < counts.size(); ++i) ll += counts[i] * ((i + 1) * std::log(q) - std::log(z));
  return ll;
}

}  // namespace

TEST_CASE("histogram") {
  const std::vector<int> s{1, 3, 3, 2};
  CHECK(histogram(s, 4) == std::vector<std::int64_t>{1, 1, 2, 0});
  const std::vector<int> bad{0, 1};
  CHECK_THROWS_AS(histogram(bad, 4), DomainError);
  const std::vector<int> big{5};
  CHECK_THROWS_AS(histogram(big, 4), DomainError);
}

TEST_CASE("geometric fit") {
  const std::vector<int> ones{1, 1, 1, 1};
  const auto low = fit_geometric(ones, 4);
  CHECK(low.boundary == Boundary::lower);
  CHECK(low.param("q") < 1e-4);
  CHECK(!low.notes.empty());

  const auto r = fit_geometric(geometric_sample(0.5, 10, 100000, 1), 10);
  CHECK(std::abs(r.param("q") - 0.5) < 0.01);
  CHECK(r.boundary == Boundary::none);
  CHECK(r.free_parameters == 1);
  CHECK(r.aic == doctest::Approx(2 - 2 * r.log_likelihood));

  std::vector<int> uniform;
  for (int i = 0; i < 1000; ++i) uniform.push_back(1 + i % 8);
  CHECK(fit_geometric(uniform, 8).boundary == Boundary::upper);

  const std::vector<int> at_max{6, 6, 6};
  CHECK(fit_geometric(at_max, 6).boundary == Boundary::upper);
  CHECK_THROWS_AS(fit_geometric(std::vector<std::int64_t>{0, 0, 0}), NoDataError);
}

TEST_CASE("zeta fit") {
  const auto r = fit_zeta(zeta_sample(2.0, 50, 100000, 2), 50);
  CHECK(std::abs(r.param("gamma") - 2.0) < 0.05);
  CHECK(r.boundary == Boundary::none);
  const std::vector<int> ones{1, 1, 1};
  CHECK(fit_zeta(ones, 5).boundary == Boundary::upper);
  std::vector<int> uniform;
  for (int i = 0; i < 1000; ++i) uniform.push_back(1 + i % 8);
  const auto flat = fit_zeta(uniform, 8);
  CHECK(flat.boundary == Boundary::lower);
  CHECK(flat.param("gamma") < 1e-4);
}

TEST_CASE("two-regime fit") {
  const auto r = fit_two_regime(two_regime_sample(5, 0.4, 0.8, 0.7, 30, 200000, 3), 30, 2, 29);
  CHECK(r.param("b") == 5);
  CHECK(std::abs(r.param("q1") - 0.4) < 0.02);
  CHECK(std::abs(r.param("q2") - 0.8) < 0.02);
  CHECK(r.free_parameters == 3);
  CHECK(std::abs(r.aic - (6 - 2 * r.log_likelihood)) < 1e-9);

  const auto forced = fit_two_regime(geometric_sample(0.6, 12, 2000, 4), 12, 2, 2);
  CHECK(forced.param("b") == 2);

  const auto g = geometric_sample(0.7, 20, 100000, 5);
  const std::vector<FitResult> both{fit_geometric(g, 20), fit_two_regime(g, 20, 2, 19)};
  CHECK(compare(both).front().family == Family::geometric);

  // every breakpoint leaves the tail empty
  const std::vector<std::int64_t> head_only{5, 3, 0, 0};
  CHECK_THROWS_AS(fit_two_regime(head_only, 2, 3), NoDataError);
}

TEST_CASE("log-likelihood agrees with a direct sum") {
  const auto counts = histogram(geometric_sample(0.3, 15, 5000, 6), 15);
  for (double q : {0.1, 0.3, 0.77}) CHECK(geometric_log_likelihood(counts, q) == doctest::Approx(direct_geometric_ll(counts, q)));
}

TEST_CASE("fitted pmfs are normalized and optimal against random probes") {
  Rng rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const int d_max = 3 + static_cast<int>(rng.uniform_index(40));
    std::vector<std::int64_t> counts(static_cast<std::size_t>(d_max));
    for (auto& c : counts) c = static_cast<std::int64_t>(rng.uniform_index(200));
    counts[0] += 1;
    counts.back() += 1;
    const auto g = fit_geometric(counts);
    const auto z = fit_zeta(counts);
    const auto t = fit_two_regime(counts, 2, d_max - 1);
    for (const auto* r : {&g, &z, &t}) CHECK(std::abs(fitted_pmf(*r).total() - 1.0) < 1e-12);
    for (int probe = 0; probe < 64; ++probe) {
      const double q = kDecayLower + rng.uniform01() * (kDecayUpper - kDecayLower);
      const double gamma = kExponentLower + rng.uniform01() * (kExponentUpper - kExponentLower);
      CHECK(g.log_likelihood >= geometric_log_likelihood(counts, q) - 1e-9);
      CHECK(z.log_likelihood >= zeta_log_likelihood(counts, gamma) - 1e-9);
    }
    const auto again = fit_zeta(counts);
    CHECK(again.param("gamma") == z.param("gamma"));
    CHECK(again.log_likelihood == z.log_likelihood);
  }
}

TEST_CASE("compare") {
  FitResult g, z;
  g.family = Family::geometric;
  g.log_likelihood = -1000;
  g.aic = 2 - 2 * g.log_likelihood;
  g.sample_size = 10;
  g.d_max = 5;
  z = g;
  z.family = Family::zeta;
  z.log_likelihood = -990;
  z.aic = 2 - 2 * z.log_likelihood;
  const std::vector<FitResult> both{g, z};
  const auto ranked = compare(both);
  CHECK(ranked[0].family == Family::zeta);
  CHECK(ranked[1].delta_aic == doctest::Approx(20));

  auto other = z;
  other.sample_size = 11;
  CHECK_THROWS_AS(compare(std::vector<FitResult>{g, other}), ComparisonError);
  other = z;
  other.d_max = 6;
  CHECK_THROWS_AS(compare(std::vector<FitResult>{g, other}), ComparisonError);
  CHECK_THROWS_AS(compare(std::vector<FitResult>{g}), ComparisonError);
}

TEST_CASE("pooled null sample prefers zeta; a fixed-n null sample still gets a total order") {
  using namespace deplen::mixture;
  const MixtureSpec spec{LengthDistribution::truncated_zeta(2, 50), NullConditional{}};
  // i.i.d. draws from the sentence-weighted mixture sum_n p(n) p(d | n)
  const LengthPmf mixed = mix(spec, Weighting::sentence);
  const DiscreteSampler draw(1, mixed.mass);
  Rng rng(8);
  std::vector<int> sample;
  for (int i = 0; i < 200000; ++i) sample.push_back(draw(rng));
  const std::vector<FitResult> fits{fit_geometric(sample, 49), fit_zeta(sample, 49)};
  CHECK(compare(fits).front().family == Family::zeta);

  const auto fixed = simulate_table({LengthDistribution::point_mass(20), NullConditional{}}, 20000, 9).counts().at(20);
  const std::vector<FitResult> f2{fit_geometric(fixed), fit_zeta(fixed), fit_two_regime(fixed, 2, 18)};
  const auto order = compare(f2);
  CHECK(order.size() == 3);
  for (std::size_t i = 1; i < order.size(); ++i) CHECK(order[i - 1].aic <= order[i].aic);
}
