#include "deplen/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "deplen/error.hpp"
#include "deplen/null_models.hpp"
#include "deplen/random.hpp"

namespace deplen::mixture {

namespace {

constexpr double kNormTolerance = 1e-9;

void check_range(int n_min, int n_max) {
  if (n_min < 2) throw ValidationError("n_min must be at least 2, got " + std::to_string(n_min));
  if (n_max < n_min) {
    throw ValidationError("n_max (" + std::to_string(n_max) + ") below n_min (" + std::to_string(n_min) + ")");
  }
}

double harmonic_tail(int from, int to) {
  double h = 0.0;
  for (int n = to; n >= from; --n) h += 1.0 / n;
  return h;
}

double truncated_geometric_mean(double q, int n) {
  double z = 0.0;
  double m = 0.0;
  double w = 1.0;
  for (int d = 1; d < n; ++d) {
    z += w;
    m += d * w;
    w *= q;
  }
  return m / z;
}

// Mean of the geometric conditional is increasing in q, from 1 (q -> 0) to
// n/2 (q -> 1); the target (n + 1)/3 lies strictly between for n >= 3.
double null_mean_decay(int n) {
  if (n <= 2) return 0.5;  // single support point, any q
  const double target = (n + 1) / 3.0;
  double lo = 0.0;
  double hi = 1.0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-16; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (truncated_geometric_mean(mid, n) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double weight(const LengthDistribution& lengths, int n, Weighting weighting) {
  const double p = lengths.p(n);
  return weighting == Weighting::sentence ? p : (n - 1) * p;
}

double weight_total(const LengthDistribution& lengths, Weighting weighting) {
  double total = 0.0;
  for (int n = lengths.n_min(); n <= lengths.n_max(); ++n) total += weight(lengths, n, weighting);
  return total;
}

DiscreteSampler length_sampler(const LengthDistribution& lengths) {
  std::vector<double> probs;
  for (int n = lengths.n_min(); n <= lengths.n_max(); ++n) probs.push_back(lengths.p(n));
  return DiscreteSampler(lengths.n_min(), probs);
}

}  // namespace

std::string to_string(LengthKind kind) {
  switch (kind) {
    case LengthKind::uniform: return "uniform";
    case LengthKind::truncated_zeta: return "truncated_zeta";
    case LengthKind::empirical: return "empirical";
  }
  return "unknown";
}

std::string to_string(GeometricLinkage linkage) {
  switch (linkage) {
    case GeometricLinkage::null_mean: return "null_mean";
    case GeometricLinkage::fixed: return "fixed";
    case GeometricLinkage::log_rate: return "log_rate";
  }
  return "unknown";
}

std::string to_string(Weighting weighting) {
  return weighting == Weighting::sentence ? "sentence" : "dependency";
}

std::string family_name(const ConditionalFamily& family) {
  if (std::holds_alternative<NullConditional>(family)) return "null";
  if (std::holds_alternative<GeometricConditional>(family)) return "geometric";
  return "empirical";
}

LengthDistribution::LengthDistribution(LengthKind kind, int n_min, int n_max, std::vector<double> probs)
    : kind_(kind), n_min_(n_min), n_max_(n_max), probs_(std::move(probs)) {}

LengthDistribution LengthDistribution::uniform(int n_min, int n_max) {
  check_range(n_min, n_max);
  const auto count = static_cast<std::size_t>(n_max - n_min + 1);
  return LengthDistribution(LengthKind::uniform, n_min, n_max,
                            std::vector<double>(count, 1.0 / static_cast<double>(count)));
}

LengthDistribution LengthDistribution::truncated_zeta(int n_min, int n_max) {
  check_range(n_min, n_max);
  const double norm = harmonic_tail(n_min, n_max);
  std::vector<double> probs;
  for (int n = n_min; n <= n_max; ++n) probs.push_back((1.0 / n) / norm);
  return LengthDistribution(LengthKind::truncated_zeta, n_min, n_max, std::move(probs));
}

LengthDistribution LengthDistribution::empirical(const std::map<int, double>& weights, int n_min) {
  if (weights.empty()) throw ValidationError("empirical length distribution needs at least one length");
  const int n_max = weights.rbegin()->first;
  check_range(n_min, n_max);
  double total = 0.0;
  for (const auto& [n, w] : weights) {
    if (n < n_min) {
      throw ValidationError("length " + std::to_string(n) + " below n_min " + std::to_string(n_min));
    }
    if (!(w >= 0.0) || !std::isfinite(w)) throw ValidationError("weight of length " + std::to_string(n) + " is invalid");
    total += w;
  }
  if (!(total > 0.0)) throw ValidationError("empirical length weights sum to zero");
  std::vector<double> probs(static_cast<std::size_t>(n_max - n_min + 1), 0.0);
  for (const auto& [n, w] : weights) probs[static_cast<std::size_t>(n - n_min)] = w / total;
  return LengthDistribution(LengthKind::empirical, n_min, n_max, std::move(probs));
}

LengthDistribution LengthDistribution::point_mass(int n, int n_min) { return empirical({{n, 1.0}}, n_min); }

double LengthDistribution::p(int n) const {
  if (n < n_min_ || n > n_max_) return 0.0;
  return probs_[static_cast<std::size_t>(n - n_min_)];
}

double uniform_expectation_closed_form(int n_max) {
  if (n_max < 2) throw DomainError("n_max must be at least 2");
  if (n_max == 2) return 2.0;
  const double m = n_max;
  return (m * (m + 1.0) / 2.0 - 1.0) / (m - 1.0);
}

double zeta_expectation_closed_form(int n_max) {
  if (n_max < 2) throw DomainError("n_max must be at least 2");
  return (n_max - 1) / harmonic_tail(2, n_max);
}

double expectation_n(const LengthDistribution& lengths) {
  if (lengths.n_min() == 2 && lengths.kind() == LengthKind::uniform) {
    return uniform_expectation_closed_form(lengths.n_max());
  }
  if (lengths.n_min() == 2 && lengths.kind() == LengthKind::truncated_zeta) {
    return zeta_expectation_closed_form(lengths.n_max());
  }
  double e = 0.0;
  for (int n = lengths.n_min(); n <= lengths.n_max(); ++n) e += lengths.p(n) * n;
  return e;
}

double expectation_n2(const LengthDistribution& lengths) {
  if (lengths.kind() == LengthKind::uniform) {
    auto squares = [](double m) { return m * (m + 1.0) * (2.0 * m + 1.0) / 6.0; };
    const int a = lengths.n_min();
    const int b = lengths.n_max();
    return (squares(b) - squares(a - 1)) / (b - a + 1);
  }
  double e = 0.0;
  for (int n = lengths.n_min(); n <= lengths.n_max(); ++n) e += lengths.p(n) * n * n;
  return e;
}

double null_expected_d(const LengthDistribution& lengths) {
  if (lengths.n_min() != 2) {
    throw AssumptionError("E[d] = (E[n] + 1)/3 is derived for n_min = 2, got n_min = " +
                          std::to_string(lengths.n_min()));
  }
  return (expectation_n(lengths) + 1.0) / 3.0;
}

double null_expected_D(const LengthDistribution& lengths) {
  if (lengths.n_min() != 2) {
    throw AssumptionError("E[D] = (E[n^2] - 1)/3 is derived for n_min = 2, got n_min = " +
                          std::to_string(lengths.n_min()));
  }
  return (expectation_n2(lengths) - 1.0) / 3.0;
}

double null_expected_d_sentence_weighted(const LengthDistribution& lengths) {
  double e = 0.0;
  for (int n = lengths.n_min(); n <= lengths.n_max(); ++n) e += lengths.p(n) * (n + 1) / 3.0;
  return e;
}

double null_expected_d_dependency_weighted(const LengthDistribution& lengths) {
  double e = 0.0;
  for (int n = lengths.n_min(); n <= lengths.n_max(); ++n) {
    e += weight(lengths, n, Weighting::dependency) * (n + 1) / 3.0;
  }
  return e / weight_total(lengths, Weighting::dependency);
}

double geometric_decay(const GeometricConditional& family, int n, const LengthDistribution& lengths) {
  switch (family.linkage) {
    case GeometricLinkage::fixed:
      return family.q;
    case GeometricLinkage::null_mean:
      return null_mean_decay(n);
    case GeometricLinkage::log_rate: {
      const int span = lengths.n_max() - lengths.n_min();
      const double t = span == 0 ? 0.0 : static_cast<double>(n - lengths.n_min()) / span;
      const double rate = family.rate_first * std::pow(family.rate_last / family.rate_first, t);
      return std::exp(-rate);
    }
  }
  return family.q;
}

LengthPmf truncated_geometric_conditional(double q, int n) {
  if (n < 2) throw DomainError("a conditional needs n >= 2, got " + std::to_string(n));
  if (!(q > 0.0 && q < 1.0)) throw ValidationError("geometric decay must lie in (0, 1), got " + std::to_string(q));
  LengthPmf pmf;
  pmf.mass.resize(static_cast<std::size_t>(n - 1));
  double w = 1.0;
  double z = 0.0;
  for (auto& m : pmf.mass) {
    m = w;
    z += w;
    w *= q;
  }
  for (auto& m : pmf.mass) m /= z;
  return pmf;
}

LengthPmf conditional(const MixtureSpec& spec, int n) {
  if (std::holds_alternative<NullConditional>(spec.conditional)) {
    const auto exact = nullmodel::exact_null(n);
    LengthPmf pmf;
    for (const auto& p : exact.p_d) pmf.mass.push_back(to_double(p));
    return pmf;
  }
  if (const auto* geo = std::get_if<GeometricConditional>(&spec.conditional)) {
    return truncated_geometric_conditional(geometric_decay(*geo, n, spec.lengths), n);
  }
  const auto& table = std::get<EmpiricalConditional>(spec.conditional).by_n;
  const auto it = table.find(n);
  if (it == table.end()) throw ValidationError("empirical conditional has no distribution for n = " + std::to_string(n));
  if (it->second.d_max() != n - 1) {
    throw ValidationError("empirical conditional for n = " + std::to_string(n) + " must cover d = 1.." +
                          std::to_string(n - 1));
  }
  return it->second;
}

LengthPmf mix(const MixtureSpec& spec, Weighting weighting) {
  const auto& lengths = spec.lengths;
  const double total = weight_total(lengths, weighting);
  LengthPmf out;
  out.mass.assign(static_cast<std::size_t>(lengths.n_max() - 1), 0.0);
  for (int n = lengths.n_min(); n <= lengths.n_max(); ++n) {
    const double w = weight(lengths, n, weighting) / total;
    if (w == 0.0) continue;
    const LengthPmf c = conditional(spec, n);
    if (std::abs(c.total() - 1.0) > kNormTolerance) {
      throw ValidationError("conditional p(d | n = " + std::to_string(n) + ") sums to " + std::to_string(c.total()));
    }
    for (int d = 1; d < n; ++d) out.mass[static_cast<std::size_t>(d - 1)] += w * c.at(d);
  }
  return out;
}

double mixture_mean(const MixtureSpec& spec, Weighting weighting) {
  const double total = weight_total(spec.lengths, weighting);
  double e = 0.0;
  for (int n = spec.lengths.n_min(); n <= spec.lengths.n_max(); ++n) {
    const double w = weight(spec.lengths, n, weighting) / total;
    if (w != 0.0) e += w * conditional(spec, n).mean();
  }
  return e;
}

std::vector<Fig2Row> fig2_table(int first, int last) {
  if (first < 2 || last < first) {
    throw DomainError("n_max range must satisfy 2 <= first <= last, got [" + std::to_string(first) + ", " +
                      std::to_string(last) + "]");
  }
  std::vector<Fig2Row> rows;
  for (int n_max = first; n_max <= last; ++n_max) {
    rows.push_back({n_max, expectation_n(LengthDistribution::uniform(2, n_max)),
                    expectation_n(LengthDistribution::truncated_zeta(2, n_max))});
  }
  return rows;
}

stats::LengthConditionedTable simulate_table(const MixtureSpec& spec, std::int64_t min_dependencies,
                                             std::uint64_t seed, int table_n_min) {
  stats::LengthConditionedTable table(table_n_min);
  const DiscreteSampler pick_length = length_sampler(spec.lengths);
  std::map<int, DiscreteSampler> pick_distance;
  std::vector<int> lengths;
  std::int64_t produced = 0;
  for (std::uint64_t i = 0; produced < min_dependencies; ++i) {
    Rng rng = Rng::substream(seed, i);
    const int n = pick_length(rng);
    auto it = pick_distance.find(n);
    if (it == pick_distance.end()) {
      const LengthPmf c = conditional(spec, n);
      it = pick_distance.emplace(n, DiscreteSampler(1, c.mass)).first;
    }
    lengths.resize(static_cast<std::size_t>(n - 1));
    for (int& d : lengths) d = it->second(rng);
    table.add_sentence(n, lengths);
    produced += n - 1;
  }
  return table;
}

NullMomentEstimate simulate_null_moments(const LengthDistribution& lengths, std::int64_t sentences,
                                         std::uint64_t seed, int n_workers) {
  if (sentences < 2) throw ValidationError("need at least 2 sentences for a standard error");
  const DiscreteSampler pick_length = length_sampler(lengths);
  const auto count = static_cast<std::size_t>(sentences);
  std::vector<double> mean_length(count);
  std::vector<double> total(count);

  const auto workers = static_cast<std::size_t>(std::max(1, n_workers));
  auto run = [&](std::size_t worker) {
    for (std::size_t i = worker; i < count; i += workers) {
      Rng rng = Rng::substream(seed, i);
      const int n = pick_length(rng);
      const DepTree tree = nullmodel::random_arrangement(nullmodel::random_tree(n, rng), rng);
      const auto D = total_length(tree);
      total[i] = static_cast<double>(D);
      mean_length[i] = static_cast<double>(D) / (n - 1);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  auto mean_se = [&](const std::vector<double>& xs, double& mean, double& se) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    mean = sum / static_cast<double>(count);
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    se = std::sqrt(ss / static_cast<double>(count - 1) / static_cast<double>(count));
  };
  NullMomentEstimate est;
  est.sentences = sentences;
  mean_se(mean_length, est.mean_mean_length, est.se_mean_length);
  mean_se(total, est.mean_total_length, est.se_total_length);
  return est;
}

}  // namespace deplen::mixture
