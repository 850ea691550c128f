#include "deplen/null_models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>

#include "deplen/error.hpp"

namespace deplen::nullmodel {

namespace {

constexpr int kMaxEnumeration = 8;

struct TreeDraws {
  double sum = 0.0;
  double sum_sq = 0.0;
};

TreeDraws sample_tree(const DepTree& tree, std::int64_t samples, Rng rng) {
  const int n = tree.size();
  std::vector<int> position(static_cast<std::size_t>(n));
  std::iota(position.begin(), position.end(), 1);
  TreeDraws out;
  for (std::int64_t s = 0; s < samples; ++s) {
    rng.shuffle(std::span<int>(position));
    std::int64_t D = 0;
    for (const Edge& e : tree.edges()) {
      D += std::abs(position[static_cast<std::size_t>(e.u - 1)] - position[static_cast<std::size_t>(e.v - 1)]);
    }
    const double mean = static_cast<double>(D) / (n - 1);
    out.sum += mean;
    out.sum_sq += mean * mean;
  }
  return out;
}

}  // namespace

NullSummary exact_null(int n) {
  if (n < 2) throw DomainError("exact_null: n must be at least 2, got " + std::to_string(n));
  NullSummary s;
  s.n = n;
  s.p_d.reserve(static_cast<std::size_t>(n - 1));
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1);
  for (int d = 1; d < n; ++d) s.p_d.emplace_back(2 * static_cast<std::int64_t>(n - d), pairs);
  s.expected_d = Rational(n + 1, 3);
  s.expected_D = Rational(static_cast<std::int64_t>(n - 1) * (n + 1), 3);
  return s;
}

DepTree random_arrangement(const DepTree& tree, Rng& rng) {
  std::vector<int> position(static_cast<std::size_t>(tree.size()));
  std::iota(position.begin(), position.end(), 1);
  rng.shuffle(std::span<int>(position));
  return tree.relabeled(position);
}

DepTree tree_from_pruefer(int n, std::span<const int> code) {
  if (n < 2) throw DomainError("a tree needs at least 2 vertices, got " + std::to_string(n));
  if (code.size() != static_cast<std::size_t>(n - 2)) {
    throw DomainError("Pruefer code for n = " + std::to_string(n) + " has " + std::to_string(n - 2) + " entries");
  }
  std::vector<int> degree(static_cast<std::size_t>(n + 1), 1);
  for (int x : code) {
    if (x < 1 || x > n) throw DomainError("Pruefer entry " + std::to_string(x) + " outside 1.." + std::to_string(n));
    ++degree[static_cast<std::size_t>(x)];
  }
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (int x : code) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, x});
    if (--degree[static_cast<std::size_t>(x)] == 1) leaves.insert(x);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  edges.push_back({a, b});
  return DepTree::from_edges(n, std::move(edges));
}

DepTree random_tree(int n, Rng& rng) {
  if (n < 2) throw DomainError("random_tree: n must be at least 2, got " + std::to_string(n));
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& x : code) x = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n))) + 1;
  return tree_from_pruefer(n, code);
}

std::vector<DepTree> all_labeled_trees(int n) {
  if (n < 2) throw DomainError("all_labeled_trees: n must be at least 2, got " + std::to_string(n));
  if (n > kMaxEnumeration) {
    throw SizeError("all_labeled_trees: n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxEnumeration));
  }
  std::vector<DepTree> out;
  std::vector<int> code(static_cast<std::size_t>(n - 2), 1);
  for (;;) {
    out.push_back(tree_from_pruefer(n, code));
    // Odometer increment, last entry fastest.
    std::size_t i = code.size();
    while (i > 0 && code[i - 1] == n) code[--i] = 1;
    if (i == 0) break;
    ++code[i - 1];
  }
  return out;
}

std::vector<DepTree> all_tree_shapes(int n) {
  std::vector<DepTree> shapes;
  std::unordered_set<std::string> seen;
  for (DepTree& t : all_labeled_trees(n)) {
    if (seen.insert(canonical_shape(t)).second) shapes.push_back(std::move(t));
  }
  return shapes;
}

std::map<int, NullCurvePoint> mc_null_curve(std::span<const DepTree> trees, const McConfig& cfg) {
  if (cfg.samples < 1) throw ValidationError("samples must be at least 1, got " + std::to_string(cfg.samples));
  std::vector<TreeDraws> draws(trees.size());

  const auto workers = static_cast<std::size_t>(std::max(1, cfg.n_workers));
  auto run = [&](std::size_t worker) {
    for (std::size_t i = worker; i < trees.size(); i += workers) {
      draws[i] = sample_tree(trees[i], cfg.samples, Rng::substream(cfg.seed, i));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  // Reduction in input order keeps the result independent of scheduling.
  std::map<int, NullCurvePoint> curve;
  std::map<int, TreeDraws> totals;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const int n = trees[i].size();
    auto& point = curve[n];
    point.n = n;
    ++point.trees;
    point.draws += cfg.samples;
    totals[n].sum += draws[i].sum;
    totals[n].sum_sq += draws[i].sum_sq;
  }
  for (auto& [n, point] : curve) {
    const auto count = static_cast<double>(point.draws);
    const TreeDraws& t = totals[n];
    point.mean_mean_length = t.sum / count;
    if (point.draws > 1) {
      const double variance = std::max(0.0, (t.sum_sq - t.sum * t.sum / count) / (count - 1.0));
      point.standard_error = std::sqrt(variance / count);
    }
  }
  return curve;
}

std::int64_t ArrangementDistribution::arrangements() const {
  std::int64_t total = 0;
  for (const auto& [key, c] : counts) total += c;
  return total;
}

Rational ArrangementDistribution::mean_mean_length() const {
  std::int64_t weighted = 0;
  for (const auto& [key, c] : counts) weighted += key.first * c;
  return Rational(weighted, arrangements() * (n - 1));
}

Rational ArrangementDistribution::min_mean_length() const {
  return Rational(std::min_element(counts.begin(), counts.end())->first.first, n - 1);
}

Rational ArrangementDistribution::max_mean_length() const {
  std::int64_t best = 0;
  for (const auto& [key, c] : counts) best = std::max(best, key.first);
  return Rational(best, n - 1);
}

std::optional<Rational> ArrangementDistribution::max_mean_length_noncrossing() const {
  std::optional<std::int64_t> best;
  for (const auto& [key, c] : counts) {
    if (key.second == 0) best = std::max(best.value_or(0), key.first);
  }
  if (!best) return std::nullopt;
  return Rational(*best, n - 1);
}

ArrangementDistribution enumerate_arrangements(const DepTree& tree) {
  const int n = tree.size();
  if (n > kMaxEnumeration) {
    throw SizeError("enumerate_arrangements: n = " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxEnumeration) + "; sample arrangements instead");
  }
  ArrangementDistribution dist;
  dist.n = n;
  std::vector<int> position(static_cast<std::size_t>(n));
  std::iota(position.begin(), position.end(), 1);
  std::vector<Edge> placed(tree.edges().size());

  // Mirroring maps position p to n + 1 - p. At most one vertex sits on the
  // fixed point, so the first of vertices 1 and 2 off the middle decides which
  // member of a mirror pair is evaluated.
  auto canonical = [&] {
    for (int v = 0; v < 2; ++v) {
      const int twice = 2 * position[static_cast<std::size_t>(v)];
      if (twice != n + 1) return twice < n + 1;
    }
    return true;
  };

  do {
    if (!canonical()) continue;
    std::int64_t D = 0;
    for (std::size_t i = 0; i < placed.size(); ++i) {
      const Edge& e = tree.edges()[i];
      const int a = position[static_cast<std::size_t>(e.u - 1)];
      const int b = position[static_cast<std::size_t>(e.v - 1)];
      placed[i] = {std::min(a, b), std::max(a, b)};
      D += std::abs(a - b);
    }
    dist.counts[{D, count_crossings(placed)}] += 2;
  } while (std::next_permutation(position.begin(), position.end()));
  return dist;
}

}  // namespace deplen::nullmodel
