#pragma once

// Baselines under random vertex placement: exact formulas, Monte Carlo over
// random arrangements, and exhaustive enumeration for small trees.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "deplen/random.hpp"
#include "deplen/rational.hpp"
#include "deplen/tree.hpp"

namespace deplen::nullmodel {

// Exact quantities for a sentence of n words when a dependency joins two
// uniformly random distinct positions.
struct NullSummary {
  int n = 0;
  std::vector<Rational> p_d;  // p_d[d - 1] = 2 (n - d) / (n (n - 1)), d = 1..n-1
  Rational expected_d;        // (n + 1) / 3
  Rational expected_D;        // (n - 1)(n + 1) / 3

  Rational at(int d) const {
    return d >= 1 && d < n ? p_d[static_cast<std::size_t>(d - 1)] : Rational(0);
  }
};

// Throws DomainError for n < 2.
NullSummary exact_null(int n);

// The tree with its vertices moved to a uniformly random permutation of the
// positions; topology is unchanged.
DepTree random_arrangement(const DepTree& tree, Rng& rng);

// Labeled tree decoded from a Pruefer code (n - 2 entries in 1..n).
DepTree tree_from_pruefer(int n, std::span<const int> code);

// Uniform over the n^(n-2) labeled trees on 1..n. Throws DomainError for n < 2.
DepTree random_tree(int n, Rng& rng);

// Every labeled tree on n vertices, in Pruefer-code lexicographic order.
// Throws SizeError for n > 8.
std::vector<DepTree> all_labeled_trees(int n);

// One labeled representative per unlabeled tree shape. Throws SizeError for n > 8.
std::vector<DepTree> all_tree_shapes(int n);

struct McConfig {
  std::uint64_t seed = 1;
  std::int64_t samples = 1000;  // arrangements drawn per tree
  int n_workers = 1;
};

struct NullCurvePoint {
  int n = 0;
  std::int64_t trees = 0;
  std::int64_t draws = 0;
  double mean_mean_length = 0.0;
  double standard_error = 0.0;
};

// For every tree, draws cfg.samples random arrangements (tree i uses
// Rng::substream(cfg.seed, i)) and aggregates <d> per sentence length.
// Bit-identical for any n_workers. Throws ValidationError when samples < 1.
std::map<int, NullCurvePoint> mc_null_curve(std::span<const DepTree> trees, const McConfig& cfg);

// Exact joint distribution of (D, crossings) over all n! arrangements.
struct ArrangementDistribution {
  int n = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> counts;  // (D, crossings) -> arrangements

  std::int64_t arrangements() const;
  Rational mean_mean_length() const;
  Rational min_mean_length() const;
  Rational max_mean_length() const;
  // Empty if every arrangement has a crossing.
  std::optional<Rational> max_mean_length_noncrossing() const;
};

// Mirror images share D and crossings, so only one arrangement of each
// mirror pair is evaluated. Throws SizeError for n > 8.
ArrangementDistribution enumerate_arrangements(const DepTree& tree);

}  // namespace deplen::nullmodel
