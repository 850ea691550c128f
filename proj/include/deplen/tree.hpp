#pragma once

// A linearized dependency tree and its structural metrics.
//
// Vertices are word positions 1..n. Edges are undirected: head/dependent
// direction plays no role in lengths, degree moments or crossings.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deplen/rational.hpp"

namespace deplen {

struct Edge {
  int u = 0;  // u < v
  int v = 0;

  int length() const { return v - u; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class DepTree {
 public:
  // Throws StructuralError unless the edges form a spanning tree on 1..n
  // with n >= 2. Endpoint order within an edge does not matter.
  static DepTree from_edges(int n, std::vector<Edge> edges);

  int size() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }

  // degrees()[v - 1] is the degree of position v.
  std::vector<int> degrees() const;

  // Moves the vertex at position v to position new_position[v - 1].
  // new_position must be a permutation of 1..n.
  DepTree relabeled(std::span<const int> new_position) const;

  friend bool operator==(const DepTree&, const DepTree&) = default;

 private:
  DepTree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}

  int n_ = 0;
  std::vector<Edge> edges_;  // sorted
};

struct TreeMetrics {
  int n = 0;
  std::vector<int> dep_lengths;  // one per edge, in edge order
  std::int64_t total_length = 0;  // D
  double mean_length = 0.0;       // <d> = D / (n - 1)
  std::int64_t sum_squared_degrees = 0;
  double k2 = 0.0;  // <k^2> = sum_squared_degrees / n
  std::int64_t crossings = 0;

  Rational exact_mean_length() const { return Rational(total_length, n - 1); }
  Rational exact_k2() const { return Rational(sum_squared_degrees, n); }
};

TreeMetrics metrics(const DepTree& tree);

// D alone; the hot path of arrangement sampling.
std::int64_t total_length(const DepTree& tree);

// Unordered pairs of edges {(a,b),(c,d)} with a < c < b < d.
std::int64_t count_crossings(std::span<const Edge> edges);

// Lower bound on the mean dependency length reachable by any arrangement
// of a tree with n vertices and degree second moment k2:
//   n k2 / (8 (n - 1)) + 1/2.
// Throws DomainError when k2 lies outside k2_bounds(n).
Rational min_mean_d_bound(int n, const Rational& k2);
double min_mean_d_bound(int n, double k2);

// (4 - 6/n, n - 1): <k^2> of the path and of the star. Throws DomainError for n < 2.
std::pair<Rational, Rational> k2_bounds(int n);

// n / 2, the largest <d> of a non-crossing arrangement.
Rational max_mean_d_noncrossing(int n);

// Isomorphism-invariant encoding of the unlabeled tree shape.
std::string canonical_shape(const DepTree& tree);

}  // namespace deplen
