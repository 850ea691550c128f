#include "deplen/tree.hpp"

#include <algorithm>
#include <numeric>

#include "deplen/error.hpp"

namespace deplen {

namespace {

std::vector<std::vector<int>> adjacency(const DepTree& tree) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(tree.size()));
  for (const Edge& e : tree.edges()) {
    adj[static_cast<std::size_t>(e.u - 1)].push_back(e.v - 1);
    adj[static_cast<std::size_t>(e.v - 1)].push_back(e.u - 1);
  }
  return adj;
}

std::string encode_rooted(const std::vector<std::vector<int>>& adj, int root, int parent) {
  std::vector<std::string> children;
  for (int c : adj[static_cast<std::size_t>(root)]) {
    if (c != parent) children.push_back(encode_rooted(adj, c, root));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ")";
  return out;
}

}  // namespace

DepTree DepTree::from_edges(int n, std::vector<Edge> edges) {
  if (n < 2) throw StructuralError("a dependency tree needs at least 2 words, got " + std::to_string(n));
  if (edges.size() != static_cast<std::size_t>(n - 1)) {
    throw StructuralError("a tree on " + std::to_string(n) + " words has " + std::to_string(n - 1) +
                          " edges, got " + std::to_string(edges.size()));
  }
  // Union-find: n-1 edges without a cycle span all n vertices.
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > n) {
      throw StructuralError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") outside positions 1.." + std::to_string(n));
    }
    if (e.u == e.v) throw StructuralError("self-loop at position " + std::to_string(e.u));
    const int ru = find(e.u);
    const int rv = find(e.v);
    if (ru == rv) throw StructuralError("edges contain a cycle");
    parent[static_cast<std::size_t>(ru)] = rv;
  }
  std::sort(edges.begin(), edges.end());
  return DepTree(n, std::move(edges));
}

std::vector<int> DepTree::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const Edge& e : edges_) {
    ++deg[static_cast<std::size_t>(e.u - 1)];
    ++deg[static_cast<std::size_t>(e.v - 1)];
  }
  return deg;
}

DepTree DepTree::relabeled(std::span<const int> new_position) const {
  if (new_position.size() != static_cast<std::size_t>(n_)) {
    throw StructuralError("relabeling must cover all " + std::to_string(n_) + " positions");
  }
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) {
    int a = new_position[static_cast<std::size_t>(e.u - 1)];
    int b = new_position[static_cast<std::size_t>(e.v - 1)];
    if (a > b) std::swap(a, b);
    out.push_back({a, b});
  }
  std::sort(out.begin(), out.end());
  return DepTree(n_, std::move(out));
}

std::int64_t total_length(const DepTree& tree) {
  std::int64_t sum = 0;
  for (const Edge& e : tree.edges()) sum += e.length();
  return sum;
}

std::int64_t count_crossings(std::span<const Edge> edges) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int a = std::min(edges[i].u, edges[i].v);
    const int b = std::max(edges[i].u, edges[i].v);
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const int c = std::min(edges[j].u, edges[j].v);
      const int d = std::max(edges[j].u, edges[j].v);
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) ++count;
    }
  }
  return count;
}

TreeMetrics metrics(const DepTree& tree) {
  TreeMetrics m;
  m.n = tree.size();
  m.dep_lengths.reserve(tree.edges().size());
  for (const Edge& e : tree.edges()) {
    m.dep_lengths.push_back(e.length());
    m.total_length += e.length();
  }
  m.mean_length = static_cast<double>(m.total_length) / (m.n - 1);
  for (int k : tree.degrees()) m.sum_squared_degrees += static_cast<std::int64_t>(k) * k;
  m.k2 = static_cast<double>(m.sum_squared_degrees) / m.n;
  m.crossings = count_crossings(tree.edges());
  return m;
}

std::pair<Rational, Rational> k2_bounds(int n) {
  if (n < 2) throw DomainError("k2_bounds: n must be at least 2, got " + std::to_string(n));
  return {Rational(4) - Rational(6, n), Rational(n - 1)};
}

Rational min_mean_d_bound(int n, const Rational& k2) {
  const auto [lo, hi] = k2_bounds(n);
  if (k2 < lo || k2 > hi) {
    throw DomainError("min_mean_d_bound: <k^2> = " + std::to_string(to_double(k2)) + " outside [" +
                      std::to_string(to_double(lo)) + ", " + std::to_string(to_double(hi)) +
                      "] for n = " + std::to_string(n));
  }
  return Rational(n) * k2 / Rational(8 * (n - 1)) + Rational(1, 2);
}

double min_mean_d_bound(int n, double k2) {
  const auto [lo, hi] = k2_bounds(n);
  constexpr double tol = 1e-12;
  if (k2 < to_double(lo) - tol || k2 > to_double(hi) + tol) {
    throw DomainError("min_mean_d_bound: <k^2> = " + std::to_string(k2) + " outside [" +
                      std::to_string(to_double(lo)) + ", " + std::to_string(to_double(hi)) +
                      "] for n = " + std::to_string(n));
  }
  return n * k2 / (8.0 * (n - 1)) + 0.5;
}

Rational max_mean_d_noncrossing(int n) {
  if (n < 2) throw DomainError("max_mean_d_noncrossing: n must be at least 2, got " + std::to_string(n));
  return Rational(n, 2);
}

std::string canonical_shape(const DepTree& tree) {
  const auto adj = adjacency(tree);
  const int n = tree.size();

  // Peel leaves until one or two centers remain.
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    if (degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int leaf : layer) {
      for (int w : adj[static_cast<std::size_t>(leaf)]) {
        if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }

  std::string best;
  for (int center : layer) {
    std::string code = encode_rooted(adj, center, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace deplen
