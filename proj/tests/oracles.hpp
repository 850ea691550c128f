#pragma once

// Brute-force references used by the tests. Nothing here calls into the
// library except for plain data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace oracle {

using Q = boost::rational<std::int64_t>;
using EdgeList = std::vector<std::pair<int, int>>;  // 1-based vertices

// Histogram of |i - j| over all unordered position pairs of 1..n, normalized.
inline std::map<int, Q> pair_distance_pmf(int n) {
  std::map<int, std::int64_t> count;
  std::int64_t pairs = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      ++count[j - i];
      ++pairs;
    }
  }
  std::map<int, Q> pmf;
  for (auto [d, c] : count) pmf[d] = Q(c, pairs);
  return pmf;
}

inline std::int64_t total_length(const EdgeList& edges, const std::vector<int>& pos) {
  std::int64_t s = 0;
  for (auto [a, b] : edges) s += std::abs(pos[a] - pos[b]);
  return s;
}

inline int crossings(const EdgeList& edges, const std::vector<int>& pos) {
  int c = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      int a = pos[edges[i].first], b = pos[edges[i].second];
      int x = pos[edges[j].first], y = pos[edges[j].second];
      if (a > b) std::swap(a, b);
      if (x > y) std::swap(x, y);
      if ((a < x && x < b && b < y) || (x < a && a < y && y < b)) ++c;
    }
  }
  return c;
}

struct Arrangement {
  std::int64_t total = 0;
  int crossings = 0;
};

// Every one of the n! placements, with no symmetry shortcut.
inline std::vector<Arrangement> all_arrangements(int n, const EdgeList& edges) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Arrangement> out;
  do {
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) pos[v] = perm[v - 1];
    out.push_back({total_length(edges, pos), crossings(edges, pos)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::vector<int> degrees(int n, const EdgeList& edges) {
  std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
  for (auto [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

// All labeled trees on n vertices by brute force over edge subsets (n <= 6).
inline std::vector<EdgeList> labeled_trees_by_subsets(int n) {
  std::vector<std::pair<int, int>> all;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) all.push_back({a, b});
  std::vector<EdgeList> out;
  const int m = static_cast<int>(all.size());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != n - 1) continue;
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool ok = true;
    EdgeList edges;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      const int ra = find(all[i].first), rb = find(all[i].second);
      if (ra == rb) ok = false;
      parent[ra] = rb;
      edges.push_back(all[i]);
    }
    if (ok) out.push_back(edges);
  }
  return out;
}

}  // namespace oracle
