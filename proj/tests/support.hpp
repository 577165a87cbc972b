#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "graphdelta/graph.hpp"

namespace graphdelta::testing {

inline Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

// Adjacency matrix built from the edge list only.
inline std::vector<std::vector<int>> matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

// Floyd-Warshall; -1 when disconnected.
inline int floyd_diameter(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  auto a = matrix(g);
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) d[i][j] = 0;
      else if (a[i][j]) d[i][j] = 1;
    }
  }
  for (int m = 0; m < n; ++m) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
    }
  }
  int best = 0;
  for (auto& row : d) best = std::max(best, *std::max_element(row.begin(), row.end()));
  return best >= inf ? -1 : best;
}

inline int naive_free_count(const Graph& g) {
  auto a = matrix(g);
  const int n = g.order();
  int count = 0;
  for (int v = 0; v < n; ++v) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = x + 1; y < n && ok; ++y) {
        if (a[v][x] && a[v][y] && !a[x][y]) ok = false;
      }
    }
    count += ok ? 1 : 0;
  }
  return count;
}

// graph6 written out bit by bit: N(n) ("~" and 18 bits above 62) then the upper triangle in the order
// (0,1),(0,2),(1,2),(0,3),... padded with zeros to a multiple of six.
inline std::string hand_packed_graph6(int n, const std::vector<std::pair<int, int>>& edges) {
  auto a = std::vector<std::vector<int>>(n, std::vector<int>(n, 0));
  for (auto [u, v] : edges) a[u][v] = a[v][u] = 1;
  std::string bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(a[i][j] ? '1' : '0');
  }
  while (bits.size() % 6 != 0) bits.push_back('0');
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out = "~";
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (std::size_t b = 0; b < 6; ++b) value = value * 2 + (bits[i + b] - '0');
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

// Every simple u-v path, as its internal vertex set.
inline void collect_paths(const std::vector<std::vector<int>>& a, int at, int target, std::uint64_t visited,
                          std::uint64_t internal, std::vector<std::uint64_t>& out) {
  for (int next = 0; next < static_cast<int>(a.size()); ++next) {
    if (!a[at][next] || (visited >> next & 1U)) continue;
    if (next == target) {
      out.push_back(internal);
      continue;
    }
    collect_paths(a, next, target, visited | (std::uint64_t{1} << next), internal | (std::uint64_t{1} << next), out);
  }
}

inline int best_disjoint(const std::vector<std::uint64_t>& paths, std::size_t from, std::uint64_t used) {
  int best = 0;
  for (std::size_t i = from; i < paths.size(); ++i) {
    if ((paths[i] & used) != 0) continue;
    best = std::max(best, 1 + best_disjoint(paths, i + 1, used | paths[i]));
  }
  return best;
}

// Largest family of internally disjoint u-v paths, by exhaustive search.
inline int disjoint_paths_exhaustive(const Graph& g, int u, int v) {
  std::vector<std::uint64_t> paths;
  collect_paths(matrix(g), u, v, std::uint64_t{1} << u, 0, paths);
  return best_disjoint(paths, 0, 0);
}

}  // namespace graphdelta::testing
