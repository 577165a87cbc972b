#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace graphdelta {

/// Zero-based vertex index. Valid for a graph `g` iff `0 <= v < g.order()`.
using VertexId = int;

/// A set of vertices of one graph, bit `v` set iff `v` is a member.
using VertexSet = std::uint64_t;

inline constexpr int kMaxOrder = 64;

constexpr VertexSet singleton(VertexId v) noexcept { return VertexSet{1} << v; }

/// All of {0, .., n-1}.
constexpr VertexSet full_set(int n) noexcept {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int set_size(VertexSet s) noexcept { return std::popcount(s); }

/// Immutable simple undirected graph on {0, .., n-1}, 1 <= n <= 64.
///
/// Each adjacency row is one machine word, so neighbourhood subset tests
/// are single AND/compare operations. Every mutating operation returns a
/// new value; the adjacency relation is symmetric and irreflexive for every
/// value that can be observed.
class Graph {
 public:
  using Row = std::uint64_t;

  /// Edgeless graph on `n` vertices. Throws InvalidOrder outside [1, 64].
  static Graph empty(int n);

  /// Throws SelfLoop / BadVertex for malformed pairs. Duplicate pairs are fine.
  static Graph from_edges(int n, std::span<const std::pair<VertexId, VertexId>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
    return from_edges(n, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size()));
  }

  /// Adopts raw adjacency rows; rejects asymmetric or reflexive input.
  static Graph from_rows(std::span<const Row> rows);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept;

  bool valid_vertex(VertexId v) const noexcept { return v >= 0 && v < n_; }
  bool has_edge(VertexId u, VertexId v) const;
  VertexSet neighbors(VertexId v) const;
  int degree(VertexId v) const { return set_size(neighbors(v)); }
  int min_degree() const noexcept;
  VertexSet vertices() const noexcept { return full_set(n_); }

  /// True iff every pair of distinct vertices is adjacent.
  bool is_complete() const noexcept;

  Graph with_edge(VertexId u, VertexId v) const;
  Graph without_edge(VertexId u, VertexId v) const;

  /// Subgraph induced on `keep`; kept vertices are relabelled 0.. in
  /// ascending order of their old ids. Throws EmptySelection / BadVertex.
  Graph induced_subgraph(VertexSet keep) const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  std::span<const Row> rows() const noexcept { return {rows_.data(), static_cast<std::size_t>(n_)}; }

  friend bool operator==(const Graph& a, const Graph& b) noexcept;

 private:
  Graph() = default;
  void check_vertex(VertexId v) const;
  void check_pair(VertexId u, VertexId v) const;

  int n_ = 0;
  std::array<Row, kMaxOrder> rows_{};
};

}  // namespace graphdelta
