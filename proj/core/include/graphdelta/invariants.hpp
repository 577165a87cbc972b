#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "graphdelta/graph.hpp"

namespace graphdelta {

/// (free vertices, diameter, vertex connectivity) of a connected graph.
struct DeltaTriple {
  int f = 0;
  int d = 1;
  int k = 1;

  int phi() const noexcept { return f + d + k; }

  friend auto operator<=>(const DeltaTriple&, const DeltaTriple&) = default;
};

std::string to_string(const DeltaTriple& t);

struct AnalysisReport {
  DeltaTriple delta;
  int phi = 0;
  std::vector<VertexId> free_set;
  bool connected = false;
  bool complete = false;
};

bool is_connected(const Graph& g);

/// Vertices reachable from `source` (including itself).
VertexSet reachable_from(const Graph& g, VertexId source);

/// Hop count, or nullopt when `v` is unreachable from `u`.
std::optional<int> distance(const Graph& g, VertexId u, VertexId v);

/// Largest distance from `v`. Throws NotConnected.
int eccentricity(const Graph& g, VertexId v);

/// Throws NotConnected for disconnected input and Degenerate for n = 1.
int diameter(const Graph& g);

/// N(v) induces a clique. Uses one subset test per neighbour.
bool is_free_vertex(const Graph& g, VertexId v);

/// Same predicate as is_free_vertex, checked pair by pair. Kept as an
/// independent second implementation for cross-checking.
bool is_free_vertex_pairwise(const Graph& g, VertexId v);

VertexSet free_vertices(const Graph& g);
int free_count(const Graph& g);

/// Maximum number of internally vertex-disjoint u-v paths (Menger), via
/// unit-capacity max-flow on the vertex-split digraph. Requires u != v
/// (SamePair) and u, v non-adjacent (AdjacentPair).
int local_connectivity(const Graph& g, VertexId u, VertexId v);

/// kappa(g): n - 1 for complete graphs, otherwise the minimum local
/// connectivity over non-adjacent pairs. Throws NotConnected / Degenerate.
int vertex_connectivity(const Graph& g);

/// delta(g) and phi(g) together with the free vertex list.
/// Throws NotConnected for disconnected input and Degenerate for n = 1.
AnalysisReport analyze(const Graph& g);

/// Convenience: analyze(g).delta.
DeltaTriple delta(const Graph& g);

}  // namespace graphdelta
