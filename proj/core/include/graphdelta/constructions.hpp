#pragma once

#include "graphdelta/graph.hpp"

namespace graphdelta {

// Named families. Vertex placement is part of the contract:
//   path(m):     0 - 1 - ... - (m-1)
//   cycle(m):    path(m) plus {m-1, 0}
//   complete_bipartite(a, b): parts {0..a-1} and {a..a+b-1}
Graph path(int m);
Graph cycle(int m);
Graph complete(int m);
Graph complete_bipartite(int a, int b);

/// g2's vertices are shifted by g1.order(); no cross edges.
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// disjoint_union plus every edge between the two vertex sets.
Graph join(const Graph& g1, const Graph& g2);

/// Appends `times` new vertices, each adjacent to exactly the original N(v).
/// Duplicates are adjacent neither to v nor to each other.
Graph duplicate_vertex(const Graph& g, VertexId v, int times = 1);

}  // namespace graphdelta
