#include "graphdelta/invariants.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "graphdelta/error.hpp"

namespace graphdelta {

namespace {

void require_vertex(const Graph& g, VertexId v) {
  if (!g.valid_vertex(v)) {
    throw Error(Errc::BadVertex, "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(g.order()));
  }
}

void require_connected_nontrivial(const Graph& g) {
  if (g.order() < 2) throw Error(Errc::Degenerate, "single-vertex graph");
  if (!is_connected(g)) throw Error(Errc::NotConnected, "graph is disconnected");
}

// Breadth-first layers over bit-set rows. Returns the eccentricity of
// `source` within its component and the set it reached.
std::pair<int, VertexSet> bfs_layers(const Graph& g, VertexId source) {
  const auto rows = g.rows();
  VertexSet seen = singleton(source);
  VertexSet frontier = seen;
  int depth = 0;
  while (true) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s != 0; s &= s - 1) next |= rows[std::countr_zero(s)];
    next &= ~seen;
    if (next == 0) return {depth, seen};
    seen |= next;
    frontier = next;
    ++depth;
  }
}

// Vertex-split flow network: vertex v becomes in(v) = 2v -> out(v) = 2v + 1
// with capacity 1, and each edge {x, y} becomes out(x) -> in(y) and
// out(y) -> in(x), also capacity 1. Arcs are stored in pairs (a, a ^ 1).
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : nodes_(2 * g.order()), adjacency_(nodes_) {
    for (int v = 0; v < g.order(); ++v) add_arc(2 * v, 2 * v + 1);
    for (auto [x, y] : g.edges()) {
      add_arc(2 * x + 1, 2 * y);
      add_arc(2 * y + 1, 2 * x);
    }
    parent_.resize(nodes_);
    queue_.resize(nodes_);
  }

  // Flow from out(s) to in(t), stopping early once `limit` is reached.
  int max_flow(VertexId s, VertexId t, int limit) {
    residual_ = capacity_;
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    while (flow < limit && augment(source, sink)) ++flow;
    return flow;
  }

 private:
  void add_arc(int from, int to) {
    adjacency_[from].push_back(static_cast<int>(head_.size()));
    head_.push_back(to);
    capacity_.push_back(1);
    adjacency_[to].push_back(static_cast<int>(head_.size()));
    head_.push_back(from);
    capacity_.push_back(0);
  }

  bool augment(int source, int sink) {
    std::fill(parent_.begin(), parent_.end(), -1);
    int read = 0;
    int write = 0;
    queue_[write++] = source;
    parent_[source] = -2;
    while (read < write) {
      const int node = queue_[read++];
      for (int arc : adjacency_[node]) {
        const int to = head_[arc];
        if (residual_[arc] == 0 || parent_[to] != -1) continue;
        parent_[to] = arc;
        if (to == sink) {
          for (int at = sink; at != source; at = head_[parent_[at] ^ 1]) {
            --residual_[parent_[at]];
            ++residual_[parent_[at] ^ 1];
          }
          return true;
        }
        queue_[write++] = to;
      }
    }
    return false;
  }

  int nodes_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> head_;
  std::vector<int> capacity_;
  std::vector<int> residual_;
  std::vector<int> parent_;
  std::vector<int> queue_;
};

}  // namespace

std::string to_string(const DeltaTriple& t) {
  return "(" + std::to_string(t.f) + "," + std::to_string(t.d) + "," + std::to_string(t.k) + ")";
}

VertexSet reachable_from(const Graph& g, VertexId source) {
  require_vertex(g, source);
  return bfs_layers(g, source).second;
}

bool is_connected(const Graph& g) { return bfs_layers(g, 0).second == g.vertices(); }

std::optional<int> distance(const Graph& g, VertexId u, VertexId v) {
  require_vertex(g, u);
  require_vertex(g, v);
  const auto rows = g.rows();
  VertexSet seen = singleton(u);
  VertexSet frontier = seen;
  for (int depth = 0; frontier != 0; ++depth) {
    if (frontier & singleton(v)) return depth;
    VertexSet next = 0;
    for (VertexSet s = frontier; s != 0; s &= s - 1) next |= rows[std::countr_zero(s)];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::nullopt;
}

int eccentricity(const Graph& g, VertexId v) {
  require_vertex(g, v);
  auto [depth, seen] = bfs_layers(g, v);
  if (seen != g.vertices()) throw Error(Errc::NotConnected, "graph is disconnected");
  return depth;
}

int diameter(const Graph& g) {
  require_connected_nontrivial(g);
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, bfs_layers(g, v).first);
  return best;
}

bool is_free_vertex(const Graph& g, VertexId v) {
  require_vertex(g, v);
  const auto rows = g.rows();
  const VertexSet nbrs = rows[v];
  for (VertexSet s = nbrs; s != 0; s &= s - 1) {
    const int u = std::countr_zero(s);
    const VertexSet others = nbrs & ~singleton(u);
    if ((others & rows[u]) != others) return false;
  }
  return true;
}

bool is_free_vertex_pairwise(const Graph& g, VertexId v) {
  require_vertex(g, v);
  std::vector<VertexId> nbrs;
  for (int u = 0; u < g.order(); ++u) {
    if (u != v && g.has_edge(v, u)) nbrs.push_back(u);
  }
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (!g.has_edge(nbrs[i], nbrs[j])) return false;
    }
  }
  return true;
}

VertexSet free_vertices(const Graph& g) {
  VertexSet out = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (is_free_vertex(g, v)) out |= singleton(v);
  }
  return out;
}

int free_count(const Graph& g) { return set_size(free_vertices(g)); }

int local_connectivity(const Graph& g, VertexId u, VertexId v) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (u == v) throw Error(Errc::SamePair, "u == v == " + std::to_string(u));
  if (g.has_edge(u, v)) throw Error(Errc::AdjacentPair, std::to_string(u) + " and " + std::to_string(v) + " are adjacent");
  SplitNetwork net(g);
  return net.max_flow(u, v, g.order());
}

int vertex_connectivity(const Graph& g) {
  require_connected_nontrivial(g);
  const int n = g.order();
  if (g.is_complete()) return n - 1;

  // kappa <= min degree, so that bound caps every flow computation.
  int best = g.min_degree();
  SplitNetwork net(g);
  const auto rows = g.rows();
  for (int u = 0; u < n && best > 1; ++u) {
    for (VertexSet s = ~rows[u] & g.vertices() & ~full_set(u + 1); s != 0 && best > 1; s &= s - 1) {
      best = std::min(best, net.max_flow(u, std::countr_zero(s), best));
    }
  }
  return best;
}

AnalysisReport analyze(const Graph& g) {
  require_connected_nontrivial(g);
  AnalysisReport report;
  report.connected = true;
  report.complete = g.is_complete();
  const VertexSet free_set = free_vertices(g);
  for (VertexSet s = free_set; s != 0; s &= s - 1) report.free_set.push_back(std::countr_zero(s));
  report.delta = DeltaTriple{set_size(free_set), diameter(g), vertex_connectivity(g)};
  report.phi = report.delta.phi();
  return report;
}

DeltaTriple delta(const Graph& g) { return analyze(g).delta; }

}  // namespace graphdelta
