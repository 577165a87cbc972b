#include "graphdelta/graph.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "graphdelta/error.hpp"

namespace graphdelta {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw Error(Errc::InvalidOrder, "vertex count " + std::to_string(n) + " outside [1, 64]");
  }
}

}  // namespace

Graph Graph::empty(int n) {
  check_order(n);
  Graph g;
  g.n_ = n;
  return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<VertexId, VertexId>> edges) {
  Graph g = empty(n);
  for (auto [u, v] : edges) {
    g.check_pair(u, v);
    g.rows_[u] |= singleton(v);
    g.rows_[v] |= singleton(u);
  }
  return g;
}

Graph Graph::from_rows(std::span<const Row> rows) {
  Graph g = empty(static_cast<int>(rows.size()));
  const VertexSet all = full_set(g.n_);
  for (int v = 0; v < g.n_; ++v) {
    if ((rows[v] & ~all) != 0 || (rows[v] & singleton(v)) != 0) {
      throw Error(Errc::FormatError, "adjacency row " + std::to_string(v) + " is reflexive or out of range");
    }
    g.rows_[v] = rows[v];
  }
  for (int u = 0; u < g.n_; ++u) {
    for (VertexSet s = g.rows_[u]; s != 0; s &= s - 1) {
      const int v = std::countr_zero(s);
      if ((g.rows_[v] & singleton(u)) == 0) {
        throw Error(Errc::FormatError, "adjacency rows are not symmetric");
      }
    }
  }
  return g;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(std::popcount(rows_[v]));
  return twice / 2;
}

void Graph::check_vertex(VertexId v) const {
  if (!valid_vertex(v)) {
    throw Error(Errc::BadVertex, "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n_));
  }
}

void Graph::check_pair(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(Errc::SelfLoop, "edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return (rows_[u] >> v) & 1U;
}

VertexSet Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return rows_[v];
}

int Graph::min_degree() const noexcept {
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, std::popcount(rows_[v]));
  return best;
}

bool Graph::is_complete() const noexcept {
  const VertexSet all = full_set(n_);
  for (int v = 0; v < n_; ++v) {
    if ((rows_[v] | singleton(v)) != all) return false;
  }
  return true;
}

Graph Graph::with_edge(VertexId u, VertexId v) const {
  check_pair(u, v);
  Graph g = *this;
  g.rows_[u] |= singleton(v);
  g.rows_[v] |= singleton(u);
  return g;
}

Graph Graph::without_edge(VertexId u, VertexId v) const {
  check_pair(u, v);
  Graph g = *this;
  g.rows_[u] &= ~singleton(v);
  g.rows_[v] &= ~singleton(u);
  return g;
}

Graph Graph::induced_subgraph(VertexSet keep) const {
  if (keep == 0) throw Error(Errc::EmptySelection, "induced subgraph on no vertices");
  if ((keep & ~full_set(n_)) != 0) throw Error(Errc::BadVertex, "selection contains ids >= order");

  std::array<int, kMaxOrder> new_id{};
  int m = 0;
  for (VertexSet s = keep; s != 0; s &= s - 1) new_id[std::countr_zero(s)] = m++;

  Graph g = empty(m);
  for (VertexSet s = keep; s != 0; s &= s - 1) {
    const int old = std::countr_zero(s);
    for (VertexSet t = rows_[old] & keep; t != 0; t &= t - 1) {
      g.rows_[new_id[old]] |= singleton(new_id[std::countr_zero(t)]);
    }
  }
  return g;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count());
  for (int u = 0; u < n_; ++u) {
    for (VertexSet s = rows_[u] & ~full_set(u + 1); s != 0; s &= s - 1) {
      out.emplace_back(u, std::countr_zero(s));
    }
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  return a.n_ == b.n_ && std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

}  // namespace graphdelta
