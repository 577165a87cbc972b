#include "graphdelta/constructions.hpp"

#include <array>
#include <string>

#include "graphdelta/error.hpp"

namespace graphdelta {

namespace {

void require_at_least(int value, int minimum, const char* what) {
  if (value < minimum) {
    throw Error(Errc::InvalidOrder, std::string(what) + " needs at least " + std::to_string(minimum) + " vertices, got " +
                                        std::to_string(value));
  }
}

void require_fits(int total) {
  if (total > kMaxOrder) throw Error(Errc::InvalidOrder, "result would have " + std::to_string(total) + " vertices");
}

}  // namespace

Graph path(int m) {
  require_at_least(m, 1, "path");
  Graph g = Graph::empty(m);
  for (int v = 0; v + 1 < m; ++v) g = g.with_edge(v, v + 1);
  return g;
}

Graph cycle(int m) {
  require_at_least(m, 3, "cycle");
  return path(m).with_edge(m - 1, 0);
}

Graph complete(int m) {
  require_at_least(m, 1, "complete graph");
  std::array<Graph::Row, kMaxOrder> rows{};
  for (int v = 0; v < m; ++v) rows[v] = full_set(m) & ~singleton(v);
  return Graph::from_rows(std::span(rows.data(), m));
}

Graph complete_bipartite(int a, int b) {
  require_at_least(a, 1, "bipartite part");
  require_at_least(b, 1, "bipartite part");
  require_fits(a + b);
  const VertexSet left = full_set(a);
  const VertexSet right = full_set(a + b) & ~left;
  std::array<Graph::Row, kMaxOrder> rows{};
  for (int v = 0; v < a + b; ++v) rows[v] = v < a ? right : left;
  return Graph::from_rows(std::span(rows.data(), a + b));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  require_fits(n1 + g2.order());
  std::array<Graph::Row, kMaxOrder> rows{};
  for (int v = 0; v < n1; ++v) rows[v] = g1.rows()[v];
  for (int v = 0; v < g2.order(); ++v) rows[n1 + v] = g2.rows()[v] << n1;
  return Graph::from_rows(std::span(rows.data(), n1 + g2.order()));
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n = n1 + g2.order();
  require_fits(n);
  const VertexSet first = full_set(n1);
  const VertexSet second = full_set(n) & ~first;
  std::array<Graph::Row, kMaxOrder> rows{};
  for (int v = 0; v < n1; ++v) rows[v] = g1.rows()[v] | second;
  for (int v = 0; v < g2.order(); ++v) rows[n1 + v] = (g2.rows()[v] << n1) | first;
  return Graph::from_rows(std::span(rows.data(), n));
}

Graph duplicate_vertex(const Graph& g, VertexId v, int times) {
  if (!g.valid_vertex(v)) throw Error(Errc::BadVertex, "cannot duplicate vertex " + std::to_string(v));
  if (times < 0) throw Error(Errc::InvalidOrder, "negative duplication count");
  const int n = g.order();
  require_fits(n + times);
  const VertexSet nbrs = g.rows()[v];
  const VertexSet added = full_set(n + times) & ~full_set(n);
  std::array<Graph::Row, kMaxOrder> rows{};
  for (int u = 0; u < n; ++u) rows[u] = g.rows()[u] | ((nbrs >> u) & 1U ? added : 0);
  for (int u = n; u < n + times; ++u) rows[u] = nbrs;
  return Graph::from_rows(std::span(rows.data(), n + times));
}

}  // namespace graphdelta
