#include "graphdelta/realizability.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <utility>

#include "graphdelta/error.hpp"
#include "graphdelta/graph_io.hpp"

namespace graphdelta {

namespace {

std::string describe(const Query& q) {
  return "(n=" + std::to_string(q.n) + ", f=" + std::to_string(q.f) + ", d=" + std::to_string(q.d) +
         ", k=" + std::to_string(q.k) + ")";
}

void validate(const Query& q) {
  if (q.f < 0 || q.d < 1 || q.k < 1 || q.n < 1) throw Error(Errc::InvalidQuery, describe(q));
}

FeasibilityVerdict verdict(bool ok, Clause clause, std::optional<int> bound = std::nullopt) {
  return FeasibilityVerdict{ok, clause, bound};
}

// Removes each listed (1-based) edge once, whatever the order or repeats.
void remove_edges(RecipeBuilder& b, std::initializer_list<std::pair<int, int>> edges) {
  std::set<std::pair<int, int>> unique;
  for (auto [u, v] : edges) unique.emplace(std::min(u, v), std::max(u, v));
  for (auto [u, v] : unique) b.remove_edge(u, v);
}

std::vector<int> neighbours_one_based(const Graph& g, int vertex) {
  std::vector<int> out;
  for (VertexSet s = g.neighbors(vertex - 1); s != 0; s &= s - 1) out.push_back(std::countr_zero(s) + 1);
  return out;
}

// kappa = 1. Branch order is fixed; the first matching branch fires.
RecipeBuilder::Result build_connectivity_one(int n, int f, int d) {
  if (f == 0 && d == 2) {
    RecipeBuilder b("Thm-phi3-apex-over-cycles");
    b.complete(1).cycle(4).cycle(n - 5).disjoint_union().join();
    b.note("H = C_4 u C_{n-5} chosen within the K_1*H family (disconnected H without free vertices)");
    return std::move(b).finish();
  }
  if (f == 0 && d == 3) {
    RecipeBuilder b("Example-phi4-item1");
    b.cycle(n - 4).path(3).disjoint_union().complete(1).join().remove_edge(n - 2, n);
    return std::move(b).finish();
  }
  if (f == 0) {
    RecipeBuilder b("Thm-kappa1-f0-path-dup");
    b.path(d + 1).duplicate(2, 1).duplicate(d, n - d - 2);
    return std::move(b).finish();
  }
  if (f == 1 && d == 2) {
    RecipeBuilder b("Thm-phi-spectrum-i4");
    b.complete(1).cycle(n - 2).complete(1).disjoint_union().join();
    return std::move(b).finish();
  }
  if (f == 1) {
    RecipeBuilder b(d == n - 2 ? "Fig-2" : "Thm-kappa1-f1-path-dup");
    b.path(d + 1).duplicate(2, n - d - 1);
    return std::move(b).finish();
  }
  if (f == 2 && d == 2) {
    RecipeBuilder b("Thm-phi-spectrum-i5");
    b.complete(1).cycle(n - 3).complete(2).disjoint_union().join();
    return std::move(b).finish();
  }
  if (d == 2) {
    RecipeBuilder b("Thm-kappa1-star-path");
    b.complete_bipartite(1, n - 1);
    for (int j = 2; j <= n - f + 1; ++j) b.add_edge(j, j + 1);
    return std::move(b).finish();
  }
  if (f + d == n + 1) {
    RecipeBuilder b("Thm-kappa1-fd-n+1");
    b.path(d + 1);
    if (f > 2) b.duplicate(d + 1, f - 2);
    return std::move(b).finish();
  }
  if (f + d == n) {
    RecipeBuilder b("Thm-kappa1-fd-n");
    b.path(d + 1).duplicate(2, 1).add_edge(2, d + 2);
    if (f > 2) b.duplicate(d + 1, f - 2);
    return std::move(b).finish();
  }
  if (f + d == n - 1) {
    RecipeBuilder b("Thm-kappa1-fd-n-1");
    b.path(d + 1).duplicate(d + 1, f - 1).duplicate(2, 1);
    return std::move(b).finish();
  }
  RecipeBuilder b("Thm-kappa1-triangle-gadget");
  b.path(d + 1).empty(1).disjoint_union().add_edge(d, d + 2).add_edge(d + 1, d + 2);
  b.duplicate(d + 2, f - 1).duplicate(2, n - d - f - 1);
  return std::move(b).finish();
}

// diam = 2, kappa >= 2: joins of a clique with small pieces, minus edges.
RecipeBuilder::Result build_diameter_two(int n, int f, int k) {
  if (f == 0) {
    if (k == 2) {
      RecipeBuilder b("Example-phi4-item2");
      b.complete_bipartite(2, n - 2);
      return std::move(b).finish();
    }
    if (k <= n - 5) {
      RecipeBuilder b("Thm-d2-f0-k-mid");
      b.complete(k).path(n - k - 2).path(2).disjoint_union().join();
      remove_edges(b, {{1, k + 2}, {2, n - 3}, {1, n - 1}, {2, n}});
      return std::move(b).finish();
    }
    if (k == n - 4) {
      RecipeBuilder b("Thm-d2-f0-k-n-4");
      b.complete(n - 4).path(2).path(2).disjoint_union().join();
      remove_edges(b, {{1, n - 3}, {2, n - 2}, {1, n - 1}, {2, n}});
      return std::move(b).finish();
    }
    if (k == n - 3) {
      RecipeBuilder b("Thm-d2-f0-k-n-3");
      b.complete(n - 3).path(3).join();
      remove_edges(b, {{1, n - 2}, {2, n - 1}, {3, n}});
      return std::move(b).finish();
    }
    RecipeBuilder b("Thm-d2-f0-k-n-2");
    b.complete(n - 2).path(2).join();
    remove_edges(b, {{1, n - 1}, {2, n}});
    return std::move(b).finish();
  }
  if (f == 1) {
    if (k == 2) {
      RecipeBuilder b("Example-phi5-item1");
      b.complete_bipartite(2, n - 4).empty(2).disjoint_union();
      b.add_edge(1, n - 1).add_edge(1, n).add_edge(2, n).add_edge(n - 1, n);
      return std::move(b).finish();
    }
    if (k <= n - 4) {
      RecipeBuilder b("Thm-d2-f1-k-mid");
      b.complete(k).path(n - k - 1).complete(1).disjoint_union().join();
      remove_edges(b, {{1, k + 2}, {2, n - 2}});
      return std::move(b).finish();
    }
    RecipeBuilder b("Thm-d2-f1-k-n-3");
    b.complete(n - 3).path(2).complete(1).disjoint_union().join();
    remove_edges(b, {{1, n - 2}, {2, n - 1}});
    return std::move(b).finish();
  }
  if (f == 2) {
    if (k <= n - 4) {
      RecipeBuilder b("Thm-d2-f2-k-mid");
      b.complete(k).path(n - k - 2).path(2).disjoint_union().join();
      remove_edges(b, {{1, n - 1}, {2, n}});
      return std::move(b).finish();
    }
    if (k == n - 3) {
      RecipeBuilder b("Thm-d2-f2-k-n-3");
      b.complete(n - 3).path(3).join();
      remove_edges(b, {{n - 1, n - 2}, {1, n}});
      return std::move(b).finish();
    }
    RecipeBuilder b("Thm-d2-f2-k-n-2");
    b.complete(n - 2).complete(1).complete(1).disjoint_union().join();
    return std::move(b).finish();
  }
  RecipeBuilder b("Thm-d2-f3plus");
  b.cycle(n - k).complete(k).join();
  for (int j = 1; j <= f - 1; ++j) b.remove_edge(j, j + 1);
  return std::move(b).finish();
}

// kappa >= 2, diam >= 3. k disjoint paths Q_1..Q_k on d-1 vertices each
// (Q_i occupies (i-1)(d-1)+1 .. i(d-1)), hub a joined to the first vertex
// of every path and hub b to the last, so dist(a, b) = d.
// Layers L_0 .. L_d with L_i completely joined to L_(i+1). Every inner
// layer separates, so kappa is the smallest inner layer (k). Inner vertices
// see two non-adjacent layers and are never free; a vertex of L_0 is free
// iff L_1 is a clique, and likewise for L_d and L_(d-1).
RecipeBuilder::Result build_layered(int n, int f, int d, int k) {
  std::vector<int> size(static_cast<std::size_t>(d + 1), k);
  size[0] = f >= 3 ? f - 1 : 1;
  size[d] = 1;
  int rest = n;
  for (int s : size) rest -= s;
  // Spare vertices go to a layer whose clique status already matches f.
  size[f == 1 ? d - 1 : 1] += rest;
  const bool first_clique = f >= 1;
  const bool last_clique = f >= 2;

  std::vector<int> start(static_cast<std::size_t>(d + 2), 1);
  for (int i = 0; i <= d; ++i) start[i + 1] = start[i] + size[i];
  const auto layer = [&](int i) {
    std::vector<int> vs;
    for (int v = start[i]; v < start[i + 1]; ++v) vs.push_back(v);
    return vs;
  };

  RecipeBuilder b(f == 0 ? "Thm-main-layered-f0" : f == 1 ? "Thm-main-layered-f1" : "Thm-main-layered");
  b.note("hub-to-hub paths fused depth by depth; parallel paths alone give kappa <= 2");
  b.empty(n);
  for (int i = 0; i < d; ++i) {
    for (int u : layer(i)) {
      for (int v : layer(i + 1)) b.add_edge(u, v);
    }
  }
  if (first_clique) b.make_clique(layer(1));
  if (last_clique) b.make_clique(layer(d - 1));
  return std::move(b).finish();
}

RecipeBuilder::Result build_main(int n, int f, int d, int k) {
  if (k >= 3) return build_layered(n, f, d, k);
  const int base = k * (d - 1);
  const int hub_a = base + 1;
  const int hub_b = base + 2;

  const char* tag = f == 0 ? "Thm-main-f0" : f == 1 ? "Thm-main-f1" : f == 2 ? "Thm-main-f2" : "Thm-main-gadget";
  RecipeBuilder b(tag);
  for (int i = 1; i <= k; ++i) {
    b.path(d - 1);
    if (i > 1) b.disjoint_union();
  }
  b.empty(2).disjoint_union();
  for (int i = 1; i <= k; ++i) {
    b.add_edge((i - 1) * (d - 1) + 1, hub_a);
    b.add_edge(i * (d - 1), hub_b);
  }

  if (f <= 2) {
    const int extra = n - base - 2;
    if (extra > 0) b.duplicate(1, extra);
    if (f == 1) {
      std::vector<int> b_side;
      for (int i = 1; i <= k; ++i) b_side.push_back(i * (d - 1));
      b.make_clique(b_side);
    } else if (f == 2) {
      b.note("dedicated f=2 branch: both hubs made simplicial, no gadget vertex");
      b.make_clique(neighbours_one_based(b.top(), hub_a));
      b.make_clique(neighbours_one_based(b.top(), hub_b));
    }
    return std::move(b).finish();
  }

  const int gadget = base + 3;
  const int s = (k - 1) * (d - 1) + 1;
  b.empty(1).disjoint_union().add_edge(s, gadget).add_edge(s + 1, gadget);
  if (f > 3) b.duplicate(gadget, f - 3);
  if (n - base - f > 0) b.duplicate(1, n - base - f);
  b.make_clique(neighbours_one_based(b.top(), hub_a));
  b.make_clique(neighbours_one_based(b.top(), hub_b));
  return std::move(b).finish();
}

}  // namespace

std::string_view to_string(Clause clause) noexcept {
  switch (clause) {
    case Clause::IneqFail: return "INEQ_FAIL";
    case Clause::Phi3SmallN: return "PHI3_SMALL_N";
    case Clause::K1F0: return "K1_F0";
    case Clause::K1F1: return "K1_F1";
    case Clause::K1F2Plus: return "K1_F2PLUS";
    case Clause::D2F0: return "D2_F0";
    case Clause::D2F1: return "D2_F1";
    case Clause::D2F2Plus: return "D2_F2PLUS";
    case Clause::MainBound: return "MAIN_BOUND";
    case Clause::CompleteExcluded: return "COMPLETE_EXCLUDED";
  }
  return "UNKNOWN";
}

bool inequality_bound_holds(const Query& q) noexcept { return q.f + q.d + q.k <= q.n + 2; }

bool main_bound_holds(const Query& q) noexcept { return q.n >= q.k * (q.d - 1) + std::max(2, q.f); }

FeasibilityVerdict feasible(const Query& q) {
  validate(q);
  if (q.n < kTheoremMinOrder) {
    throw Error(Errc::OutOfTheoremRange, describe(q) + ": n < 8, use the enumeration census instead");
  }
  const int n = q.n;
  const int f = q.f;
  const int d = q.d;
  const int k = q.k;

  if (d == 1) return verdict(false, Clause::CompleteExcluded);

  if (k == 1) {
    // phi = 3 needs K_1 * H with every component of H on >= 4 vertices.
    if (f == 0 && d == 2 && n < 9) return verdict(false, Clause::Phi3SmallN, 9);
    if (f == 0) return verdict(d <= n - 3, Clause::K1F0, n - 3);
    if (f == 1) return verdict(d <= n - 2, Clause::K1F1, n - 2);
    return verdict(f + d <= n + 1, Clause::K1F2Plus, n + 1);
  }
  if (d == 2) {
    if (f == 0) return verdict(k <= n - 2, Clause::D2F0, n - 2);
    if (f == 1) return verdict(k <= n - 3, Clause::D2F1, n - 3);
    return verdict(f + k <= n, Clause::D2F2Plus, n);
  }
  if (!inequality_bound_holds(q)) return verdict(false, Clause::IneqFail, n + 2);
  return verdict(main_bound_holds(q), Clause::MainBound, k * (d - 1) + std::max(2, f));
}

void verify_witness(const Witness& w) {
  const auto fail = [&](const std::string& why) {
    throw Error(Errc::ConstructionMismatch, w.recipe.family_tag + " for " + describe(w.query) + ": " + why);
  };
  if (w.graph.order() != w.query.n) fail("built " + std::to_string(w.graph.order()) + " vertices");
  if (!(replay(w.recipe) == w.graph)) fail("recipe does not replay to the witness");
  if (!is_connected(w.graph)) fail("witness is disconnected");
  if (w.graph.is_complete()) fail("witness is complete");
  const DeltaTriple got = delta(w.graph);
  if (got != w.query.triple()) {
    fail("analyze gives " + to_string(got) + " (graph6 " + encode_graph6(w.graph) + ")");
  }
}

Witness construct_witness(const Query& q) {
  validate(q);
  if (q.k >= 2 && q.d >= 3) {
    if (!main_bound_holds(q)) throw Error(Errc::NotRealizable, describe(q) + " violates n >= k(d-1) + max{2,f}");
  } else {
    const auto v = feasible(q);
    if (!v.feasible) throw Error(Errc::NotRealizable, describe(q) + " fails clause " + std::string(to_string(v.clause)));
  }

  auto built = q.k == 1   ? build_connectivity_one(q.n, q.f, q.d)
               : q.d == 2 ? build_diameter_two(q.n, q.f, q.k)
                          : build_main(q.n, q.f, q.d, q.k);
  Witness w{q, std::move(built.graph), std::move(built.recipe)};
  verify_witness(w);
  return w;
}

std::vector<Witness> witnesses_for_phi(int n, int phi) {
  if (n < kTheoremMinOrder || phi < 3 || phi > n + 2) {
    throw Error(Errc::NotRealizable, "phi " + std::to_string(phi) + " outside [3, n+2] or n < 8");
  }
  std::vector<Witness> out;
  for (int f = 0; f <= phi - 3; ++f) {
    for (int d = 2; f + d + 1 <= phi; ++d) {
      const Query q{n, f, d, phi - f - d};
      if (feasible(q).feasible) out.push_back(construct_witness(q));
    }
  }
  return out;
}

}  // namespace graphdelta
