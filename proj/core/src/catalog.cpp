#include "graphdelta/catalog.hpp"

#include <string>
#include <utility>

#include "graphdelta/error.hpp"

namespace graphdelta {

namespace {

using Result = RecipeBuilder::Result;

// Cycle, square or square-with-chord at vertices 1.., pendant path hanging
// off vertex 1.
Result pendant_path(std::string_view tag, int cycle_length, bool chord, int n) {
  RecipeBuilder b{std::string(tag)};
  b.cycle(cycle_length).path(n - cycle_length).disjoint_union().add_edge(1, cycle_length + 1);
  if (chord) b.add_edge(2, cycle_length);
  return std::move(b).finish();
}

const CatalogEntry kEntries[] = {
    {"Fig-1", 6, [](int n) { return DeltaTriple{1, n - 3, 1}; },
     [](int n) { return pendant_path("Fig-1", 5, false, n); }},
    {"Fig-2", 5, [](int n) { return DeltaTriple{1, n - 2, 1}; },
     [](int n) { return pendant_path("Fig-2", 4, false, n); }},
    // The caption reads (2, n-1, 1); the drawn graph has diameter n - 2.
    {"Fig-3", 5, [](int n) { return DeltaTriple{2, n - 2, 1}; },
     [](int n) { return pendant_path("Fig-3", 4, true, n); }},

    {"Example-phi4-item1", 8, [](int) { return DeltaTriple{0, 3, 1}; },
     [](int n) {
       RecipeBuilder b("Example-phi4-item1");
       b.cycle(n - 4).path(3).disjoint_union().complete(1).join().remove_edge(n - 2, n);
       return std::move(b).finish();
     }},
    {"Example-phi4-item2", 4, [](int) { return DeltaTriple{0, 2, 2}; },
     [](int n) {
       RecipeBuilder b("Example-phi4-item2");
       b.complete_bipartite(2, n - 2);
       return std::move(b).finish();
     }},

    {"Example-phi5-item1", 6, [](int) { return DeltaTriple{1, 2, 2}; },
     [](int n) {
       RecipeBuilder b("Example-phi5-item1");
       b.complete_bipartite(2, n - 4).empty(2).disjoint_union();
       b.add_edge(1, n - 1).add_edge(1, n).add_edge(2, n).add_edge(n - 1, n);
       return std::move(b).finish();
     }},
    {"Example-phi5-item2", 5, [](int) { return DeltaTriple{1, 3, 1}; },
     [](int n) {
       RecipeBuilder b("Example-phi5-item2");
       b.complete_bipartite(2, n - 4).empty(2).disjoint_union();
       b.add_edge(1, n).add_edge(2, n).add_edge(n - 1, n);
       return std::move(b).finish();
     }},
    {"Example-phi5-item3", 6, [](int) { return DeltaTriple{0, 2, 3}; },
     [](int n) {
       RecipeBuilder b("Example-phi5-item3");
       b.complete_bipartite(3, n - 3);
       return std::move(b).finish();
     }},
    {"Example-phi5-item4", 7, [](int) { return DeltaTriple{0, 4, 1}; },
     [](int n) {
       RecipeBuilder b("Example-phi5-item4");
       b.complete_bipartite(2, n - 6).empty(4).disjoint_union();
       b.add_edge(1, n - 2).add_edge(2, n - 2).add_edge(n - 3, n - 2);
       b.add_edge(n - 2, n - 1).add_edge(n - 1, n).add_edge(n - 3, n);
       return std::move(b).finish();
     }},
    // Edges are added to K_{2,n-5}, the graph the item defines.
    {"Example-phi5-item5", 6, [](int) { return DeltaTriple{0, 3, 2}; },
     [](int n) {
       RecipeBuilder b("Example-phi5-item5");
       b.complete_bipartite(2, n - 5).empty(3).disjoint_union();
       b.add_edge(1, n - 1).add_edge(2, n - 2).add_edge(n - 1, n).add_edge(n - 2, n);
       return std::move(b).finish();
     }},

    {"Example-phi6-item1", 8, [](int) { return DeltaTriple{3, 2, 1}; },
     [](int n) {
       RecipeBuilder b("Example-phi6-item1");
       b.complete(1).complete(3).cycle(n - 4).disjoint_union().join();
       return std::move(b).finish();
     }},
    {"Example-phi6-item2", 8, [](int) { return DeltaTriple{2, 3, 1}; },
     [](int n) {
       RecipeBuilder b("Example-phi6-item2");
       b.complete(1).cycle(n - 4).join().empty(3).disjoint_union();
       b.add_edge(1, n - 2).add_edge(n - 2, n).add_edge(n - 2, n - 1).add_edge(n - 1, n);
       return std::move(b).finish();
     }},
    {"Example-phi6-item3", 8, [](int) { return DeltaTriple{2, 2, 2}; },
     [](int n) {
       RecipeBuilder b("Example-phi6-item3");
       b.complete(2).cycle(n - 4).complete(1).disjoint_union().complete(1).disjoint_union().join();
       return std::move(b).finish();
     }},
    {"Example-phi6-item4", 8, [](int) { return DeltaTriple{1, 4, 1}; },
     [](int n) {
       RecipeBuilder b("Example-phi6-item4");
       b.complete(1).cycle(n - 4).join().empty(3).disjoint_union();
       b.add_edge(1, n - 2).add_edge(n - 2, n - 1).add_edge(n - 1, n);
       return std::move(b).finish();
     }},
    {"Example-phi6-item5", 8, [](int) { return DeltaTriple{1, 2, 3}; },
     [](int n) {
       RecipeBuilder b("Example-phi6-item5");
       b.complete(3).cycle(n - 4).complete(1).disjoint_union().join();
       return std::move(b).finish();
     }},
    // Edges are added to the K_{2,n-5} the item defines.
    {"Example-phi6-item6", 6, [](int) { return DeltaTriple{1, 3, 2}; },
     [](int n) {
       RecipeBuilder b("Example-phi6-item6");
       b.complete_bipartite(2, n - 5).empty(3).disjoint_union();
       b.add_edge(1, n - 1).add_edge(2, n - 2).add_edge(n - 2, n - 1).add_edge(n - 2, n).add_edge(n - 1, n);
       return std::move(b).finish();
     }},
    {"Example-phi6-item7", 8, [](int) { return DeltaTriple{0, 2, 4}; },
     [](int n) {
       RecipeBuilder b("Example-phi6-item7");
       b.complete_bipartite(4, n - 4);
       return std::move(b).finish();
     }},
    {"Example-phi6-item8", 8, [](int) { return DeltaTriple{0, 4, 2}; },
     [](int n) {
       RecipeBuilder b("Example-phi6-item8");
       b.cycle(8);
       if (n > 8) b.duplicate(1, n - 8);
       return std::move(b).finish();
     }},
    // At n = 8 vertex 1 has degree n - 6 = 2, so the item starts at n = 9.
    {"Example-phi6-item9", 9, [](int) { return DeltaTriple{0, 3, 3}; },
     [](int n) {
       RecipeBuilder b("Example-phi6-item9");
       b.complete_bipartite(3, n - 7).empty(4).disjoint_union();
       b.add_edge(n - 3, n - 2).add_edge(n - 2, n - 1);
       for (int j = 1; j <= 3; ++j) b.add_edge(n - j, n).add_edge(j, n - j);
       return std::move(b).finish();
     }},
};

}  // namespace

std::span<const CatalogEntry> catalog() { return kEntries; }

Witness build_catalog_entry(std::string_view tag, int n) {
  for (const auto& entry : kEntries) {
    if (entry.tag != tag) continue;
    if (n < entry.min_order) {
      throw Error(Errc::NotRealizable, std::string(tag) + " needs n >= " + std::to_string(entry.min_order));
    }
    const DeltaTriple t = entry.expected(n);
    auto built = entry.build(n);
    Witness w{Query{n, t.f, t.d, t.k}, std::move(built.graph), std::move(built.recipe)};
    verify_witness(w);
    return w;
  }
  throw Error(Errc::NotRealizable, "no catalog entry '" + std::string(tag) + "'");
}

Witness phi_spectrum_witness(int n, int i) {
  if (n < kTheoremMinOrder || i < 4 || i > n + 1) {
    throw Error(Errc::NotRealizable, "kappa = 1 spectrum covers 4 <= phi <= n + 1 for n >= 8");
  }
  if (i == n - 1) return build_catalog_entry("Fig-1", n);
  if (i == n) return build_catalog_entry("Fig-2", n);
  if (i == n + 1) return build_catalog_entry("Fig-3", n);

  Query q{n, 0, i - 1, 1};
  RecipeBuilder b("Thm-phi-spectrum-path-dup");
  if (i == 4) {
    q = Query{n, 1, 2, 1};
    b = RecipeBuilder("Thm-phi-spectrum-i4");
    b.complete(1).cycle(n - 2).complete(1).disjoint_union().join();
  } else if (i == 5) {
    q = Query{n, 2, 2, 1};
    b = RecipeBuilder("Thm-phi-spectrum-i5");
    b.complete(1).cycle(n - 3).complete(2).disjoint_union().join();
  } else {
    b.path(i).duplicate(2, 1);
    if (n - i - 1 > 0) b.duplicate(i - 1, n - i - 1);
  }
  auto built = std::move(b).finish();
  Witness w{q, std::move(built.graph), std::move(built.recipe)};
  verify_witness(w);
  return w;
}

}  // namespace graphdelta
