#pragma once

#include <span>
#include <string_view>

#include "graphdelta/invariants.hpp"
#include "graphdelta/realizability.hpp"

namespace graphdelta {

/// A fixed example construction: for every n >= min_order, build(n) is a
/// graph on n vertices whose delta is `expected(n)`.
struct CatalogEntry {
  std::string_view tag;
  int min_order;
  DeltaTriple (*expected)(int n);
  RecipeBuilder::Result (*build)(int n);
};

/// The small-phi example families (phi = 4, 5, 6), the three pendant-path
/// figures and the kappa = 1 phi-spectrum family.
std::span<const CatalogEntry> catalog();

/// Looks up `tag` and builds it for order n. The result is verified with
/// verify_witness. Throws NotRealizable for an unknown tag or n below the
/// entry's minimum.
Witness build_catalog_entry(std::string_view tag, int n);

/// kappa = 1 graph with phi = i for 4 <= i <= n + 1, n >= 8.
Witness phi_spectrum_witness(int n, int i);

}  // namespace graphdelta
