#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "graphdelta/graph.hpp"
#include "graphdelta/invariants.hpp"
#include "graphdelta/recipe.hpp"

namespace graphdelta {

/// A candidate (n, f, d, k): is there a connected non-complete graph on n
/// vertices with f free vertices, diameter d and vertex connectivity k?
struct Query {
  int n = 0;
  int f = 0;
  int d = 2;
  int k = 1;

  DeltaTriple triple() const noexcept { return {f, d, k}; }
  friend auto operator<=>(const Query&, const Query&) = default;
};

/// Which characterisation decided a query.
enum class Clause {
  IneqFail,
  Phi3SmallN,
  K1F0,
  K1F1,
  K1F2Plus,
  D2F0,
  D2F1,
  D2F2Plus,
  MainBound,
  CompleteExcluded,
};

std::string_view to_string(Clause clause) noexcept;

struct FeasibilityVerdict {
  bool feasible = false;
  Clause clause = Clause::IneqFail;
  /// The threshold the clause compares against, e.g. k(d-1) + max{2, f}
  /// for MainBound or the largest admissible d for K1F0.
  std::optional<int> bound_detail;
};

struct Witness {
  Query query;
  Graph graph;
  WitnessRecipe recipe;
};

/// Smallest order the constructions and the characterisation below are
/// stated for (except the kappa >= 2, diam >= 3 regime, which holds for
/// every n).
inline constexpr int kTheoremMinOrder = 8;

/// f + d + k <= n + 2.
bool inequality_bound_holds(const Query& q) noexcept;

/// n >= k(d-1) + max{2, f}: the exact condition for kappa >= 2, diam >= 3.
bool main_bound_holds(const Query& q) noexcept;

/// Decides realizability for n >= 8. Throws OutOfTheoremRange for n < 8
/// and InvalidQuery for f < 0, d < 1 or k < 1.
FeasibilityVerdict feasible(const Query& q);

/// Builds a witness for a realizable query and verifies it before
/// returning: the recipe must replay to the same graph and analyze() must
/// return exactly (f, d, k). Throws NotRealizable for infeasible queries
/// and ConstructionMismatch if verification fails.
///
/// Queries with k >= 2 and d >= 3 are accepted for any n satisfying
/// main_bound_holds(); all other regimes require n >= 8.
Witness construct_witness(const Query& q);

/// Throws ConstructionMismatch unless `w.graph` has order n, is connected
/// and non-complete, equals replay(w.recipe) and has delta = (f, d, k).
void verify_witness(const Witness& w);

/// Every feasible (f, d, k) with f + d + k = phi, in ascending (f, d, k)
/// order, each with a verified witness. Requires n >= 8 and
/// 3 <= phi <= n + 2 (NotRealizable otherwise).
std::vector<Witness> witnesses_for_phi(int n, int phi);

}  // namespace graphdelta
