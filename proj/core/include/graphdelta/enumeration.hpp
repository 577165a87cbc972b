#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graphdelta/graph.hpp"
#include "graphdelta/invariants.hpp"

namespace graphdelta {

enum class UniverseKind { LabeledAll, CanonicalAll, Sampled };

/// Which set of connected non-complete graphs on n vertices to scan.
struct Universe {
  UniverseKind kind = UniverseKind::LabeledAll;
  std::uint64_t seed = 0;
  std::uint64_t draws = 0;

  static Universe labeled() { return {UniverseKind::LabeledAll}; }
  static Universe canonical() { return {UniverseKind::CanonicalAll}; }
  static Universe sampled(std::uint64_t seed, std::uint64_t draws) { return {UniverseKind::Sampled, seed, draws}; }
};

/// "labeled", "canonical" or "sampled:seed=S:draws=D".
std::string to_string(const Universe& u);

inline constexpr int kLabeledMaxOrder = 7;
inline constexpr int kCanonicalMaxOrder = 8;
inline constexpr int kBruteForceMaxOrder = 10;

struct ScanStats {
  std::uint64_t candidates = 0;  // labelled graphs / leaves / draws examined
  std::uint64_t visited = 0;     // connected non-complete graphs handed to the visitor
};

using GraphVisitor = std::function<void(const Graph&)>;

/// Visits every connected non-complete graph of the universe exactly once:
///   LabeledAll   all 2^(n(n-1)/2) labelled graphs, n <= 7;
///   CanonicalAll one representative per isomorphism class, n <= 8;
///   Sampled      `draws` uniform labelled graphs conditioned on being
///                connected and non-complete, reproducible from `seed`.
/// Throws UniverseTooLarge above the mode's order limit.
ScanStats for_each_connected_graph(int n, const Universe& universe, const GraphVisitor& visitor);

/// Worker `worker` of `workers` visits a disjoint share of the universe;
/// the union over all workers equals the full scan.
ScanStats for_each_connected_graph(int n, const Universe& universe, const GraphVisitor& visitor, int worker,
                                   int workers);

/// True iff g is the representative CanonicalAll emits for its class:
/// vertex degrees are non-increasing and the graph6-ordered adjacency code
/// is lexicographically minimal over all degree-preserving relabelings.
bool is_canonical(const Graph& g);

struct CensusEntry {
  std::uint64_t count = 0;
  Graph sample = Graph::empty(1);
  std::uint64_t sample_key = 0;  // smallest scan key seen; picks the sample deterministically
};

struct CensusTable {
  int n = 0;
  Universe universe;
  std::map<DeltaTriple, CensusEntry> entries;
  ScanStats stats;

  std::set<DeltaTriple> keys() const;
};

/// delta-census over the universe, split across `jobs` worker threads.
/// Output does not depend on `jobs`.
CensusTable census(int n, const Universe& universe, int jobs = 1);

/// Header `n,f,d,k,count,sample_graph6,universe`; rows ascending in (f, d, k).
std::string to_csv(const CensusTable& table);

/// Smallest |T| with G - T disconnected, by trying every T in increasing
/// size; n - 1 when no such T exists. n <= 10 (UniverseTooLarge).
int brute_force_kappa(const Graph& g);

/// graph6 strings of every labelled connected non-complete graph on n <= 7
/// vertices with f + d + k > n + 2, sorted. Empty when the bound holds.
std::vector<std::string> verify_inequality_exhaustive(int n, int jobs = 1);

/// First graph of the universe (in scan order) with delta == t.
std::optional<Graph> search_triple(int n, const DeltaTriple& t, const Universe& universe);

}  // namespace graphdelta
