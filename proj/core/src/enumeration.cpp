#include "graphdelta/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "graphdelta/error.hpp"
#include "graphdelta/graph_io.hpp"

namespace graphdelta {

namespace {

using Rows = std::array<Graph::Row, kMaxOrder>;

// Offset of column j (pairs (0,j) .. (j-1,j)) in graph6 pair order.
constexpr int column_offset(int j) { return j * (j - 1) / 2; }

bool rows_connected(const Rows& rows, int n) {
  const VertexSet all = full_set(n);
  VertexSet seen = 1;
  VertexSet frontier = 1;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s != 0; s &= s - 1) next |= rows[std::countr_zero(s)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

bool rows_complete(const Rows& rows, int n) {
  const VertexSet all = full_set(n);
  for (int v = 0; v < n; ++v) {
    if ((rows[v] | singleton(v)) != all) return false;
  }
  return true;
}

Graph to_graph(const Rows& rows, int n) { return Graph::from_rows(std::span(rows.data(), n)); }

// Depth-first search over degree-preserving relabelings, fixing new
// position 0, 1, .. in turn. Column j of the relabeled code is known as
// soon as position j is fixed, so a strictly larger prefix prunes the
// branch and a strictly smaller one refutes minimality.
class MinimalCodeCheck {
 public:
  MinimalCodeCheck(const Rows& rows, int n) : rows_(rows), n_(n) {
    for (int v = 0; v < n; ++v) degree_[v] = std::popcount(rows[v]);
    for (int v = 0; v < n; ++v) {
      VertexSet same = 0;
      for (int u = 0; u < n; ++u) {
        if (degree_[u] == degree_[v]) same |= singleton(u);
      }
      class_of_[v] = same;
    }
  }

  bool degrees_sorted() const {
    for (int v = 1; v < n_; ++v) {
      if (degree_[v] > degree_[v - 1]) return false;
    }
    return true;
  }

  bool minimal() { return search(0, 0); }

 private:
  bool search(int j, VertexSet used) {
    if (j == n_) return true;
    for (VertexSet cands = class_of_[j] & ~used; cands != 0; cands &= cands - 1) {
      const int x = std::countr_zero(cands);
      int cmp = 0;
      for (int i = 0; i < j && cmp == 0; ++i) {
        const unsigned permuted = (rows_[perm_[i]] >> x) & 1U;
        const unsigned original = (rows_[i] >> j) & 1U;
        if (permuted != original) cmp = permuted < original ? -1 : 1;
      }
      if (cmp < 0) return false;
      if (cmp > 0) continue;
      perm_[j] = x;
      if (!search(j + 1, used | singleton(x))) return false;
    }
    return true;
  }

  const Rows& rows_;
  int n_;
  std::array<int, kMaxOrder> degree_{};
  std::array<VertexSet, kMaxOrder> class_of_{};
  std::array<int, kMaxOrder> perm_{};
};

template <class Visit>
ScanStats scan_labeled(int n, int worker, int workers, Visit&& visit) {
  ScanStats stats;
  const int pairs = column_offset(n);
  const std::uint64_t total = std::uint64_t{1} << pairs;
  Rows rows{};
  for (std::uint64_t code = static_cast<std::uint64_t>(worker); code < total; code += static_cast<std::uint64_t>(workers)) {
    ++stats.candidates;
    rows.fill(0);
    for (int j = 1; j < n; ++j) {
      const VertexSet column = (code >> column_offset(j)) & full_set(j);
      rows[j] |= column;
      for (VertexSet s = column; s != 0; s &= s - 1) rows[std::countr_zero(s)] |= singleton(j);
    }
    if (!rows_connected(rows, n) || rows_complete(rows, n)) continue;
    ++stats.visited;
    if (!visit(to_graph(rows, n), code)) break;
  }
  return stats;
}

// Columns are assigned from j = n-1 down to 1. Once column j is placed,
// every vertex >= j has its final degree, which lets us insist on
// non-increasing degrees before the remaining columns are enumerated.
template <class Visit>
class CanonicalScan {
 public:
  CanonicalScan(int n, int worker, int workers, Visit& visit)
      : n_(n), worker_(worker), workers_(workers), visit_(visit) {}

  ScanStats run() {
    if (n_ == 1) return stats_;
    column(n_ - 1, 0);
    return stats_;
  }

 private:
  bool column(int j, std::uint64_t code) {
    const std::uint64_t choices = std::uint64_t{1} << j;
    for (std::uint64_t mask = 0; mask < choices; ++mask) {
      if (j == n_ - 1 && static_cast<int>(mask % static_cast<std::uint64_t>(workers_)) != worker_) continue;
      rows_[j] = mask | (rows_[j] & ~full_set(j));
      for (VertexSet s = mask; s != 0; s &= s - 1) rows_[std::countr_zero(s)] |= singleton(j);

      bool keep_going = true;
      if (feasible_prefix(j)) {
        const std::uint64_t next = code | (mask << column_offset(j));
        keep_going = j == 1 ? leaf(next) : column(j - 1, next);
      }

      for (VertexSet s = mask; s != 0; s &= s - 1) rows_[std::countr_zero(s)] &= ~singleton(j);
      rows_[j] &= ~full_set(j);
      if (!keep_going) return false;
    }
    return true;
  }

  bool feasible_prefix(int j) const {
    const int dj = std::popcount(rows_[j]);
    if (j + 1 < n_ && dj < std::popcount(rows_[j + 1])) return false;
    // Vertex i < j can still gain at most j - 1 edges (to the rest of 0..j-1).
    for (int i = 0; i < j; ++i) {
      if (std::popcount(rows_[i]) + j - 1 < dj) return false;
    }
    return true;
  }

  bool leaf(std::uint64_t code) {
    ++stats_.candidates;
    if (!rows_connected(rows_, n_) || rows_complete(rows_, n_)) return true;
    MinimalCodeCheck check(rows_, n_);
    if (!check.degrees_sorted() || !check.minimal()) return true;
    ++stats_.visited;
    return visit_(to_graph(rows_, n_), code);
  }

  int n_;
  int worker_;
  int workers_;
  Visit& visit_;
  Rows rows_{};
  ScanStats stats_;
};

Graph random_graph(int n, std::mt19937_64& rng) {
  Rows rows{};
  for (int u = 0; u < n; ++u) {
    const VertexSet above = full_set(n) & ~full_set(u + 1);
    rows[u] |= rng() & above;
    for (VertexSet s = rows[u] & above; s != 0; s &= s - 1) rows[std::countr_zero(s)] |= singleton(u);
  }
  return to_graph(rows, n);
}

template <class Visit>
ScanStats scan_sampled(int n, const Universe& u, int worker, int workers, Visit&& visit) {
  ScanStats stats;
  for (std::uint64_t draw = static_cast<std::uint64_t>(worker); draw < u.draws; draw += static_cast<std::uint64_t>(workers)) {
    std::seed_seq seq{static_cast<std::uint32_t>(u.seed), static_cast<std::uint32_t>(u.seed >> 32),
                      static_cast<std::uint32_t>(draw), static_cast<std::uint32_t>(draw >> 32)};
    std::mt19937_64 rng(seq);
    while (true) {
      ++stats.candidates;
      Graph g = random_graph(n, rng);
      if (is_connected(g) && !g.is_complete()) {
        ++stats.visited;
        if (!visit(g, draw)) return stats;
        break;
      }
    }
  }
  return stats;
}

void check_universe(int n, const Universe& u) {
  const auto too_large = [&](int limit) {
    throw Error(Errc::UniverseTooLarge,
                to_string(u) + " universe supports n <= " + std::to_string(limit) + ", got " + std::to_string(n));
  };
  if (n < 1) throw Error(Errc::InvalidOrder, "vertex count " + std::to_string(n));
  switch (u.kind) {
    case UniverseKind::LabeledAll:
      if (n > kLabeledMaxOrder) too_large(kLabeledMaxOrder);
      break;
    case UniverseKind::CanonicalAll:
      if (n > kCanonicalMaxOrder) too_large(kCanonicalMaxOrder);
      break;
    case UniverseKind::Sampled:
      if (n > kMaxOrder) too_large(kMaxOrder);
      if (n < 3) throw Error(Errc::InvalidOrder, "no connected non-complete graph on fewer than 3 vertices");
      break;
  }
}

template <class Visit>
ScanStats scan(int n, const Universe& u, int worker, int workers, Visit&& visit) {
  check_universe(n, u);
  if (workers < 1 || worker < 0 || worker >= workers) throw Error(Errc::InvalidQuery, "bad worker partition");
  switch (u.kind) {
    case UniverseKind::LabeledAll: return scan_labeled(n, worker, workers, visit);
    case UniverseKind::CanonicalAll: return CanonicalScan<Visit>(n, worker, workers, visit).run();
    case UniverseKind::Sampled: return scan_sampled(n, u, worker, workers, visit);
  }
  return {};
}

// Runs `body(worker)` on `jobs` threads (inline when jobs == 1).
template <class Body>
void fan_out(int jobs, Body&& body) {
  if (jobs <= 1) {
    body(0);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) threads.emplace_back([&body, w] { body(w); });
}

VertexSet reach_within(const Graph& g, VertexSet allowed) {
  const auto rows = g.rows();
  const VertexSet start = allowed & (~allowed + 1);
  VertexSet seen = start;
  VertexSet frontier = start;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s != 0; s &= s - 1) next |= rows[std::countr_zero(s)];
    next &= allowed;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

std::string to_string(const Universe& u) {
  switch (u.kind) {
    case UniverseKind::LabeledAll: return "labeled";
    case UniverseKind::CanonicalAll: return "canonical";
    case UniverseKind::Sampled:
      return "sampled:seed=" + std::to_string(u.seed) + ":draws=" + std::to_string(u.draws);
  }
  return "unknown";
}

ScanStats for_each_connected_graph(int n, const Universe& universe, const GraphVisitor& visitor) {
  return for_each_connected_graph(n, universe, visitor, 0, 1);
}

ScanStats for_each_connected_graph(int n, const Universe& universe, const GraphVisitor& visitor, int worker,
                                   int workers) {
  auto visit = [&visitor](const Graph& g, std::uint64_t) {
    visitor(g);
    return true;
  };
  return scan(n, universe, worker, workers, visit);
}

bool is_canonical(const Graph& g) {
  Rows rows{};
  std::copy(g.rows().begin(), g.rows().end(), rows.begin());
  MinimalCodeCheck check(rows, g.order());
  return check.degrees_sorted() && check.minimal();
}

std::set<DeltaTriple> CensusTable::keys() const {
  std::set<DeltaTriple> out;
  for (const auto& [key, entry] : entries) out.insert(key);
  return out;
}

CensusTable census(int n, const Universe& universe, int jobs) {
  check_universe(n, universe);
  jobs = std::max(1, jobs);
  std::vector<CensusTable> partial(static_cast<std::size_t>(jobs));

  fan_out(jobs, [&](int worker) {
    auto& local = partial[static_cast<std::size_t>(worker)];
    auto visit = [&local](const Graph& g, std::uint64_t key) {
      const DeltaTriple t = delta(g);
      auto [it, inserted] = local.entries.try_emplace(t, CensusEntry{0, g, key});
      auto& entry = it->second;
      ++entry.count;
      if (!inserted && key < entry.sample_key) {
        entry.sample = g;
        entry.sample_key = key;
      }
      return true;
    };
    local.stats = scan(n, universe, worker, jobs, visit);
  });

  CensusTable table;
  table.n = n;
  table.universe = universe;
  for (const auto& local : partial) {
    table.stats.candidates += local.stats.candidates;
    table.stats.visited += local.stats.visited;
    for (const auto& [key, entry] : local.entries) {
      auto [it, inserted] = table.entries.try_emplace(key, entry);
      if (inserted) continue;
      it->second.count += entry.count;
      if (entry.sample_key < it->second.sample_key) {
        it->second.sample = entry.sample;
        it->second.sample_key = entry.sample_key;
      }
    }
  }
  return table;
}

std::string to_csv(const CensusTable& table) {
  std::ostringstream out;
  out << "n,f,d,k,count,sample_graph6,universe\n";
  const std::string universe = to_string(table.universe);
  for (const auto& [t, entry] : table.entries) {
    out << table.n << ',' << t.f << ',' << t.d << ',' << t.k << ',' << entry.count << ','
        << encode_graph6(entry.sample) << ',' << universe << '\n';
  }
  return out.str();
}

int brute_force_kappa(const Graph& g) {
  const int n = g.order();
  if (n > kBruteForceMaxOrder) throw Error(Errc::UniverseTooLarge, "brute-force kappa supports n <= 10");
  if (n < 2) throw Error(Errc::Degenerate, "single-vertex graph");
  if (!is_connected(g)) throw Error(Errc::NotConnected, "graph is disconnected");

  const VertexSet all = full_set(n);
  for (int size = 1; size <= n - 2; ++size) {
    // Gosper's hack: every subset of {0..n-1} with `size` members.
    for (VertexSet cut = full_set(size); cut <= all; ) {
      const VertexSet rest = all & ~cut;
      if (reach_within(g, rest) != rest) return size;
      const VertexSet low = cut & (~cut + 1);
      const VertexSet ripple = cut + low;
      cut = (((ripple ^ cut) >> 2) / low) | ripple;
    }
  }
  return n - 1;
}

std::vector<std::string> verify_inequality_exhaustive(int n, int jobs) {
  const Universe universe = Universe::labeled();
  check_universe(n, universe);
  jobs = std::max(1, jobs);
  std::vector<std::string> violations;
  std::mutex guard;
  fan_out(jobs, [&](int worker) {
    std::vector<std::string> local;
    auto visit = [&local, n](const Graph& g, std::uint64_t) {
      if (delta(g).phi() > n + 2) local.push_back(encode_graph6(g));
      return true;
    };
    scan(n, universe, worker, jobs, visit);
    std::lock_guard lock(guard);
    violations.insert(violations.end(), local.begin(), local.end());
  });
  std::sort(violations.begin(), violations.end());
  return violations;
}

std::optional<Graph> search_triple(int n, const DeltaTriple& t, const Universe& universe) {
  std::optional<Graph> found;
  auto visit = [&](const Graph& g, std::uint64_t) {
    if (delta(g) != t) return true;
    found = g;
    return false;
  };
  scan(n, universe, 0, 1, visit);
  return found;
}

}  // namespace graphdelta
