#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "graphdelta/enumeration.hpp"
#include "graphdelta/error.hpp"
#include "graphdelta/graph_io.hpp"
#include "graphdelta/invariants.hpp"
#include "graphdelta/realizability.hpp"

namespace graphdelta::cli {

namespace {

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::FormatError:
    case Errc::InvalidOrder:
    case Errc::SelfLoop:
    case Errc::BadVertex:
    case Errc::EmptySelection:
    case Errc::InvalidQuery: return kParseError;
    case Errc::NotConnected:
    case Errc::Degenerate: return kDisconnected;
    case Errc::OutOfTheoremRange:
    case Errc::UniverseTooLarge: return kOutOfRange;
    case Errc::ConstructionMismatch: return kMismatch;
    case Errc::NotRealizable:
    case Errc::AdjacentPair:
    case Errc::SamePair: return kInfeasible;
  }
  return kParseError;
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

// A literal graph6 / JSON string, or a file holding either.
Graph read_graph(const std::string& input) {
  std::string text = input;
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream file(input);
    std::stringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  text = trim(text);
  if (!text.empty() && text.front() == '{') return from_json(text);
  return decode_graph6(text);
}

std::string join_one_based(const std::vector<VertexId>& vs) {
  if (vs.empty()) return "-";
  std::string out;
  for (VertexId v : vs) out += (out.empty() ? "" : " ") + std::to_string(v + 1);
  return out;
}

struct Options {
  std::string input;
  int n = 0;
  int f = 0;
  int d = 0;
  int k = 0;
  std::string format = "graph6";
  bool recipe = false;
  bool zero_based = false;
  std::string mode = "canonical";
  std::uint64_t seed = 1;
  std::uint64_t draws = 10000;
  std::string out_path;
  int jobs = 1;
  int n_lo = 8;
  int n_hi = 14;
};

int cmd_analyze(const Options& o, std::ostream& out) {
  const Graph g = read_graph(o.input);
  const AnalysisReport r = analyze(g);
  out << "n=" << g.order() << " f=" << r.delta.f << " d=" << r.delta.d << " k=" << r.delta.k << " phi=" << r.phi
      << '\n';
  out << "free: " << join_one_based(r.free_set) << '\n';
  if (r.complete) out << "note: complete graph (kappa = n - 1 by convention)\n";
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const Query q{o.n, o.f, o.d, o.k};
  if (q.n < kTheoremMinOrder) {
    err << "n = " << q.n << " is below the characterised range n >= 8; "
        << "use `graphdelta census " << q.n << "` to inspect small orders\n";
    return kOutOfRange;
  }
  const FeasibilityVerdict v = feasible(q);
  out << (v.feasible ? "FEASIBLE " : "INFEASIBLE ") << to_string(v.clause) << '\n';
  if (v.bound_detail) out << "bound=" << *v.bound_detail << '\n';
  return v.feasible ? kOk : kInfeasible;
}

int cmd_build(const Options& o, std::ostream& out) {
  const Witness w = construct_witness(Query{o.n, o.f, o.d, o.k});
  if (o.format == "dot") {
    out << to_dot(w.graph, o.zero_based ? Labels::ZeroBased : Labels::OneBased);
  } else if (o.format == "json") {
    out << to_json(w.graph) << '\n';
  } else {
    out << encode_graph6(w.graph) << '\n';
  }
  if (o.recipe) out << to_text(w.recipe);
  return kOk;
}

Universe parse_mode(const Options& o) {
  if (o.mode == "labeled") return Universe::labeled();
  if (o.mode == "sampled") return Universe::sampled(o.seed, o.draws);
  return Universe::canonical();
}

int cmd_census(const Options& o, std::ostream& out) {
  const CensusTable table = census(o.n, parse_mode(o), o.jobs);
  const std::string csv = to_csv(table);
  if (o.out_path.empty()) {
    out << csv;
  } else {
    std::ofstream file(o.out_path);
    if (!file) throw Error(Errc::FormatError, "cannot write " + o.out_path);
    file << csv;
  }
  return kOk;
}

int cmd_verify_range(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n_lo < kTheoremMinOrder || o.n_hi < o.n_lo || o.n_hi > kMaxOrder) {
    err << "verify-range needs 8 <= n_lo <= n_hi <= 64\n";
    return kOutOfRange;
  }
  std::vector<Query> queries;
  for (int n = o.n_lo; n <= o.n_hi; ++n) {
    for (int f = 0; f <= n; ++f) {
      for (int d = 2; f + d + 1 <= n + 2; ++d) {
        for (int k = 1; f + d + k <= n + 2; ++k) {
          if (feasible(Query{n, f, d, k}).feasible) queries.push_back(Query{n, f, d, k});
        }
      }
    }
  }

  std::atomic<std::size_t> next{0};
  std::mutex guard;
  std::vector<std::string> failures;
  auto worker = [&] {
    for (std::size_t i = next++; i < queries.size(); i = next++) {
      try {
        construct_witness(queries[i]);
      } catch (const Error& e) {
        std::lock_guard lock(guard);
        failures.push_back(e.what());
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int j = 1; j < o.jobs; ++j) pool.emplace_back(worker);
    worker();
  }

  std::sort(failures.begin(), failures.end());
  for (const auto& f : failures) err << f << '\n';
  out << "n=" << o.n_lo << ".." << o.n_hi << ": checked " << queries.size() << " feasible tuples, "
      << failures.size() << " mismatches\n";
  return failures.empty() ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free vertices, diameter and vertex connectivity of finite simple graphs"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "Print n, f, d, k, phi and the free vertices of a graph");
  analyze_cmd->add_option("input", o.input, "graph6 string, JSON document, or a file holding either")->required();

  auto add_tuple = [&o](CLI::App* cmd) {
    cmd->add_option("n", o.n, "vertex count")->required();
    cmd->add_option("f", o.f, "free vertices")->required();
    cmd->add_option("d", o.d, "diameter")->required();
    cmd->add_option("k", o.k, "vertex connectivity")->required();
  };
  auto* check_cmd = app.add_subcommand("check", "Decide whether (n, f, d, k) is realizable (n >= 8)");
  add_tuple(check_cmd);

  auto* build_cmd = app.add_subcommand("build", "Construct and verify a witness graph for (n, f, d, k)");
  add_tuple(build_cmd);
  build_cmd->add_option("--format", o.format, "graph6, dot or json")->check(CLI::IsMember({"graph6", "dot", "json"}));
  build_cmd->add_flag("--recipe", o.recipe, "also print the construction steps (1-based labels)");
  build_cmd->add_flag("--zero-based", o.zero_based, "use 0-based labels in DOT output");

  auto* census_cmd = app.add_subcommand("census", "delta-census of all connected non-complete graphs on n vertices");
  census_cmd->add_option("n", o.n, "vertex count")->required();
  census_cmd->add_option("--mode", o.mode, "labeled (n <= 7), canonical (n <= 8) or sampled")
      ->check(CLI::IsMember({"labeled", "canonical", "sampled"}));
  census_cmd->add_option("--seed", o.seed, "seed for --mode=sampled");
  census_cmd->add_option("--draws", o.draws, "sample size for --mode=sampled");
  census_cmd->add_option("--out", o.out_path, "write CSV here instead of stdout");
  census_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify-range", "Build and verify a witness for every feasible tuple");
  verify_cmd->add_option("n_lo", o.n_lo, "smallest n (>= 8)")->required();
  verify_cmd->add_option("n_hi", o.n_hi, "largest n")->required();
  verify_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(o, out);
    if (*check_cmd) return cmd_check(o, out, err);
    if (*build_cmd) return cmd_build(o, out);
    if (*census_cmd) return cmd_census(o, out);
    if (*verify_cmd) return cmd_verify_range(o, out, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kParseError;
}

}  // namespace graphdelta::cli
