#include "graphdelta/graph_io.hpp"

#include <json.hpp>
#include <sstream>
#include <vector>

#include "graphdelta/error.hpp"

namespace graphdelta {

namespace {

constexpr int kOffset = 63;

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kOffset));
  }

  int acc = 0;
  int filled = 0;
  const auto rows = g.rows();
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>((rows[i] >> j) & 1U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

Graph decode_graph6(std::string_view text) {
  auto chunk = [&](std::size_t pos) -> int {
    if (pos >= text.size()) throw Error(Errc::FormatError, "graph6 string truncated");
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kOffset || c > kOffset + 63) throw Error(Errc::FormatError, "byte outside graph6 range at offset " + std::to_string(pos));
    return c - kOffset;
  };

  std::size_t pos = 0;
  int n = 0;
  if (!text.empty() && text[0] == '~') {
    if (text.size() > 1 && text[1] == '~') throw Error(Errc::FormatError, "order exceeds 64");
    n = (chunk(1) << 12) | (chunk(2) << 6) | chunk(3);
    if (n <= 62) throw Error(Errc::FormatError, "non-canonical long-form order");
    pos = 4;
  } else {
    n = chunk(0);
    pos = 1;
  }
  if (n < 1 || n > kMaxOrder) throw Error(Errc::FormatError, "order " + std::to_string(n) + " outside [1, 64]");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() != pos + groups) throw Error(Errc::FormatError, "graph6 length does not match order");

  std::vector<Graph::Row> rows(n, 0);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int group = chunk(pos + bit / 6);
      if ((group >> (5 - bit % 6)) & 1) {
        rows[i] |= singleton(j);
        rows[j] |= singleton(i);
      }
    }
  }
  for (; bit < groups * 6; ++bit) {
    if ((chunk(pos + bit / 6) >> (5 - bit % 6)) & 1) throw Error(Errc::FormatError, "non-zero padding bits");
  }
  return Graph::from_rows(rows);
}

std::string to_dot(const Graph& g, Labels labels) {
  const int base = labels == Labels::OneBased ? 1 : 0;
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v + base << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u + base << " -- " << v + base << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.order();
  doc["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) doc["edges"].push_back({u, v});
  return doc.dump();
}

Graph from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::FormatError, e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") || !doc["n"].is_number_integer() ||
      !doc["edges"].is_array()) {
    throw Error(Errc::FormatError, R"(expected {"n": int, "edges": [[u, v], ...]})");
  }
  const int n = doc["n"].get<int>();
  if (n < 1 || n > kMaxOrder) throw Error(Errc::FormatError, "order " + std::to_string(n) + " outside [1, 64]");

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw Error(Errc::FormatError, "edge entries must be [u, v] integer pairs");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return Graph::from_edges(n, edges);
  } catch (const Error& e) {
    throw Error(Errc::FormatError, e.what());
  }
}

}  // namespace graphdelta
