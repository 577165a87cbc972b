#pragma once

#include <string>
#include <string_view>

#include "graphdelta/graph.hpp"

namespace graphdelta {

// graph6: N(n) followed by the upper adjacency triangle read column by
// column ((0,1), (0,2), (1,2), (0,3), ...), packed big-endian into 6-bit
// groups, zero padded, each group offset by 63.
std::string encode_graph6(const Graph& g);

/// Throws FormatError on anything that is not a well-formed graph6 string
/// of order 1..64 (including non-zero padding bits and trailing bytes).
Graph decode_graph6(std::string_view text);

enum class Labels { ZeroBased, OneBased };

/// `graph G { i -- j; }`, one line per vertex and one per edge.
std::string to_dot(const Graph& g, Labels labels = Labels::OneBased);

/// Compact `{"n":N,"edges":[[u,v],...]}` with u < v in lexicographic order.
std::string to_json(const Graph& g);

/// Inverse of to_json. Throws FormatError on schema violations.
Graph from_json(std::string_view text);

}  // namespace graphdelta
