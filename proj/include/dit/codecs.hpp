#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dit/graph.hpp"

namespace dit {

inline constexpr int kGraph6MaxOrder = 62;

/// Single-byte-header graph6 (n <= 62). Throws InputError above that.
std::string encode_graph6(const Graph& g);
/// Throws InputError on bytes outside 63..126, truncated or overlong bit
/// fields, nonzero padding and multi-byte headers.
Graph decode_graph6(std::string_view text);
/// One graph per non-empty line; errors carry the line number.
std::vector<Graph> decode_graph6_lines(std::string_view text);

/// First non-comment line: n. Each further non-comment line: "u v".
/// Lines starting with '#' and blank lines are ignored. Errors carry the line number.
Graph read_edgelist(std::string_view text);
/// Normalized document: n, then the edges in ascending order.
std::string write_edgelist(const Graph& g);

}  // namespace dit
