#pragma once

#include <string>
#include <string_view>

#include "domstab/graph.hpp"

namespace domstab {

/// Parses one graph6 string (no trailing newline). An optional ">>graph6<<"
/// header is accepted. Throws ParseError carrying the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Encodes g in graph6. Orders up to 62 use the one-byte size prefix, up to
/// 258047 the 4-byte form, beyond that the 8-byte form.
std::string write_graph6(const Graph& g);

/// Graphviz text: one `graph { ... }` block, a line per vertex, then a line
/// per edge `u -- v;` sorted by (min, max).
std::string write_dot(const Graph& g);

} // namespace domstab
