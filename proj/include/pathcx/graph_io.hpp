#pragma once

#include <string>
#include <string_view>

#include "pathcx/digraph.hpp"

namespace pathcx {

/// Parses the line-oriented graph format:
///
///     # comment
///     vertex <id>
///     s <id>
///     t <id>
///     edge <edge-id> <source-id> <target-id>
///
/// Ids are non-whitespace tokens; blank lines are ignored; directives may
/// appear in any order. Edge ids are assigned in file order. Throws
/// ParseError (with line number) on unknown directives, wrong arity,
/// duplicate ids, undeclared vertices, and missing or repeated s/t.
Digraph parse_graph(std::string_view text);

/// Reads and parses a file; throws InputError if it cannot be opened.
Digraph load_graph(const std::string& path);

/// Writes g in the format accepted by parse_graph. Surviving vertices and
/// edges appear in id order, so parse_graph(serialize_graph(g)) renumbers
/// ids densely but preserves names and structure.
std::string serialize_graph(const Digraph& g);

/// `{a,b,c}` using edge names, members in id order; `{}` for the empty set.
std::string format_edge_set(const Digraph& g, EdgeSet edges);

}  // namespace pathcx
