#pragma once

#include "ktdom/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ktdom::io {

/// graph6 encoding without the optional ">>graph6<<" header and without a
/// trailing newline.
std::string write_graph6(const Graph& g);

/// Parses one graph6 string (surrounding whitespace ignored). Errors carry
/// the byte offset of the offending character.
Graph parse_graph6(std::string_view text);

/// "p edge n m" followed by one "e u v" line per edge, 1-based, newline-terminated.
std::string write_dimacs(const Graph& g);

/// Parses DIMACS edge format; "c" lines are comments. Errors carry the
/// 1-based line number.
Graph parse_dimacs(std::string_view text);

/// Splits a corpus into graph6 records: one per non-blank line, lines
/// starting with '#' ignored, ">>graph6<<" headers stripped.
std::vector<std::string> graph6_records(std::string_view text);

} // namespace ktdom::io
