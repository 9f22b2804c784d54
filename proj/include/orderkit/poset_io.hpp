#pragma once

#include <string>
#include <string_view>

#include "orderkit/poset.hpp"

namespace orderkit {

/// Parses the line-oriented poset format:
///
///   # comment
///   poset <name>            (optional)
///   elements: <label> ...   (exactly once)
///   cover <x> <y>           (x is covered by y; any number)
///
/// Throws SyntaxError (with line number), UnknownLabel or CycleError.
FinitePoset parse_poset(std::string_view text);

/// Writes `p` in canonical element order with its Hasse covers. Parsing the
/// result yields a poset isomorphic to `p`, equal to it when `p` is already
/// canonically ordered.
std::string emit_poset(const FinitePoset& p);

/// Hasse diagram as a DOT digraph (rankdir=BT, edges from lower to upper
/// cover), nodes in canonical order, one edge per line.
std::string export_dot(const FinitePoset& p);

}  // namespace orderkit
