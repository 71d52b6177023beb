#ifndef TIDOM_DIGRAPH_IO_HPP
#define TIDOM_DIGRAPH_IO_HPP

#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "tidom/digraph.hpp"
#include "tidom/solver.hpp"

namespace tidom {

/**
 * Plain-text digraph format:
 *
 *     # optional comment lines start with '#'
 *     n m
 *     u v        (m lines, 0-based tail and head)
 *
 * Blank lines are ignored. Malformed headers, wrong arc counts, out-of-range
 * endpoints, self-loops and duplicate arcs raise ParseError with the 1-based
 * line number.
 */
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph(std::string_view text);

/// Canonical text: header then arcs in (tail, head) order, newline-terminated.
std::string format_digraph(const Digraph& d);

/// Digraph text followed by a "# labeling ..." or "# set ..." comment line.
/// The result parses as a digraph file on its own.
std::string format_counterexample(const Digraph& d, const Witness& w);

struct Counterexample {
    Digraph digraph;
    std::optional<Witness> witness;
};

Counterexample parse_counterexample(std::string_view text);

}  // namespace tidom

#endif
