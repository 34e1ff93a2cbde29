#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "squad/digraph.hpp"

namespace squad {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what),
        line(line_) {}
};

using ParsedGraph = std::variant<Digraph, UGraph>;

// Grammar: header "digraph <n>" or "graph <n>"; one "u v" pair per line;
// '#' starts a comment line; blank lines ignored. In graph mode u == v is an
// error and duplicate/reversed pairs collapse to one edge; in digraph mode
// "u u" is a loop.
ParsedGraph parse_graph_file(const std::string& text);

// Normal form: header, then arcs (tail-major) / edges (u < v) ascending,
// one per line. parse -> write is idempotent after the first round.
std::string write_graph_file(const Digraph& d);
std::string write_graph_file(const UGraph& g);

}  // namespace squad
