#include "squad/graph_io.hpp"

#include <sstream>

namespace squad {

ParsedGraph parse_graph_file(const std::string& text) {
  std::istringstream in(text);
  std::string line, tok;
  int lineno = 0;

  bool directed = false;
  int n = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (tok == "digraph")
      directed = true;
    else if (tok != "graph")
      throw ParseError(lineno, "expected 'digraph <n>' or 'graph <n>' header");
    if (!(ls >> n) || n < 1) throw ParseError(lineno, "bad vertex count");
    if (n > kMaxVertices) throw CapacityError("vertex count exceeds 64");
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing tokens after header");
    break;
  }
  if (n < 0) throw ParseError(lineno, "missing header");

  Digraph d(n);
  UGraph g(n);
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    if (!(ls >> tok) || tok[0] == '#') continue;
    long long u, v;
    std::istringstream first(tok);
    char junk;
    if (!(first >> u) || (first >> junk) || !(ls >> v) || (ls >> tok))
      throw ParseError(lineno, "expected 'u v'");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(lineno, "vertex out of range");
    if (directed) {
      d.add_arc(static_cast<int>(u), static_cast<int>(v));
    } else {
      if (u == v) throw ParseError(lineno, "loops not allowed in graph mode");
      g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
  }
  if (directed) return d;
  return g;
}

std::string write_graph_file(const Digraph& d) {
  std::string out = "digraph " + std::to_string(d.n()) + "\n";
  for (int u = 0; u < d.n(); ++u)
    for (VertexSet m = d.out(u); m; m &= m - 1)
      out += std::to_string(u) + " " + std::to_string(first_vertex(m)) + "\n";
  return out;
}

std::string write_graph_file(const UGraph& g) {
  std::string out = "graph " + std::to_string(g.n()) + "\n";
  for (int u = 0; u < g.n(); ++u)
    for (VertexSet m = g.nbrs(u) & ~full_set(u + 1); m; m &= m - 1)
      out += std::to_string(u) + " " + std::to_string(first_vertex(m)) + "\n";
  return out;
}

}  // namespace squad
