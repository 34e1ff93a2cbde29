#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace squad {

// Vertex sets are plain 64-bit masks: bit v <=> vertex v is in the set.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

inline constexpr VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int set_size(VertexSet s) { return std::popcount(s); }

// Lowest vertex of a nonempty set.
inline int first_vertex(VertexSet s) { return std::countr_zero(s); }

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Directed graph on at most 64 vertices, one out-row and one in-row bitmask
// per vertex. Loops (v->v) are representable: bit v of out(v). The in-rows
// mirror the out-rows at all times.
class Digraph {
 public:
  explicit Digraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("digraph order must be positive");
    if (n > kMaxVertices) throw CapacityError("digraph order exceeds 64");
  }

  int n() const { return n_; }

  void add_arc(int u, int v) {
    out_[u] |= bit(v);
    in_[v] |= bit(u);
  }

  void remove_arc(int u, int v) {
    out_[u] &= ~bit(v);
    in_[v] &= ~bit(u);
  }

  bool has_arc(int u, int v) const { return (out_[u] >> v) & 1; }

  VertexSet out(int u) const { return out_[u]; }
  VertexSet in(int u) const { return in_[u]; }

  int out_degree(int u) const { return set_size(out_[u]); }
  int in_degree(int u) const { return set_size(in_[u]); }

  int arc_count() const {
    int m = 0;
    for (int u = 0; u < n_; ++u) m += set_size(out_[u]);
    return m;
  }

  VertexSet vertices() const { return full_set(n_); }

  Digraph reversed() const {
    Digraph r(n_);
    r.out_ = in_;
    r.in_ = out_;
    return r;
  }

  bool operator==(const Digraph&) const = default;

 private:
  int n_;
  std::array<VertexSet, kMaxVertices> out_{}, in_{};
};

// Undirected graph on at most 64 vertices; symmetric rows, no loops.
class UGraph {
 public:
  explicit UGraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph order must be positive");
    if (n > kMaxVertices) throw CapacityError("graph order exceeds 64");
  }

  int n() const { return n_; }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop in undirected graph");
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }

  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1; }

  VertexSet nbrs(int u) const { return rows_[u]; }
  int degree(int u) const { return set_size(rows_[u]); }

  int edge_count() const {
    int s = 0;
    for (int u = 0; u < n_; ++u) s += set_size(rows_[u]);
    return s / 2;
  }

  VertexSet vertices() const { return full_set(n_); }

  bool operator==(const UGraph&) const = default;

 private:
  int n_;
  std::array<VertexSet, kMaxVertices> rows_{};
};

enum class Dir { out, in };

bool is_strong(const Digraph& d);
bool is_connected(const UGraph& g);

// q+-set / q--set test: |s| >= 2 and every u in s shares a common
// out-neighbor (in-neighbor for Dir::in) with some v in s, v != u.
bool is_q_set(const Digraph& d, VertexSet s, Dir dir);

// For every q+-set S the pairwise common out-neighborhoods of S must union
// to at least |S| vertices, and symmetrically for q--sets. Exponential scan
// over subsets of the partnered-vertex candidate set.
bool is_s_quadrangular(const Digraph& d);

// A graph has the property iff its complete biorientation does.
bool is_s_quadrangular(const UGraph& g);

Digraph complete_biorientation(const UGraph& g);

// Forget directions, drop loops.
UGraph underlying_graph(const Digraph& d);

struct LineDigraph {
  Digraph graph;
  std::vector<std::pair<int, int>> arc_of_vertex;  // new vertex -> source arc
};

// One vertex per arc, arc (u->v) -> (x->y) iff v == x. Throws CapacityError
// when the source has more than 64 arcs, std::invalid_argument when it has
// none.
LineDigraph line_digraph(const Digraph& d);

// Strong and in-degree == out-degree everywhere.
bool is_eulerian(const Digraph& d);

// Vertex (i,j) is index i*b.n()+j; arc (i,j)->(k,l) iff i->k and j->l.
Digraph kronecker_digraph(const Digraph& a, const Digraph& b);

int max_semidegree(const Digraph& d);
int max_degree(const UGraph& g);

}  // namespace squad
