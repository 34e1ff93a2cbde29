#include "squad/digraph.hpp"

#include <algorithm>

namespace squad {

namespace {

// Vertices reachable from `seed` by nonempty paths along `row`.
VertexSet closure(const Digraph& d, VertexSet seed, Dir dir) {
  VertexSet reach = 0, frontier = seed;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet m = frontier; m; m &= m - 1) {
      int v = first_vertex(m);
      next |= (dir == Dir::out) ? d.out(v) : d.in(v);
    }
    frontier = next & ~reach;
    reach |= next;
  }
  return reach;
}

}  // namespace

bool is_strong(const Digraph& d) {
  if (d.n() == 1) return true;
  VertexSet all = d.vertices();
  // 0 reaches everyone and everyone reaches 0 <=> strong.
  if ((closure(d, bit(0), Dir::out) | bit(0)) != all) return false;
  return (closure(d, bit(0), Dir::in) | bit(0)) == all;
}

bool is_connected(const UGraph& g) {
  VertexSet reach = bit(0), frontier = bit(0);
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet m = frontier; m; m &= m - 1) next |= g.nbrs(first_vertex(m));
    frontier = next & ~reach;
    reach |= next;
  }
  return reach == g.vertices();
}

bool is_q_set(const Digraph& d, VertexSet s, Dir dir) {
  if (set_size(s) < 2) return false;
  for (VertexSet m = s; m; m &= m - 1) {
    int u = first_vertex(m);
    VertexSet row_u = (dir == Dir::out) ? d.out(u) : d.in(u);
    bool partnered = false;
    for (VertexSet p = s & ~bit(u); p; p &= p - 1) {
      int v = first_vertex(p);
      if (row_u & ((dir == Dir::out) ? d.out(v) : d.in(v))) {
        partnered = true;
        break;
      }
    }
    if (!partnered) return false;
  }
  return true;
}

namespace {

bool quadrangular_side(const Digraph& d, Dir dir) {
  const int n = d.n();
  std::array<VertexSet, kMaxVertices> row;
  for (int u = 0; u < n; ++u) row[u] = (dir == Dir::out) ? d.out(u) : d.in(u);

  // partner[u]: vertices v != u with row[u] & row[v] != 0. Only subsets of
  // the partnered candidate set can be q-sets.
  std::array<VertexSet, kMaxVertices> partner{};
  VertexSet cand = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (row[u] & row[v]) {
        partner[u] |= bit(v);
        partner[v] |= bit(u);
        cand |= bit(u) | bit(v);
      }
  if (set_size(cand) < 2) return true;

  for (VertexSet s = cand;; s = (s - 1) & cand) {
    if (set_size(s) >= 2) {
      bool qset = true;
      for (VertexSet m = s; m; m &= m - 1)
        if (!(partner[first_vertex(m)] & s)) {
          qset = false;
          break;
        }
      if (qset) {
        VertexSet common = 0;
        for (VertexSet m = s; m; m &= m - 1) {
          int u = first_vertex(m);
          for (VertexSet p = m & (m - 1); p; p &= p - 1)
            common |= row[u] & row[first_vertex(p)];
        }
        if (set_size(common) < set_size(s)) return false;
      }
    }
    if (s == 0) break;
  }
  return true;
}

}  // namespace

bool is_s_quadrangular(const Digraph& d) {
  return quadrangular_side(d, Dir::out) && quadrangular_side(d, Dir::in);
}

bool is_s_quadrangular(const UGraph& g) {
  return is_s_quadrangular(complete_biorientation(g));
}

Digraph complete_biorientation(const UGraph& g) {
  Digraph d(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (VertexSet m = g.nbrs(u); m; m &= m - 1) d.add_arc(u, first_vertex(m));
  return d;
}

UGraph underlying_graph(const Digraph& d) {
  UGraph g(d.n());
  for (int u = 0; u < d.n(); ++u)
    for (VertexSet m = (d.out(u) | d.in(u)) & ~bit(u); m; m &= m - 1)
      g.add_edge(u, first_vertex(m));
  return g;
}

LineDigraph line_digraph(const Digraph& d) {
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < d.n(); ++u)
    for (VertexSet m = d.out(u); m; m &= m - 1)
      arcs.emplace_back(u, first_vertex(m));
  if (arcs.empty()) throw std::invalid_argument("line digraph of an arcless digraph");
  if (arcs.size() > kMaxVertices)
    throw CapacityError("line digraph exceeds 64 vertices");

  Digraph l(static_cast<int>(arcs.size()));
  for (std::size_t a = 0; a < arcs.size(); ++a)
    for (std::size_t b = 0; b < arcs.size(); ++b)
      if (arcs[a].second == arcs[b].first)
        l.add_arc(static_cast<int>(a), static_cast<int>(b));
  return {std::move(l), std::move(arcs)};
}

bool is_eulerian(const Digraph& d) {
  for (int v = 0; v < d.n(); ++v)
    if (d.out_degree(v) != d.in_degree(v)) return false;
  return is_strong(d);
}

Digraph kronecker_digraph(const Digraph& a, const Digraph& b) {
  if (a.n() * b.n() > kMaxVertices)
    throw CapacityError("kronecker product exceeds 64 vertices");
  Digraph p(a.n() * b.n());
  for (int i = 0; i < a.n(); ++i)
    for (VertexSet mk = a.out(i); mk; mk &= mk - 1) {
      int k = first_vertex(mk);
      for (int j = 0; j < b.n(); ++j)
        for (VertexSet ml = b.out(j); ml; ml &= ml - 1)
          p.add_arc(i * b.n() + j, k * b.n() + first_vertex(ml));
    }
  return p;
}

int max_semidegree(const Digraph& d) {
  int m = 0;
  for (int v = 0; v < d.n(); ++v) {
    m = std::max(m, d.out_degree(v));
    m = std::max(m, d.in_degree(v));
  }
  return m;
}

int max_degree(const UGraph& g) {
  int m = 0;
  for (int v = 0; v < g.n(); ++v) m = std::max(m, g.degree(v));
  return m;
}

}  // namespace squad
