#pragma once

// Small graph builders and seeded random corpora shared across the tests.

#include <random>
#include <vector>

#include "squad/digraph.hpp"

namespace squad::testhelp {

inline Digraph cycle_digraph(int n) {
  Digraph d(n);
  for (int i = 0; i < n; ++i) d.add_arc(i, (i + 1) % n);
  return d;
}

inline Digraph path_digraph(int n) {
  Digraph d(n);
  for (int i = 0; i + 1 < n; ++i) d.add_arc(i, i + 1);
  return d;
}

inline Digraph complete_digraph(int n, bool loops) {
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (loops || i != j) d.add_arc(i, j);
  return d;
}

inline UGraph complete_graph(int n) {
  UGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline UGraph cycle_graph(int n) {
  UGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

// 0 = center; triangles {0,1,2} and {0,3,4}.
inline UGraph bowtie() {
  UGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(0, 4);
  g.add_edge(3, 4);
  return g;
}

inline bool coin(std::mt19937_64& rng, double p) {
  return double(rng() >> 11) * 0x1.0p-53 < p;
}

inline Digraph random_digraph(int n, double arc_prob, std::mt19937_64& rng,
                              bool loops = false) {
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((loops || i != j) && coin(rng, arc_prob)) d.add_arc(i, j);
  return d;
}

inline UGraph random_graph(int n, double edge_prob, std::mt19937_64& rng) {
  UGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng, edge_prob)) g.add_edge(i, j);
  return g;
}

// Cycle visits every vertex once and every consecutive pair is an arc.
inline bool valid_hamilton_cycle(const Digraph& d, const std::vector<int>& cyc) {
  if (static_cast<int>(cyc.size()) != d.n()) return false;
  VertexSet seen = 0;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
    if (u == v || (seen & bit(u)) || !d.has_arc(u, v)) return false;
    seen |= bit(u);
  }
  return seen == d.vertices();
}

inline bool valid_hamilton_cycle(const UGraph& g, const std::vector<int>& cyc) {
  if (static_cast<int>(cyc.size()) != g.n() || g.n() < 3) return false;
  VertexSet seen = 0;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
    if (u == v || (seen & bit(u)) || !g.has_edge(u, v)) return false;
    seen |= bit(u);
  }
  return seen == g.vertices();
}

}  // namespace squad::testhelp
