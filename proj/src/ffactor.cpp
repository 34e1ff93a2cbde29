#include "squad/ffactor.hpp"

#include <algorithm>

#include "squad/cycle_factor.hpp"

namespace squad {

namespace {

constexpr int kPartitionCap = 14;  // 3^n pairs scanned exhaustively

// Connected components of the induced subgraph on `rem`, emitted as masks.
template <typename Fn>
void for_each_component(const UGraph& g, VertexSet rem, Fn&& fn) {
  while (rem) {
    VertexSet comp = bit(first_vertex(rem)), frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet m = frontier; m; m &= m - 1)
        next |= g.nbrs(first_vertex(m));
      frontier = next & rem & ~comp;
      comp |= frontier;
    }
    fn(comp);
    rem &= ~comp;
  }
}

int edges_into(const UGraph& g, VertexSet from, VertexSet to) {
  int e = 0;
  for (VertexSet m = from; m; m &= m - 1)
    e += set_size(g.nbrs(first_vertex(m)) & to);
  return e;
}

int edges_within(const UGraph& g, VertexSet x) {
  return edges_into(g, x, x) / 2;
}

}  // namespace

int odd_component_count(const UGraph& g, VertexSet s, VertexSet t,
                        const FFactorSpec& f) {
  if (s & t) throw std::invalid_argument("S and T must be disjoint");
  VertexSet rem = g.vertices() & ~s & ~t;
  int count = 0;
  for_each_component(g, rem, [&](VertexSet comp) {
    int parity = 0;
    for (VertexSet m = comp; m; m &= m - 1) {
      int v = first_vertex(m);
      parity ^= (set_size(g.nbrs(v) & t) + f(v)) & 1;
    }
    count += parity;
  });
  return count;
}

namespace {

struct TutteBest {
  bool found = false;
  long long deficit = 0;
  int tsize = 0;
  VertexSet t = 0, s = 0;
  long long lhs = 0, rhs = 0;

  // Total order: larger deficit, then smaller |T|, then smaller masks.
  bool better_than(const TutteBest& o) const {
    if (!o.found) return found;
    if (!found) return false;
    if (deficit != o.deficit) return deficit > o.deficit;
    if (tsize != o.tsize) return tsize < o.tsize;
    if (t != o.t) return t < o.t;
    return s < o.s;
  }
};

}  // namespace

std::optional<TutteViolator> tutte_check(const UGraph& g,
                                         const FFactorSpec& f) {
  const int n = g.n();
  if (n > kPartitionCap)
    throw CapacityError("tutte_check scans 3^n pairs; capped at n = 14");
  if (static_cast<int>(f.f.size()) != n)
    throw std::invalid_argument("degree spec size mismatch");
  for (int v = 0; v < n; ++v)
    if (f(v) < 1) throw std::invalid_argument("degree targets must be >= 1");

  const VertexSet all = g.vertices();
  TutteBest best;

#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    TutteBest local;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 16) nowait
#endif
    for (long long sm = 0; sm < (1LL << n); ++sm) {
      VertexSet s = static_cast<VertexSet>(sm);
      long long rhs = 0;
      for (VertexSet m = s; m; m &= m - 1) rhs += f(first_vertex(m));
      VertexSet comp = all & ~s;
      for (VertexSet t = comp;; t = (t - 1) & comp) {
        long long lhs = odd_component_count(g, s, t, f);
        for (VertexSet m = t; m; m &= m - 1) {
          int v = first_vertex(m);
          lhs += f(v) - set_size(g.nbrs(v) & ~s);
        }
        if (lhs > rhs) {
          TutteBest cand{true, lhs - rhs, set_size(t), t, s, lhs, rhs};
          if (cand.better_than(local)) local = cand;
        }
        if (!t) break;
      }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    if (local.better_than(best)) best = local;
  }

  if (!best.found) return std::nullopt;
  return TutteViolator{best.s, best.t, best.lhs, best.rhs};
}

std::optional<EdgeList> find_f_factor(const UGraph& g, const FFactorSpec& f) {
  const int n = g.n();
  if (static_cast<int>(f.f.size()) != n)
    throw std::invalid_argument("degree spec size mismatch");
  long long fsum = 0;
  for (int v = 0; v < n; ++v) {
    if (f(v) < 1) throw std::invalid_argument("degree targets must be >= 1");
    fsum += f(v);
  }
  if (fsum & 1) return std::nullopt;

  EdgeList edges;
  for (int u = 0; u < n; ++u)
    for (VertexSet m = g.nbrs(u) & ~full_set(u + 1); m; m &= m - 1)
      edges.emplace_back(u, first_vertex(m));

  std::vector<int> need(f.f), avail(n, 0);
  for (auto [u, v] : edges) {
    ++avail[u];
    ++avail[v];
  }
  for (int v = 0; v < n; ++v)
    if (need[v] > avail[v]) return std::nullopt;

  EdgeList chosen;
  auto rec = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == edges.size()) return true;  // avail == 0 forces need == 0
    auto [u, v] = edges[idx];
    --avail[u];
    --avail[v];
    if (need[u] > 0 && need[v] > 0) {
      --need[u];
      --need[v];
      if (need[u] <= avail[u] && need[v] <= avail[v]) {
        chosen.push_back(edges[idx]);
        if (self(self, idx + 1)) return true;
        chosen.pop_back();
      }
      ++need[u];
      ++need[v];
    }
    if (need[u] <= avail[u] && need[v] <= avail[v] && self(self, idx + 1))
      return true;
    ++avail[u];
    ++avail[v];
    return false;
  };
  if (rec(rec, 0)) return chosen;
  return std::nullopt;
}

std::optional<EdgeList> find_two_factor(const UGraph& g) {
  return find_f_factor(g, FFactorSpec::uniform(g.n(), 2));
}

namespace {

struct PartitionBest {
  bool found = false;
  int w2 = 0;  // 2*w, kept doubled to stay integral mid-scan
  int tsize = 0, ssize = 0, oc = 0;
  VertexSet t = 0, s = 0;

  bool better_than(const PartitionBest& o) const {
    if (!o.found) return found;
    if (!found) return false;
    if (w2 != o.w2) return w2 > o.w2;
    if (tsize != o.tsize) return tsize < o.tsize;
    if (ssize != o.ssize) return ssize > o.ssize;
    if (oc != o.oc) return oc < o.oc;
    if (t != o.t) return t < o.t;
    return s < o.s;
  }
};

int odd_edge_components(const UGraph& g, VertexSet rem, VertexSet t,
                        VertexSet* odd_union = nullptr) {
  int count = 0;
  for_each_component(g, rem, [&](VertexSet comp) {
    if (edges_into(g, comp, t) & 1) {
      ++count;
      if (odd_union) *odd_union |= comp;
    }
  });
  return count;
}

}  // namespace

PartitionResult build_partition(const UGraph& g) {
  const int n = g.n();
  if (n > kPartitionCap) return PartitionFailure::capacity;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2) return PartitionFailure::min_degree;
  if (find_two_factor(g)) return PartitionFailure::has_two_factor;

  const VertexSet all = g.vertices();
  PartitionBest best;

#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    PartitionBest local;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 16) nowait
#endif
    for (long long sm = 0; sm < (1LL << n); ++sm) {
      VertexSet s = static_cast<VertexSet>(sm);
      VertexSet comp = all & ~s;
      for (VertexSet t = comp;; t = (t - 1) & comp) {
        VertexSet rem = comp & ~t;
        int oc = odd_edge_components(g, rem, t);
        int w2 = 2 * (set_size(t) - set_size(s) - edges_within(g, t)) -
                 (edges_into(g, t, rem) - oc);
        PartitionBest cand{true, w2, set_size(t), set_size(s), oc, t, s};
        if (cand.better_than(local)) local = cand;
        if (!t) break;
      }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    if (local.better_than(best)) best = local;
  }

  VertexSet rem = all & ~best.s & ~best.t, odd = 0;
  int oc = odd_edge_components(g, rem, best.t, &odd);
  TuttePartition p;
  p.s = best.s;
  p.t = best.t;
  p.o = odd;
  p.r = rem & ~odd;
  p.w = best.w2 / 2;
  p.oc = oc;
  p.e_to = edges_into(g, best.t, odd);
  return p;
}

namespace {

std::string vertex_list(VertexSet s) {
  std::string out = "{";
  bool sep = false;
  for (VertexSet m = s; m; m &= m - 1) {
    if (sep) out += ',';
    out += std::to_string(first_vertex(m));
    sep = true;
  }
  return out + "}";
}

}  // namespace

std::vector<PartitionViolation> verify_partition(const UGraph& g,
                                                 const TuttePartition& p) {
  const VertexSet all = g.vertices();
  if ((p.s | p.t | p.o | p.r) != all ||
      set_size(p.s) + set_size(p.t) + set_size(p.o) + set_size(p.r) !=
          g.n())
    throw std::invalid_argument("S,T,O,R do not partition the vertex set");

  std::vector<PartitionViolation> out;

  // (1) T independent
  for (VertexSet m = p.t; m; m &= m - 1) {
    int u = first_vertex(m);
    if (VertexSet a = g.nbrs(u) & p.t & ~full_set(u + 1); a) {
      out.push_back({1, "T vertices " + std::to_string(u) + " and " +
                            std::to_string(first_vertex(a)) + " are adjacent"});
      break;
    }
  }

  // (2) no edges between R and O u T
  for (VertexSet m = p.r; m; m &= m - 1) {
    int u = first_vertex(m);
    if (VertexSet a = g.nbrs(u) & (p.o | p.t); a) {
      out.push_back({2, "edge " + std::to_string(u) + "-" +
                            std::to_string(first_vertex(a)) + " leaves R"});
      break;
    }
  }

  // (3) every component of G<O> has an odd edge count into T
  // (4) no t in T sends two edges into one component of G<O>
  bool bad3 = false, bad4 = false;
  for_each_component(g, p.o, [&](VertexSet comp) {
    if (!bad3 && !(edges_into(g, comp, p.t) & 1)) {
      bad3 = true;
      out.push_back({3, "component " + vertex_list(comp) +
                            " has an even edge count into T"});
    }
    if (!bad4)
      for (VertexSet m = p.t; m; m &= m - 1) {
        int t = first_vertex(m);
        if (set_size(g.nbrs(t) & comp) >= 2) {
          bad4 = true;
          out.push_back({4, "T vertex " + std::to_string(t) +
                                " has two edges into component " +
                                vertex_list(comp)});
          break;
        }
      }
  });
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.property < b.property; });

  // (5) every o in O has at most one edge into T
  for (VertexSet m = p.o; m; m &= m - 1) {
    int o = first_vertex(m);
    if (set_size(g.nbrs(o) & p.t) > 1) {
      out.push_back({5, "O vertex " + std::to_string(o) +
                            " has more than one edge into T"});
      break;
    }
  }

  // (6) no edge ot with e(t,S) = 0 and e(o,O) = 0
  bool bad6 = false;
  for (VertexSet m = p.t; m && !bad6; m &= m - 1) {
    int t = first_vertex(m);
    if (g.nbrs(t) & p.s) continue;
    for (VertexSet mo = g.nbrs(t) & p.o; mo; mo &= mo - 1) {
      int o = first_vertex(mo);
      if (!(g.nbrs(o) & p.o)) {
        out.push_back({6, "edge " + std::to_string(o) + "-" +
                              std::to_string(t) +
                              " with e(t,S)=0 and e(o,O)=0"});
        bad6 = true;
        break;
      }
    }
  }

  // (7) |T| - |S| - (e(T,O) - oc(S,T)) / 2 > 0
  VertexSet rem = all & ~p.s & ~p.t;
  int oc = odd_edge_components(g, rem, p.t);
  int lhs2 = 2 * (set_size(p.t) - set_size(p.s)) -
             (edges_into(g, p.t, p.o) - oc);
  if (lhs2 <= 0)
    out.push_back({7, "objective value " + std::to_string(lhs2) + "/2 <= 0"});

  return out;
}

std::optional<std::vector<int>> hamilton_cycle_graph(const UGraph& g) {
  if (g.n() < 3)
    throw std::invalid_argument("undirected hamilton cycles require n >= 3");
  return hamilton_cycle(complete_biorientation(g));
}

}  // namespace squad
