#include "squad/cycle_factor.hpp"

#include <algorithm>
#include <unordered_map>

namespace squad {

CycleFactor CycleFactor::from_cycles(int n, std::vector<std::vector<int>> cyc) {
  CycleFactor f;
  f.cycles = std::move(cyc);
  f.succ.assign(n, -1);
  f.pred.assign(n, -1);
  f.cycle_index.assign(n, -1);
  for (int c = 0; c < f.cycle_count(); ++c) {
    const auto& cs = f.cycles[c];
    const int k = static_cast<int>(cs.size());
    for (int i = 0; i < k; ++i) {
      int u = cs[i], v = cs[(i + 1) % k];
      f.succ[u] = v;
      f.pred[v] = u;
      f.cycle_index[u] = c;
    }
  }
  return f;
}

bool CycleFactor::valid(const Digraph& d) const {
  const int n = d.n();
  if (static_cast<int>(succ.size()) != n) return false;
  VertexSet covered = 0;
  for (int c = 0; c < cycle_count(); ++c) {
    const auto& cs = cycles[c];
    if (cs.size() < 2) return false;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      int u = cs[i], v = cs[(i + 1) % cs.size()];
      if (u < 0 || u >= n || (covered & bit(u))) return false;
      covered |= bit(u);
      if (u == v || !d.has_arc(u, v)) return false;
      if (succ[u] != v || pred[v] != u || cycle_index[u] != c) return false;
    }
  }
  return covered == d.vertices();
}

namespace {

// Loopless out-row: arcs that can lie on a cycle.
inline VertexSet cyc_out(const Digraph& d, int u) { return d.out(u) & ~bit(u); }
inline VertexSet cyc_in(const Digraph& d, int u) { return d.in(u) & ~bit(u); }

bool kuhn_augment(const Digraph& d, int u, VertexSet& visited,
                  std::vector<int>& match_l, std::vector<int>& match_r) {
  for (VertexSet m = cyc_out(d, u) & ~visited; m; m &= m - 1) {
    int v = first_vertex(m);
    visited |= bit(v);
    if (match_r[v] < 0 || kuhn_augment(d, match_r[v], visited, match_l, match_r)) {
      match_l[u] = v;
      match_r[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

FactorResult find_cycle_factor(const Digraph& d) {
  const int n = d.n();
  if (n < 2) throw std::invalid_argument("cycle factors require n >= 2");

  std::vector<int> match_l(n, -1), match_r(n, -1);
  int matched = 0;
  for (int u = 0; u < n; ++u) {
    VertexSet visited = 0;
    if (kuhn_augment(d, u, visited, match_l, match_r)) ++matched;
  }

  if (matched == n) {
    // succ = match gives a loop-free permutation; its orbits are the cycles.
    VertexSet seen = 0;
    std::vector<std::vector<int>> cycles;
    for (int s = 0; s < n; ++s) {
      if (seen & bit(s)) continue;
      std::vector<int> cyc;
      int v = s;
      do {
        cyc.push_back(v);
        seen |= bit(v);
        v = match_l[v];
      } while (v != s);
      cycles.push_back(std::move(cyc));
    }
    return CycleFactor::from_cycles(n, std::move(cycles));
  }

  // Alternating reachability from unmatched tails; the reached tail set X
  // has |N+(X)| = |X| - deficiency.
  VertexSet lreach = 0, rreach = 0;
  for (int u = 0; u < n; ++u)
    if (match_l[u] < 0) lreach |= bit(u);
  for (;;) {
    VertexSet rnew = 0;
    for (VertexSet m = lreach; m; m &= m - 1) rnew |= cyc_out(d, first_vertex(m));
    rnew &= ~rreach;
    if (!rnew) break;
    rreach |= rnew;
    for (VertexSet m = rnew; m; m &= m - 1) {
      int r = first_vertex(m);
      if (match_r[r] >= 0) lreach |= bit(match_r[r]);
    }
  }
  return HallViolator{lreach, Dir::out};
}

bool hall_check(const Digraph& d, VertexSet x, Dir side) {
  VertexSet u = 0;
  for (VertexSet m = x; m; m &= m - 1) {
    int v = first_vertex(m);
    u |= (side == Dir::out) ? cyc_out(d, v) : cyc_in(d, v);
  }
  return set_size(u) >= set_size(x);
}

std::optional<std::vector<int>> hamilton_cycle(const Digraph& d) {
  const int n = d.n();
  if (n < 2) throw std::invalid_argument("hamilton cycles require n >= 2");

  std::array<VertexSet, kMaxVertices> adj, radj;
  for (int v = 0; v < n; ++v) {
    adj[v] = cyc_out(d, v);
    radj[v] = cyc_in(d, v);
    if (!adj[v] || !radj[v]) return std::nullopt;
  }
  const VertexSet all = d.vertices();

  // visited-mask -> vertices from which that state is known dead
  std::unordered_map<VertexSet, VertexSet> dead;
  std::vector<int> path{0};
  path.reserve(n);

  auto feasible = [&](int cur, VertexSet visited) {
    VertexSet rem = all & ~visited;
    int only_last = 0, only_next = 0;
    for (VertexSet m = rem; m; m &= m - 1) {
      int u = first_vertex(m);
      VertexSet as = adj[u] & ((rem & ~bit(u)) | bit(0));
      if (!as) return false;
      if (as == bit(0) && ++only_last > 1) return false;
      VertexSet ap = radj[u] & ((rem & ~bit(u)) | bit(cur));
      if (!ap) return false;
      if (ap == bit(cur) && ++only_next > 1) return false;
    }
    return true;
  };

  auto dfs = [&](auto&& self, int cur, VertexSet visited) -> bool {
    if (visited == all) return (adj[cur] & bit(0)) != 0;
    auto it = dead.find(visited);
    if (it != dead.end() && (it->second & bit(cur))) return false;
    if (feasible(cur, visited)) {
      for (VertexSet m = adj[cur] & ~visited; m; m &= m - 1) {
        int v = first_vertex(m);
        path.push_back(v);
        if (self(self, v, visited | bit(v))) return true;
        path.pop_back();
      }
    }
    dead[visited] |= bit(cur);
    return false;
  };

  if (dfs(dfs, 0, bit(0))) return path;
  return std::nullopt;
}

std::optional<CycleFactor> merge_pair(const Digraph& d, const CycleFactor& f,
                                      int u, int v) {
  if (f.cycle_index[u] == f.cycle_index[v])
    throw std::invalid_argument("merge_pair endpoints share a cycle");
  const int up = f.succ[u], vp = f.succ[v];
  if (!d.has_arc(u, vp) || !d.has_arc(v, up)) return std::nullopt;

  std::vector<int> merged{u};
  for (int x = vp;; x = f.succ[x]) {
    merged.push_back(x);
    if (x == v) break;
  }
  for (int x = up; x != u; x = f.succ[x]) merged.push_back(x);

  const int ci = std::min(f.cycle_index[u], f.cycle_index[v]);
  const int cj = std::max(f.cycle_index[u], f.cycle_index[v]);
  std::vector<std::vector<int>> cycles;
  cycles.reserve(f.cycles.size() - 1);
  for (int c = 0; c < f.cycle_count(); ++c) {
    if (c == ci)
      cycles.push_back(std::move(merged));
    else if (c != cj)
      cycles.push_back(f.cycles[c]);
  }
  return CycleFactor::from_cycles(static_cast<int>(f.succ.size()),
                                  std::move(cycles));
}

FactorHamiltonResult hamilton_via_factor(const Digraph& d) {
  const int n = d.n();
  if (n < 2) throw std::invalid_argument("hamilton cycles require n >= 2");
  if (!is_strong(d))
    return HypothesisViolation{Hypothesis::strong, "digraph is not strong"};
  if (!is_s_quadrangular(d))
    return HypothesisViolation{Hypothesis::s_quadrangular,
                               "digraph is not s-quadrangular"};
  if (int dd = max_semidegree(d); dd > 3)
    return HypothesisViolation{Hypothesis::max_semidegree,
                               "max semidegree is " + std::to_string(dd)};

  auto first = find_cycle_factor(d);
  if (std::holds_alternative<HallViolator>(first))
    return HypothesisViolation{Hypothesis::cycle_factor,
                               "no cycle factor exists"};
  CycleFactor f = std::get<CycleFactor>(std::move(first));

  auto arc = [&](int u, int v) { return u != v && d.has_arc(u, v); };
  auto measure = [&] {
    std::size_t shortest = f.cycles[0].size();
    for (const auto& c : f.cycles) shortest = std::min(shortest, c.size());
    return std::pair<int, std::size_t>{f.cycle_count(), shortest};
  };

  auto prev = measure();
  bool first_round = true;
  while (f.cycle_count() >= 2) {
    if (!f.valid(d))
      return HypothesisViolation{Hypothesis::stuck,
                                 "internal error: invalid intermediate factor"};
    // merges drop the cycle count, exchanges shorten the shortest cycle
    if (!first_round && measure() >= prev)
      return HypothesisViolation{Hypothesis::stuck,
                                 "internal error: measure did not decrease"};
    prev = measure();
    first_round = false;
    bool advanced = false;

    // Merge any cross-cycle pair whose splice arcs both exist.
    for (int u = 0; u < n && !advanced; ++u)
      for (int v = u + 1; v < n && !advanced; ++v) {
        if (f.cycle_index[u] == f.cycle_index[v]) continue;
        if (auto merged = merge_pair(d, f, u, v)) {
          f = std::move(*merged);
          advanced = true;
        }
      }
    if (advanced) continue;

    // No merge: shorten a shortest cycle. For an arc x->y leaving it, a
    // common out-neighbor z of x and y's predecessor that lies on the short
    // cycle with z- -> x+ lets us split the short cycle at x/z and absorb
    // y's whole cycle into the second part.
    int c1 = 0;
    for (int c = 1; c < f.cycle_count(); ++c)
      if (f.cycles[c].size() < f.cycles[c1].size()) c1 = c;
    VertexSet c1mask = 0;
    for (int w : f.cycles[c1]) c1mask |= bit(w);

    for (VertexSet xm = c1mask; xm && !advanced; xm &= xm - 1) {
      int x = first_vertex(xm);
      int xp = f.succ[x];
      for (VertexSet ym = cyc_out(d, x) & ~c1mask; ym && !advanced;
           ym &= ym - 1) {
        int y = first_vertex(ym);
        int ypre = f.pred[y];
        VertexSet zc =
            cyc_out(d, x) & cyc_out(d, ypre) & c1mask & ~bit(xp) & ~bit(x);
        for (VertexSet zm = zc; zm; zm &= zm - 1) {
          int z = first_vertex(zm);
          if (!arc(f.pred[z], xp)) continue;

          std::vector<int> head, tail;
          for (int w = xp; w != z; w = f.succ[w]) head.push_back(w);
          tail.push_back(x);
          for (int w = y;; w = f.succ[w]) {
            tail.push_back(w);
            if (f.succ[w] == y) break;
          }
          for (int w = z; w != x; w = f.succ[w]) tail.push_back(w);

          std::vector<std::vector<int>> cycles = f.cycles;
          cycles[c1] = std::move(head);
          cycles[f.cycle_index[y]] = std::move(tail);
          f = CycleFactor::from_cycles(n, std::move(cycles));
          advanced = true;
          break;
        }
      }
    }

    if (!advanced)
      return HypothesisViolation{
          Hypothesis::stuck, "no merge or exchange applies to the current factor"};
  }

  std::vector<int> cyc = f.cycles[0];
  auto zero = std::find(cyc.begin(), cyc.end(), 0);
  std::rotate(cyc.begin(), zero, cyc.end());
  return cyc;
}

}  // namespace squad
