#include "squad/reference.hpp"

#include <algorithm>
#include <numeric>

namespace squad::ref {

BoolMatrix adjacency(const Digraph& d) {
  BoolMatrix adj(d.n(), std::vector<bool>(d.n(), false));
  for (int i = 0; i < d.n(); ++i)
    for (int j = 0; j < d.n(); ++j) adj[i][j] = d.has_arc(i, j);
  return adj;
}

BoolMatrix adjacency(const UGraph& g) {
  BoolMatrix adj(g.n(), std::vector<bool>(g.n(), false));
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) adj[i][j] = g.has_edge(i, j);
  return adj;
}

bool is_strong(const BoolMatrix& adj) {
  const int n = static_cast<int>(adj.size());
  BoolMatrix reach = adj;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (reach[i][k])
        for (int j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !reach[i][j]) return false;
  return true;
}

bool is_connected(const BoolMatrix& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (adj[u][v] && !seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

namespace {

bool quad_side(const BoolMatrix& nbr) {
  const int n = static_cast<int>(nbr.size());
  auto common = [&](int u, int v) {
    for (int w = 0; w < n; ++w)
      if (nbr[u][w] && nbr[v][w]) return true;
    return false;
  };
  for (unsigned long sub = 0; sub < (1ul << n); ++sub) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if ((sub >> v) & 1) members.push_back(v);
    if (members.size() < 2) continue;

    bool qset = true;
    for (int u : members) {
      bool partnered = false;
      for (int v : members)
        if (v != u && common(u, v)) partnered = true;
      if (!partnered) qset = false;
    }
    if (!qset) continue;

    std::vector<bool> uni(n, false);
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        for (int w = 0; w < n; ++w)
          if (nbr[members[a]][w] && nbr[members[b]][w]) uni[w] = true;
    if (std::count(uni.begin(), uni.end(), true) <
        static_cast<long>(members.size()))
      return false;
  }
  return true;
}

}  // namespace

bool is_s_quadrangular(const BoolMatrix& adj) {
  const int n = static_cast<int>(adj.size());
  BoolMatrix in(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) in[i][j] = adj[j][i];
  return quad_side(adj) && quad_side(in);
}

bool is_hamiltonian_digraph(const BoolMatrix& adj) {
  const int n = static_cast<int>(adj.size());
  if (n < 2) return false;
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = adj[0][perm[0]] && adj[perm[n - 2]][0];
    for (int i = 0; ok && i + 1 < n - 1; ++i) ok = adj[perm[i]][perm[i + 1]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool is_hamiltonian_graph(const BoolMatrix& adj) {
  const int n = static_cast<int>(adj.size());
  if (n < 3) return false;
  return is_hamiltonian_digraph(adj);  // symmetric matrix: same cycles
}

bool has_cycle_factor(const BoolMatrix& adj) {
  const int n = static_cast<int>(adj.size());
  if (n < 2) return false;
  for (unsigned long sub = 1; sub < (1ul << n); ++sub) {
    std::vector<bool> uout(n, false), uin(n, false);
    int size = 0;
    for (int v = 0; v < n; ++v) {
      if (!((sub >> v) & 1)) continue;
      ++size;
      for (int w = 0; w < n; ++w) {
        if (w == v) continue;  // loops never lie on cycles
        if (adj[v][w]) uout[w] = true;
        if (adj[w][v]) uin[w] = true;
      }
    }
    if (std::count(uout.begin(), uout.end(), true) < size) return false;
    if (std::count(uin.begin(), uin.end(), true) < size) return false;
  }
  return true;
}

VerificationReport verify(const EnumSpace& space) {
  VerificationReport r;
  r.mode = space.mode;
  r.n = space.n;
  r.loops = space.loops;
  enumerate(space, [&](std::uint64_t mask, const auto& inst) {
    ++r.total;
    BoolMatrix adj = adjacency(inst);
    if constexpr (std::is_same_v<std::decay_t<decltype(inst)>, UGraph>) {
      if (!is_connected(adj)) return;
    } else {
      if (!is_strong(adj)) return;
    }
    ++r.strong;
    if (!is_s_quadrangular(adj)) return;
    ++r.squad;
    bool ham = space.mode == SpaceMode::graph ? is_hamiltonian_graph(adj)
                                              : is_hamiltonian_digraph(adj);
    if (ham)
      ++r.hamiltonian;
    else
      r.counterexamples.push_back(mask);
  });
  return r;
}

}  // namespace squad::ref
