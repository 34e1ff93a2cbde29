#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "squad/digraph.hpp"

namespace squad {

// Spanning set of vertex-disjoint directed cycles, each of length >= 2.
// Loops never participate. succ/pred give u+ and u- on the owning cycle.
struct CycleFactor {
  std::vector<std::vector<int>> cycles;
  std::vector<int> succ, pred;
  std::vector<int> cycle_index;  // vertex -> position in `cycles`

  static CycleFactor from_cycles(int n, std::vector<std::vector<int>> cycles);

  int cycle_count() const { return static_cast<int>(cycles.size()); }

  // Disjoint cover, lengths >= 2, every consecutive pair an arc of d,
  // succ/pred mutually inverse and consistent with the lists.
  bool valid(const Digraph& d) const;
};

// Witness set with |union of N^side| < |set| (loops stripped).
struct HallViolator {
  VertexSet set = 0;
  Dir side = Dir::out;
};

using FactorResult = std::variant<CycleFactor, HallViolator>;

// Perfect bipartite matching tail->head over loopless arcs gives the factor;
// on failure the deficient tail set is recovered by alternating reachability
// from the unmatched vertices.
FactorResult find_cycle_factor(const Digraph& d);

// |union of N^side(v) over v in x| >= |x|. Loops do not lie on cycles, so
// the loop bit of each v is ignored; otherwise a vertex could cover itself
// and hide a genuine deficiency.
bool hall_check(const Digraph& d, VertexSet x, Dir side);

// Exact search: DFS from vertex 0 trying out-neighbors in ascending order,
// with dead-state memoization and degree-feasibility pruning (prunes only
// infeasible branches, so the first cycle found is the lexicographically
// least one starting at 0). Loops are ignored.
std::optional<std::vector<int>> hamilton_cycle(const Digraph& d);

// If both arcs u->succ(v) and v->succ(u) exist, splice the two cycles
// through u and v into one: u, v+, ..., v, u+, ..., u. Returns std::nullopt
// when an arc is missing; throws if u and v share a cycle.
std::optional<CycleFactor> merge_pair(const Digraph& d, const CycleFactor& f,
                                      int u, int v);

enum class Hypothesis {
  strong,
  s_quadrangular,
  max_semidegree,
  cycle_factor,  // no cycle factor despite the hypotheses
  stuck,         // no merge and no exchange applies
};

struct HypothesisViolation {
  Hypothesis failed;
  std::string detail;
};

using FactorHamiltonResult = std::variant<std::vector<int>, HypothesisViolation>;

// Constructive Hamilton search for strong s-quadrangular digraphs with
// max semidegree <= 3: start from a cycle factor; merge cycle pairs while
// possible; otherwise shorten a shortest cycle by the three-arc exchange.
// (cycle count, shortest cycle length) decreases lexicographically every
// round, so this terminates; under the hypotheses a step always applies.
FactorHamiltonResult hamilton_via_factor(const Digraph& d);

}  // namespace squad
