#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "squad/digraph.hpp"

namespace squad {

// Degree targets for an f-factor. Targets above the actual degree are legal
// (the factor is then simply infeasible).
struct FFactorSpec {
  std::vector<int> f;

  static FFactorSpec uniform(int n, int k) {
    return FFactorSpec{std::vector<int>(n, k)};
  }
  int operator()(int v) const { return f[v]; }
};

// Number of components Q of G-(S u T) with e(V(Q),T) + sum_{v in Q} f(v)
// odd. With f == 2 this is oc(S,T).
int odd_component_count(const UGraph& g, VertexSet s, VertexSet t,
                        const FFactorSpec& f);

struct TutteViolator {
  VertexSet s = 0, t = 0;
  long long lhs = 0, rhs = 0;
};

// Scans every disjoint (S,T) pair; returns std::nullopt when the f-factor
// inequality always holds, else the violator of maximal lhs-rhs (ties:
// smallest |T|, then smallest t-mask, then smallest s-mask). 3^n work,
// capped at n = 14.
std::optional<TutteViolator> tutte_check(const UGraph& g, const FFactorSpec& f);

using EdgeList = std::vector<std::pair<int, int>>;

// Exact backtracking over edges in ascending (u,v) order, include branch
// first, with degree upper/lower-bound pruning; the first factor found is
// the lexicographically least edge set.
std::optional<EdgeList> find_f_factor(const UGraph& g, const FFactorSpec& f);

std::optional<EdgeList> find_two_factor(const UGraph& g);

// Witness partition for a min-degree->=2 graph without a 2-factor.
struct TuttePartition {
  VertexSet s = 0, t = 0, o = 0, r = 0;
  int w = 0;     // |T| - |S| - e(T) - (e(T,V-S-T) - oc(S,T)) / 2
  int oc = 0;    // components of G-S-T with an odd edge count into T
  int e_to = 0;  // e(T, O)
};

enum class PartitionFailure { has_two_factor, min_degree, capacity };

using PartitionResult = std::variant<TuttePartition, PartitionFailure>;

// Exhaustive (S,T) scan maximizing w, then minimizing |T|, maximizing |S|,
// minimizing oc, final tie on smallest (t-mask, s-mask). O = vertices of
// components of G-S-T with odd edge count into T; R = the rest.
PartitionResult build_partition(const UGraph& g);

struct PartitionViolation {
  int property = 0;  // 1..7
  std::string witness;
};

// Empty iff all seven partition properties hold; each violation names the
// property index and a witness. Throws if s,t,o,r is not a partition of V.
std::vector<PartitionViolation> verify_partition(const UGraph& g,
                                                 const TuttePartition& p);

// Exact undirected Hamilton cycle via the complete biorientation (n >= 3;
// a directed Hamilton cycle on >= 3 vertices never reuses an edge).
std::optional<std::vector<int>> hamilton_cycle_graph(const UGraph& g);

}  // namespace squad
