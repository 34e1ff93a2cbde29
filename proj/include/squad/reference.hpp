#pragma once

// Serial reference implementations, definition-literal and bitset-free:
// adjacency as bool matrices, subsets via counters, reachability by
// Floyd-Warshall, hamiltonicity by permutations. Deliberately slow and
// independent of the optimized code paths; linked by the tests and the
// benchmark, never by the CLI.

#include "squad/digraph.hpp"
#include "squad/verifier.hpp"

namespace squad::ref {

using BoolMatrix = std::vector<std::vector<bool>>;

BoolMatrix adjacency(const Digraph& d);
BoolMatrix adjacency(const UGraph& g);

bool is_strong(const BoolMatrix& adj);
bool is_connected(const BoolMatrix& adj);
bool is_s_quadrangular(const BoolMatrix& adj);
bool is_hamiltonian_digraph(const BoolMatrix& adj);
bool is_hamiltonian_graph(const BoolMatrix& adj);

// Hall condition on both sides over all 2^n subsets, loops stripped.
bool has_cycle_factor(const BoolMatrix& adj);

// Same filter chain as verify_conjecture, built on the functions above.
VerificationReport verify(const EnumSpace& space);

}  // namespace squad::ref
