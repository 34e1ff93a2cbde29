#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "squad/digraph.hpp"

namespace squad {

enum class SpaceMode { digraph, graph };

// Labeled enumeration space. Mask layout (stable, also used for the hex
// counterexample encodings):
//   digraph, loopless: bit k runs over ordered pairs (i,j), i != j, with i
//     ascending and j ascending within each i (j skips i).
//   digraph, loops:    bit i*n+j <-> arc i->j.
//   graph:             bit k runs over pairs (i,j), i < j, i ascending then
//     j ascending.
struct EnumSpace {
  SpaceMode mode = SpaceMode::digraph;
  int n = 0;
  bool loops = false;

  int bits() const {
    if (mode == SpaceMode::graph) return n * (n - 1) / 2;
    return loops ? n * n : n * (n - 1);
  }
  std::uint64_t size() const { return std::uint64_t{1} << bits(); }
};

Digraph digraph_from_mask(int n, std::uint64_t mask, bool loops);
UGraph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_of_digraph(const Digraph& d, bool loops);
std::uint64_t mask_of_graph(const UGraph& g);

inline void enumeration_capacity_check(const EnumSpace& space) {
  if (space.bits() > 32)
    throw CapacityError("exhaustive enumeration capped at 2^32 instances");
}

// Every instance exactly once, ascending mask order. Exhaustive spaces are
// capped at 2^32 instances. The callback sees (mask, instance); use the
// typed variants unless the callback is generic over both graph kinds.
template <typename Fn>
void enumerate(const EnumSpace& space, Fn&& fn) {
  enumeration_capacity_check(space);
  for (std::uint64_t mask = 0; mask < space.size(); ++mask) {
    if (space.mode == SpaceMode::graph)
      fn(mask, graph_from_mask(space.n, mask));
    else
      fn(mask, digraph_from_mask(space.n, mask, space.loops));
  }
}

template <typename Fn>
void enumerate_digraphs(const EnumSpace& space, Fn&& fn) {
  if (space.mode != SpaceMode::digraph)
    throw std::invalid_argument("digraph enumeration over a graph space");
  enumeration_capacity_check(space);
  for (std::uint64_t mask = 0; mask < space.size(); ++mask)
    fn(mask, digraph_from_mask(space.n, mask, space.loops));
}

template <typename Fn>
void enumerate_graphs(const EnumSpace& space, Fn&& fn) {
  if (space.mode != SpaceMode::graph)
    throw std::invalid_argument("graph enumeration over a digraph space");
  enumeration_capacity_check(space);
  for (std::uint64_t mask = 0; mask < space.size(); ++mask)
    fn(mask, graph_from_mask(space.n, mask));
}

struct VerificationReport {
  SpaceMode mode = SpaceMode::digraph;
  int n = 0;
  bool loops = false;
  std::uint64_t total = 0;
  std::uint64_t strong = 0;  // connected count in graph mode
  std::uint64_t squad = 0;
  std::uint64_t hamiltonian = 0;
  std::vector<std::uint64_t> counterexamples;
  double elapsed_seconds = 0;
  int threads = 1;

  bool conjecture_holds() const { return counterexamples.empty(); }
};

// Keys in fixed order: mode, n, loops, total, strong, squad, hamiltonian,
// counterexamples (hex mask strings), elapsed_seconds, threads.
std::string to_json_string(const VerificationReport& r);

// Filter chain strong (connected) -> s-quadrangular -> hamiltonian over the
// whole space; every strong s-quadrangular non-hamiltonian instance is a
// counterexample. Parallel over fixed-size contiguous mask ranges, partial
// reports merged in range order, so the outcome is thread-count independent.
VerificationReport verify_conjecture(const EnumSpace& space, int threads = 1);

// Same pipeline over `count` masks drawn uniformly from the space with a
// seeded mt19937_64; deterministic in (seed, count).
VerificationReport sample_verify(const EnumSpace& space, std::uint64_t count,
                                 std::uint64_t seed, int threads = 1);

}  // namespace squad
