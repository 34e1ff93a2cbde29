#include "squad/verifier.hpp"

#include <chrono>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>

#include "squad/cycle_factor.hpp"
#include "squad/ffactor.hpp"

namespace squad {

Digraph digraph_from_mask(int n, std::uint64_t mask, bool loops) {
  Digraph d(n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && !loops) continue;
      if ((mask >> k) & 1) d.add_arc(i, j);
      ++k;
    }
  return d;
}

UGraph graph_from_mask(int n, std::uint64_t mask) {
  UGraph g(n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if ((mask >> k) & 1) g.add_edge(i, j);
      ++k;
    }
  return g;
}

std::uint64_t mask_of_digraph(const Digraph& d, bool loops) {
  std::uint64_t mask = 0;
  int k = 0;
  for (int i = 0; i < d.n(); ++i)
    for (int j = 0; j < d.n(); ++j) {
      if (i == j && !loops) continue;
      if (d.has_arc(i, j)) mask |= std::uint64_t{1} << k;
      ++k;
    }
  return mask;
}

std::uint64_t mask_of_graph(const UGraph& g) {
  std::uint64_t mask = 0;
  int k = 0;
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j) {
      if (g.has_edge(i, j)) mask |= std::uint64_t{1} << k;
      ++k;
    }
  return mask;
}

std::string to_json_string(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["mode"] = r.mode == SpaceMode::graph ? "graph" : "digraph";
  j["n"] = r.n;
  j["loops"] = r.loops;
  j["total"] = r.total;
  j["strong"] = r.strong;
  j["squad"] = r.squad;
  j["hamiltonian"] = r.hamiltonian;
  auto& cex = j["counterexamples"] = nlohmann::ordered_json::array();
  char buf[32];
  for (std::uint64_t m : r.counterexamples) {
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(m));
    cex.push_back(buf);
  }
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["threads"] = r.threads;
  return j.dump();
}

namespace {

struct Partial {
  std::uint64_t strong = 0, squad = 0, ham = 0;
  std::vector<std::uint64_t> cex;
};

void check_mode(const EnumSpace& space) {
  if (space.mode == SpaceMode::graph) {
    if (space.loops)
      throw std::invalid_argument("undirected graphs have no loops");
    if (space.n < 3)
      throw std::invalid_argument(
          "graph-mode verification needs n >= 3 (no shorter cycles exist)");
  } else if (space.n < 2) {
    throw std::invalid_argument(
        "digraph-mode verification needs n >= 2 (no shorter cycles exist)");
  }
  if (space.n > kMaxVertices) throw CapacityError("order exceeds 64");
}

void run_instance(const EnumSpace& space, std::uint64_t mask, Partial& p) {
  if (space.mode == SpaceMode::graph) {
    UGraph g = graph_from_mask(space.n, mask);
    if (!is_connected(g)) return;
    ++p.strong;
    Digraph d = complete_biorientation(g);
    if (!is_s_quadrangular(d)) return;
    ++p.squad;
    if (hamilton_cycle(d))
      ++p.ham;
    else
      p.cex.push_back(mask);
  } else {
    Digraph d = digraph_from_mask(space.n, mask, space.loops);
    if (!is_strong(d)) return;
    ++p.strong;
    if (!is_s_quadrangular(d)) return;
    ++p.squad;
    if (hamilton_cycle(d))
      ++p.ham;
    else
      p.cex.push_back(mask);
  }
}

// masks[i] for i in [begin, end) when masks != nullptr, else the mask range
// [begin, end) itself.
VerificationReport run_pipeline(const EnumSpace& space, std::uint64_t count,
                                const std::vector<std::uint64_t>* masks,
                                int threads) {
  check_mode(space);
  auto t0 = std::chrono::steady_clock::now();

  if (threads < 1) threads = 1;
#ifndef _OPENMP
  threads = 1;
#endif

  constexpr std::uint64_t kChunk = 1 << 14;
  const std::uint64_t nchunks = (count + kChunk - 1) / kChunk;
  std::vector<Partial> parts(nchunks);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (long long c = 0; c < static_cast<long long>(nchunks); ++c) {
    Partial& p = parts[c];
    const std::uint64_t lo = c * kChunk;
    const std::uint64_t hi = std::min(count, lo + kChunk);
    for (std::uint64_t i = lo; i < hi; ++i)
      run_instance(space, masks ? (*masks)[i] : i, p);
  }

  VerificationReport r;
  r.mode = space.mode;
  r.n = space.n;
  r.loops = space.loops;
  r.total = count;
  r.threads = threads;
  for (const Partial& p : parts) {
    r.strong += p.strong;
    r.squad += p.squad;
    r.hamiltonian += p.ham;
    r.counterexamples.insert(r.counterexamples.end(), p.cex.begin(),
                             p.cex.end());
  }
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

}  // namespace

VerificationReport verify_conjecture(const EnumSpace& space, int threads) {
  if (space.bits() > 32)
    throw CapacityError(
        "exhaustive verification capped at 2^32 instances; use sampling");
  return run_pipeline(space, space.size(), nullptr, threads);
}

VerificationReport sample_verify(const EnumSpace& space, std::uint64_t count,
                                 std::uint64_t seed, int threads) {
  const int bits = space.bits();
  if (bits > 64)
    throw CapacityError("sampled spaces capped at 64 arc bits per instance");
  std::vector<std::uint64_t> masks(count);
  std::mt19937_64 rng(seed);
  for (auto& m : masks) m = bits == 64 ? rng() : rng() >> (64 - bits);
  return run_pipeline(space, count, &masks, threads);
}

}  // namespace squad
