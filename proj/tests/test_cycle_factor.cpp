#include "squad/cycle_factor.hpp"

#include "doctest.h"
#include "helpers.hpp"
#include "squad/reference.hpp"
#include "squad/verifier.hpp"

using namespace squad;
using namespace squad::testhelp;

TEST_CASE("find_cycle_factor basics") {
  Digraph two(2);
  two.add_arc(0, 1);
  two.add_arc(1, 0);
  auto res = find_cycle_factor(two);
  auto* f = std::get_if<CycleFactor>(&res);
  REQUIRE(f);
  CHECK(f->cycles == std::vector<std::vector<int>>{{0, 1}});
  CHECK(f->valid(two));

  auto bad = find_cycle_factor(path_digraph(3));
  auto* hv = std::get_if<HallViolator>(&bad);
  REQUIRE(hv);
  CHECK(hv->set == bit(2));
  CHECK(hv->side == Dir::out);
  CHECK_FALSE(hall_check(path_digraph(3), hv->set, hv->side));

  CHECK_THROWS_AS(find_cycle_factor(Digraph(1)), std::invalid_argument);
}

TEST_CASE("loops never enter factors") {
  Digraph d(2);  // 2-cycle plus loops everywhere
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  d.add_arc(0, 0);
  d.add_arc(1, 1);
  auto res = find_cycle_factor(d);
  auto* f = std::get_if<CycleFactor>(&res);
  REQUIRE(f);
  CHECK(f->cycles == std::vector<std::vector<int>>{{0, 1}});

  Digraph loopy(2);  // only loops: no genuine cycle exists
  loopy.add_arc(0, 0);
  loopy.add_arc(1, 1);
  auto none = find_cycle_factor(loopy);
  auto* hv = std::get_if<HallViolator>(&none);
  REQUIRE(hv);
  CHECK_FALSE(hall_check(loopy, hv->set, hv->side));
}

TEST_CASE("hall_check") {
  Digraph c5 = cycle_digraph(5);
  CHECK(hall_check(c5, bit(0) | bit(2), Dir::out));
  CHECK(hall_check(c5, c5.vertices(), Dir::out));
  CHECK(hall_check(c5, c5.vertices(), Dir::in));

  Digraph star(3);  // 1->0, 2->0
  star.add_arc(1, 0);
  star.add_arc(2, 0);
  CHECK_FALSE(hall_check(star, bit(1) | bit(2), Dir::out));
}

TEST_CASE("matching factor agrees with the subset Hall oracle") {
  std::mt19937_64 rng(99);
  const double probs[] = {0.1, 0.2, 0.35, 0.5};
  int violators = 0, factors = 0;
  for (int iter = 0; iter < 10000; ++iter) {
    int n = 2 + int(rng() % 9);  // n <= 10
    Digraph d = random_digraph(n, probs[iter % 4], rng);
    auto res = find_cycle_factor(d);
    bool oracle = ref::has_cycle_factor(ref::adjacency(d));
    if (auto* f = std::get_if<CycleFactor>(&res)) {
      ++factors;
      CHECK(oracle);
      CHECK(f->valid(d));
    } else {
      ++violators;
      CHECK_FALSE(oracle);
      const auto& hv = std::get<HallViolator>(res);
      CHECK_FALSE(hall_check(d, hv.set, hv.side));
    }
  }
  CHECK(violators > 1000);  // the corpus exercises both outcomes
  CHECK(factors > 1000);
}

TEST_CASE("hamilton_cycle basics") {
  auto c5 = hamilton_cycle(cycle_digraph(5));
  REQUIRE(c5.has_value());
  CHECK(*c5 == std::vector<int>{0, 1, 2, 3, 4});

  CHECK_FALSE(hamilton_cycle(path_digraph(3)).has_value());

  auto k4 = hamilton_cycle(complete_biorientation(complete_graph(4)));
  REQUIRE(k4.has_value());
  CHECK(*k4 == std::vector<int>{0, 1, 2, 3});  // lexicographically least

  Digraph two(2);
  two.add_arc(0, 1);
  two.add_arc(1, 0);
  CHECK(hamilton_cycle(two) == std::vector<int>{0, 1});

  CHECK_THROWS_AS(hamilton_cycle(Digraph(1)), std::invalid_argument);
}

TEST_CASE("hamilton_cycle agrees with the permutation oracle") {
  std::mt19937_64 rng(123);
  const double probs[] = {0.2, 0.35, 0.5, 0.7};
  for (int iter = 0; iter < 10000; ++iter) {
    int n = 2 + int(rng() % 6);  // n <= 7
    Digraph d = random_digraph(n, probs[iter % 4], rng);
    auto cyc = hamilton_cycle(d);
    CHECK(cyc.has_value() == ref::is_hamiltonian_digraph(ref::adjacency(d)));
    if (cyc) CHECK(valid_hamilton_cycle(d, *cyc));
  }
}

namespace {

// Two 2-cycles 0<->1, 2<->3 plus the cross arcs that make them mergeable.
Digraph mergeable_pairs() {
  Digraph d(4);
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  d.add_arc(2, 3);
  d.add_arc(3, 2);
  d.add_arc(0, 3);
  d.add_arc(2, 1);
  return d;
}

CycleFactor two_two_cycles() {
  return CycleFactor::from_cycles(4, {{0, 1}, {2, 3}});
}

}  // namespace

TEST_CASE("merge_pair") {
  Digraph d = mergeable_pairs();
  CycleFactor f = two_two_cycles();
  auto merged = merge_pair(d, f, 0, 2);
  REQUIRE(merged.has_value());
  CHECK(merged->cycles == std::vector<std::vector<int>>{{0, 3, 2, 1}});
  CHECK(merged->cycle_count() == f.cycle_count() - 1);
  CHECK(merged->valid(d));

  Digraph d2 = mergeable_pairs();
  d2.remove_arc(2, 1);
  CHECK_FALSE(merge_pair(d2, f, 0, 2).has_value());

  CHECK_THROWS_AS(merge_pair(d, f, 0, 1), std::invalid_argument);
}

TEST_CASE("hamilton_via_factor basics") {
  for (int n : {2, 3, 5, 8}) {
    auto res = hamilton_via_factor(cycle_digraph(n));
    auto* cyc = std::get_if<std::vector<int>>(&res);
    REQUIRE(cyc);
    CHECK(valid_hamilton_cycle(cycle_digraph(n), *cyc));
  }

  Digraph d(4);  // two 2-cycles joined into a strong squad digraph
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  d.add_arc(2, 3);
  d.add_arc(3, 2);
  d.add_arc(0, 3);
  d.add_arc(2, 1);
  d.add_arc(1, 2);
  d.add_arc(3, 0);
  auto res = hamilton_via_factor(d);
  auto* cyc = std::get_if<std::vector<int>>(&res);
  REQUIRE(cyc);
  CHECK(valid_hamilton_cycle(d, *cyc));
  CHECK(hamilton_cycle(d).has_value());

  // loops inflate semidegrees and join N+/N- but never enter the factor
  auto looped = hamilton_via_factor(complete_digraph(2, true));
  auto* lc = std::get_if<std::vector<int>>(&looped);
  REQUIRE(lc);
  CHECK(*lc == std::vector<int>{0, 1});
}

TEST_CASE("hamilton_via_factor reports failed hypotheses") {
  auto weak = hamilton_via_factor(path_digraph(3));
  REQUIRE(std::holds_alternative<HypothesisViolation>(weak));
  CHECK(std::get<HypothesisViolation>(weak).failed == Hypothesis::strong);

  auto k3 = hamilton_via_factor(complete_biorientation(complete_graph(3)));
  REQUIRE(std::holds_alternative<HypothesisViolation>(k3));
  CHECK(std::get<HypothesisViolation>(k3).failed == Hypothesis::s_quadrangular);

  auto k5 = hamilton_via_factor(complete_biorientation(complete_graph(5)));
  REQUIRE(std::holds_alternative<HypothesisViolation>(k5));
  CHECK(std::get<HypothesisViolation>(k5).failed == Hypothesis::max_semidegree);
}

TEST_CASE("constructive search succeeds on structured instances up to n=14") {
  // Line digraphs of eulerian digraphs with semidegree <= 3 are strong,
  // s-quadrangular, and keep the semidegree bound, so they qualify at sizes
  // the exhaustive sweeps cannot reach.
  std::mt19937_64 rng(77);
  int built = 0, multi_cycle_starts = 0;
  for (int iter = 0; iter < 20000 && built < 500; ++iter) {
    int n = 3 + int(rng() % 5);
    Digraph d(n);
    int cycles = 1 + int(rng() % 3);
    for (int c = 0; c < cycles; ++c) {
      int len = 2 + int(rng() % n);
      std::vector<int> walk(len);
      for (int& v : walk) v = int(rng() % n);
      for (int i = 0; i < len; ++i) d.add_arc(walk[i], walk[(i + 1) % len]);
    }
    if (!is_eulerian(d) || max_semidegree(d) > 3) continue;
    if (d.arc_count() < 6 || d.arc_count() > 14) continue;
    Digraph l = line_digraph(d).graph;
    REQUIRE(is_strong(l));
    REQUIRE(is_s_quadrangular(l));
    ++built;
    auto fr = find_cycle_factor(l);
    if (auto* f = std::get_if<CycleFactor>(&fr); f && f->cycle_count() > 1)
      ++multi_cycle_starts;
    auto res = hamilton_via_factor(l);
    auto* cyc = std::get_if<std::vector<int>>(&res);
    REQUIRE(cyc);
    CHECK(valid_hamilton_cycle(l, *cyc));
  }
  CHECK(built == 500);
  CHECK(multi_cycle_starts > 100);
}

TEST_CASE("hamilton_via_factor succeeds on every qualifying n=4 digraph") {
  EnumSpace space{SpaceMode::digraph, 4, false};
  int qualifying = 0;
  enumerate_digraphs(space, [&](std::uint64_t, const Digraph& d) {
    if (!is_strong(d) || !is_s_quadrangular(d) || max_semidegree(d) > 3)
      return;
    ++qualifying;
    auto res = hamilton_via_factor(d);
    auto* cyc = std::get_if<std::vector<int>>(&res);
    REQUIRE(cyc);
    CHECK(valid_hamilton_cycle(d, *cyc));
  });
  CHECK(qualifying > 0);
}
