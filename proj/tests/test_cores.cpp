#include <doctest.h>

#include <set>

#include "egonet/cores.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace egonet;
using namespace egonet::testing;

TEST_CASE("core numbers of K5") {
  auto d = core_decomposition(complete(5));
  CHECK(d.core_number == std::vector<Count>(5, 4));
  CHECK(d.max_core() == 4);
  CHECK(d.removal_order == std::vector<Vertex>{0, 1, 2, 3, 4});
}

TEST_CASE("K5 with a pendant path") {
  // 4 - 5 - 6 hangs off the clique
  auto g = make_graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}});
  auto d = core_decomposition(g);
  CHECK(d.core_number == std::vector<Count>{4, 4, 4, 4, 4, 1, 1});
  CHECK(d.removal_order.front() == 6);
  CHECK(d.removal_order[1] == 5);
  CHECK(d.core(4) == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(d.core(1).size() == 7);
  CHECK(d.core(5).empty());
  for (Vertex i = 0; i < 7; ++i) CHECK(d.removal_step[d.removal_order[i]] == i);

  auto s = core_sweep(g, d);
  REQUIRE(s.levels.size() == 4);
  // inside the 4-core the only proper suffixes are pieces of the clique
  CHECK(s.levels[3].k == 4);
  CHECK(s.levels[3].best.members == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(s.levels[3].best.cut == 1);
  CHECK(*s.levels[3].best.provenance.k == 4);
}

TEST_CASE("core numbers against repeated deletion") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto g = random_graph(100, 0.1, seed);
    auto d = core_decomposition(g);
    CHECK(d.core_number == oracle::core_numbers(g));
    // peeling never removes a vertex with higher current degree than a later one needs
    std::vector<char> removed(g.num_vertices(), 0);
    Count running = 0;
    for (Vertex v : d.removal_order) {
      Count deg = 0;
      for (Vertex w : g.neighbors(v)) deg += !removed[w];
      running = std::max(running, deg);
      CHECK(d.core_number[v] == running);
      removed[v] = 1;
    }
  }
}

TEST_CASE("core sweep against suffix recounts") {
  auto g = connected_random(60, 0.1, 17);
  auto d = core_decomposition(g);
  auto s = core_sweep(g, d);
  auto a = oracle::adjacency(g);
  const Vertex n = g.num_vertices();
  std::set<Vertex> suffix;
  std::vector<std::optional<double>> phi_of_suffix(n);  // indexed by start
  for (Vertex i = n; i-- > 0;) {
    suffix.insert(d.removal_order[i]);
    phi_of_suffix[i] = oracle::phi(oracle::cut_of(a, suffix), g.total_volume());
    CHECK(s.curve.prefix_conductance[n - 1 - i] == phi_of_suffix[i]);
  }
  for (const auto& level : s.levels) {
    std::optional<double> best;
    for (Vertex i = 0; i < n; ++i) {
      if (d.core_number[d.removal_order[i]] < level.k) continue;
      // removal order is nondecreasing in core number, so this is a suffix of the k-core
      auto p = phi_of_suffix[i];
      if (p && (!best || *p < *best)) best = p;
    }
    REQUIRE(best.has_value());
    CHECK(*level.best.conductance == doctest::Approx(*best).epsilon(1e-14));
    CHECK(revalidate(g, level.best));
    for (Vertex v : level.best.members) CHECK(d.core_number[v] >= level.k);
  }
}

TEST_CASE("Les Miserables core sweep") {
  auto g = lesmis();
  auto d = core_decomposition(g);
  CHECK(d.max_core() == 9);
  auto s = core_sweep(g, d);
  REQUIRE(!s.levels.empty());
  const auto& top = s.levels.back();
  CHECK(top.k == 9);
  CHECK(top.best.members.size() == 12);
  CHECK(top.best.cut == 34);
  CHECK(top.best.method == "core");
  for (const auto& level : s.levels) CHECK(*level.best.conductance == doctest::Approx(*top.best.conductance));
}
