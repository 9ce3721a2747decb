#include <doctest.h>

#include <cmath>
#include <set>

#include "egonet/clustering.hpp"
#include "egonet/cores.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace egonet;
using namespace egonet::testing;

TEST_CASE("K4 and a star by hand") {
  auto k4 = complete(4);
  auto t = triangle_counts(k4);
  CHECK(t == std::vector<Count>{3, 3, 3, 3});
  auto gc = global_clustering(k4, t);
  CHECK(gc.total_wedges == 12);
  CHECK(gc.closed_wedges == 12);
  CHECK(*gc.kappa == doctest::Approx(1.0));
  CHECK(*gc.mean_local == doctest::Approx(1.0));

  auto s = star(5);
  auto ts = triangle_counts(s);
  auto gs = global_clustering(s, ts);
  CHECK(gs.total_wedges == 10);
  CHECK(*gs.kappa == doctest::Approx(0.0));
  CHECK(*gs.mean_local == doctest::Approx(0.0));
  CHECK(gs.wedge_weights[0] == doctest::Approx(1.0));
  CHECK(gs.wedge_weights[1] == 0.0);
}

TEST_CASE("no wedges leaves kappa undefined") {
  auto g = path(2);
  auto gc = global_clustering(g, triangle_counts(g));
  CHECK_FALSE(gc.kappa.has_value());
  CHECK(*gc.mean_local == 0.0);
  CHECK_FALSE(global_clustering(Graph{}, {}).mean_local.has_value());
}

TEST_CASE("triangles and wedges against enumeration") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto g = random_graph(30, 0.3, seed);
    auto t = triangle_counts(g);
    CHECK(t == oracle::triangles(g));
    CHECK(triangle_counts(g, 3) == t);
    auto w = oracle::wedges(g);
    auto gc = global_clustering(g, t);
    CHECK(gc.total_wedges == w.open + w.closed);
    CHECK(gc.closed_wedges == w.closed);
    CHECK(*gc.kappa == doctest::Approx(static_cast<double>(w.closed) / static_cast<double>(w.open + w.closed)));
    CHECK(triangle_total(g) * 3 == w.closed);
  }
}

TEST_CASE("global clustering of small examples") {
  // triangle with a pendant: wedges 1 + 1 + 3 = 5, closed 3
  auto g = make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  auto gc = global_clustering(g, triangle_counts(g));
  CHECK(*gc.kappa == doctest::Approx(3.0 / 5.0));
  // the pendant vertex counts with C_v = 0
  CHECK(*gc.mean_local == doctest::Approx((1.0 + 1.0 + 1.0 / 3.0) / 4.0));

  auto c = cycle(6);
  CHECK(*global_clustering(c, triangle_counts(c)).kappa == 0.0);
}

TEST_CASE("mean local clustering differs from kappa") {
  // A star whose leaves are paired into triangles pulls C-bar above kappa.
  auto g = make_graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {3, 4}, {5, 6}});
  auto gc = global_clustering(g, triangle_counts(g));
  CHECK(*gc.kappa == doctest::Approx(9.0 / 21.0));
  CHECK(*gc.mean_local == doctest::Approx((6.0 * 1.0 + 0.2) / 7.0));
  CHECK(*gc.mean_local > *gc.kappa + 0.3);
}

TEST_CASE("ball of a pendant on K5") {
  auto g = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
  auto s = neighborhood_stats(g);
  CHECK(ball(g, 5) == std::vector<Vertex>{5, 4});
  CHECK(s.ball_size[5] == 2);
  CHECK(s.ball_cut[5] == 4);
  CHECK(s.ball_vol[5] == 6);
  CHECK(*s.ball_conductance[5] == doctest::Approx(4.0 / 6.0));
  // the hub's ball is everything
  CHECK(s.ball_cut[4] == 0);
  CHECK_FALSE(s.ball_conductance[4].has_value());
}

TEST_CASE("ball statistics against direct set metrics") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    Vertex n = static_cast<Vertex>(100 * seed + 100);
    auto g = random_graph(n, 6.0 / n, seed);
    auto s = neighborhood_stats(g, 2);
    auto a = oracle::adjacency(g);
    for (Vertex v = 0; v < n; ++v) {
      auto b = ball(g, v);
      std::set<Vertex> members(b.begin(), b.end());
      auto c = oracle::cut_of(a, members);
      CHECK(s.ball_size[v] == members.size());
      CHECK(s.ball_cut[v] == c.cut);
      CHECK(s.ball_vol[v] == c.vol);
      CHECK(s.ball_conductance[v] == oracle::phi(c, g.total_volume()));
    }
  }
}

TEST_CASE("both identities hold on every graph with up to 7 vertices") {
  std::size_t graphs = 0;
  for (Vertex n = 1; n <= 7; ++n) {
    oracle::for_each_graph(n, [&](const Graph& g) {
      ++graphs;
      auto k = check_identity_kappa(g);
      auto c = check_identity_nbd_cut(g);
      REQUIRE(k.holds());
      REQUIRE(c.holds());
      auto w = oracle::wedges(g);
      REQUIRE(k.lhs == w.closed);
      REQUIRE(c.rhs == 2 * w.open);
    });
  }
  CHECK(graphs == 1 + 2 + 8 + 64 + 1024 + 32768 + 2097152);
}

TEST_CASE("weighted forms of the identities") {
  auto g = lesmis();
  auto t = triangle_counts(g);
  auto gc = global_clustering(g, t);
  auto s = neighborhood_stats(g, t);
  const double w = static_cast<double>(gc.total_wedges);
  double sum_c = 0.0;
  double sum_cut = 0.0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (s.wedges[v] > 0) sum_c += gc.wedge_weights[v] * *s.local_clustering[v];
    // p_v cut / |W_v| = cut / |W|; vertices of degree one still have a cut
    sum_cut += static_cast<double>(s.ball_cut[v]) / w;
  }
  CHECK(sum_c == doctest::Approx(*gc.kappa).epsilon(1e-12));
  CHECK(sum_cut == doctest::Approx(2.0 * (1.0 - *gc.kappa)).epsilon(1e-12));
}

TEST_CASE("theorem diagnostics") {
  SUBCASE("K10") {
    auto r = theorem_diagnostics(complete(10));
    CHECK(*r.kappa == doctest::Approx(1.0));
    CHECK(r.max_degree == 9);
    CHECK(*r.core_bound == doctest::Approx(std::pow(9.0, 2.0 / 3.0) / 2.0));
    CHECK(r.max_core == 9);
    CHECK(r.core_bound_met);
    CHECK(*r.conductance_bound == doctest::Approx(0.0));
    CHECK_FALSE(r.min_ball_conductance.has_value());  // every ball is V
  }
  SUBCASE("three chained K8") {
    std::vector<Vertex> sizes{8, 8, 8};
    auto g = clique_union(sizes, chain_bridges(3));
    auto r = theorem_diagnostics(g);
    CHECK(r.max_core == 7);
    CHECK(r.core_bound_met);
    REQUIRE(r.min_ball_conductance.has_value());
    // the ball of a clique vertex without a bridge is the clique itself
    CHECK(*r.min_ball_conductance == doctest::Approx(1.0 / 57.0));
    CHECK(r.best_ball_at_most_bound == (*r.min_ball_conductance <= *r.conductance_bound));
    CHECK(r.best_ball_at_least_bound == (*r.min_ball_conductance >= *r.conductance_bound));
  }
}

TEST_CASE("degree distribution") {
  auto g = star(8);
  auto dd = degree_distribution(g, 0.5);
  CHECK(dd.frequency == std::vector<std::pair<Count, Count>>{{1, 8}, {8, 1}});
  CHECK(dd.high_degree_threshold == doctest::Approx(std::sqrt(8.0)));
  CHECK(dd.high_degree_wedge_share == doctest::Approx(1.0));
}
