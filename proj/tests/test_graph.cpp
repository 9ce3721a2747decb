#include <doctest.h>

#include <numeric>
#include <set>
#include <sstream>

#include "egonet/edge_list.hpp"
#include "egonet/graph.hpp"
#include "egonet/random.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace egonet;
using namespace egonet::testing;

namespace {

LabeledGraph parse(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

void check_graph_invariants(const Graph& g) {
  Count degree_sum = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    degree_sum += nb.size();
    CHECK(nb.size() == g.degree(v));
    for (std::size_t i = 0; i < nb.size(); ++i) {
      CHECK(nb[i] != v);
      if (i > 0) CHECK(nb[i - 1] < nb[i]);
      auto back = g.neighbors(nb[i]);
      CHECK(std::binary_search(back.begin(), back.end(), v));
    }
  }
  CHECK(degree_sum == 2 * g.num_edges());
  CHECK(degree_sum == g.total_volume());
}

}  // namespace

TEST_CASE("load_edge_list merges duplicates and drops self loops") {
  auto lg = parse("0 1\n1 0\n1 1\n0 2\n");
  CHECK(lg.graph.num_vertices() == 3);
  CHECK(lg.graph.num_edges() == 2);
  CHECK(lg.graph.degree(0) == 2);
  CHECK(lg.graph.degree(1) == 1);
  CHECK(lg.graph.degree(2) == 1);
  check_graph_invariants(lg.graph);
}

TEST_CASE("load_edge_list remaps labels contiguously") {
  auto lg = parse("5 9\n");
  CHECK(lg.graph.num_vertices() == 2);
  CHECK(lg.graph.num_edges() == 1);
  CHECK(lg.labels == std::vector<Label>{5, 9});

  std::ostringstream map;
  write_label_map(map, lg.labels);
  CHECK(map.str() == "5 0\n9 1\n");
}

TEST_CASE("load_edge_list skips comments and a size header") {
  auto lg = parse("% matrix market style\n# snap style\n3 3 2\n\n0 1\n1 2\n");
  CHECK(lg.graph.num_vertices() == 3);
  CHECK(lg.graph.num_edges() == 2);
}

TEST_CASE("load_edge_list reports the offending line") {
  try {
    parse("0 1\n# ok\n2 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse("0 1\n-1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("0 1 2\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("# nothing\n"), DataError);
  CHECK_THROWS_AS(parse("4 4\n"), DataError);
}

TEST_CASE("bundled Les Miserables network") {
  auto g = lesmis();
  CHECK(g.num_vertices() == 77);
  CHECK(g.num_edges() == 254);
  check_graph_invariants(g);
}

TEST_CASE("edge list round trip") {
  auto g = random_graph(40, 0.15, 3);
  std::ostringstream out;
  write_edge_list(out, g);
  auto back = parse(out.str());
  // isolated vertices vanish, the edge set does not
  CHECK(back.graph.num_edges() == g.num_edges());
  std::vector<Edge> relabeled;
  for (const auto& [u, v] : back.graph.edges()) {
    relabeled.emplace_back(static_cast<Vertex>(back.labels[u]), static_cast<Vertex>(back.labels[v]));
  }
  CHECK(relabeled == g.edges());
}

TEST_CASE("largest_connected_component") {
  SUBCASE("two triangles and a K4 keep the K4") {
    std::vector<Vertex> sizes{3, 3, 4};
    auto g = clique_union(sizes);
    auto lcc = largest_connected_component(g);
    CHECK(lcc.graph.num_vertices() == 4);
    CHECK(lcc.graph.num_edges() == 6);
    CHECK(lcc.new_to_old == std::vector<Vertex>{6, 7, 8, 9});
    CHECK_FALSE(lcc.old_to_new[0].has_value());
    CHECK(lcc.old_to_new[6] == 0u);
  }
  SUBCASE("connected graph maps to itself") {
    auto g = bridged_k5_pair();
    auto lcc = largest_connected_component(g);
    CHECK(lcc.graph.edges() == g.edges());
    for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(lcc.new_to_old[v] == v);
  }
  SUBCASE("ties go to the component with the smallest vertex") {
    std::vector<Vertex> sizes{3, 3};
    auto lcc = largest_connected_component(clique_union(sizes));
    CHECK(lcc.new_to_old == std::vector<Vertex>{0, 1, 2});
  }
  SUBCASE("idempotent") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      auto g = random_graph(60, 0.03, seed);
      auto once = largest_connected_component(g).graph;
      auto twice = largest_connected_component(once).graph;
      CHECK(once.edges() == twice.edges());
      CHECK(once.num_vertices() == twice.num_vertices());
    }
  }
  CHECK_THROWS_AS(largest_connected_component(Graph{}), DataError);
}

TEST_CASE("set_metrics by hand") {
  auto g = bridged_k5_pair();
  std::vector<Vertex> k5{0, 1, 2, 3, 4};
  auto s = set_metrics(g, k5);
  CHECK(s.cut == 1);
  CHECK(s.vol == 21);
  CHECK(s.internal == 20);
  CHECK(*conductance(s, g) == doctest::Approx(1.0 / 21.0));

  std::vector<Vertex> single{7};
  auto one = set_metrics(g, single);
  CHECK(one.cut == g.degree(7));
  CHECK(one.vol == g.degree(7));
  CHECK(one.internal == 0);

  std::vector<Vertex> bad{3, 10};
  CHECK_THROWS_AS(set_metrics(g, bad), std::out_of_range);
}

TEST_CASE("conductance is undefined on the empty set and on V") {
  auto g = bridged_k5_pair();
  CHECK_FALSE(conductance(set_metrics(g, {}), g).has_value());
  std::vector<Vertex> all(10);
  std::iota(all.begin(), all.end(), Vertex{0});
  CHECK_FALSE(conductance(set_metrics(g, all), g).has_value());
}

TEST_CASE("cut and conductance are complement symmetric") {
  auto g = random_graph(80, 0.08, 11);
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Vertex> in;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.num_vertices(); ++v) (rng.bernoulli(0.3) ? in : out).push_back(v);
    auto a = set_metrics(g, in);
    auto b = set_metrics(g, out);
    CHECK(a.cut == b.cut);
    CHECK(a.vol + b.vol == g.total_volume());
    CHECK(a.internal % 2 == 0);
    CHECK(conductance(a, g) == conductance(b, g));
  }
}

TEST_CASE("sweep on a path") {
  auto g = path(3);
  std::vector<Vertex> order{0, 1, 2};
  auto curve = sweep(g, order);
  REQUIRE(curve.prefix_conductance.size() == 3);
  CHECK(*curve.prefix_conductance[0] == doctest::Approx(1.0));
  CHECK(*curve.prefix_conductance[1] == doctest::Approx(1.0));
  CHECK_FALSE(curve.prefix_conductance[2].has_value());
  CHECK(curve.best_index == 0u);
}

TEST_CASE("sweep finds the bridged K5") {
  auto g = bridged_k5_pair();
  std::vector<Vertex> order{1, 2, 3, 4, 0, 5, 6, 7, 8, 9};
  auto curve = sweep(g, order);
  CHECK(curve.best_index == 4u);
  CHECK(*curve.best_conductance == doctest::Approx(1.0 / 21.0));
  auto best = curve.best_set();
  std::sort(best.begin(), best.end());
  CHECK(best == std::vector<Vertex>{0, 1, 2, 3, 4});
}

TEST_CASE("sweep rejects repeated vertices") {
  auto g = path(4);
  std::vector<Vertex> order{0, 1, 0};
  CHECK_THROWS_AS(sweep(g, order), std::invalid_argument);
  // the workspace is left clean after the failure
  SweepWorkspace ws(4);
  CHECK_THROWS_AS(sweep(g, order, ws), std::invalid_argument);
  std::vector<Vertex> ok{0, 1, 2, 3};
  CHECK(sweep(g, ok, ws).prefix_cut == std::vector<Count>{1, 1, 1, 0});
}

TEST_CASE("incremental sweep matches from-scratch counts") {
  Rng rng(99);
  SweepWorkspace ws;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    Vertex n = static_cast<Vertex>(20 + rng.below(181));  // up to 200
    auto g = random_graph(n, 4.0 / n, seed);
    auto a = oracle::adjacency(g);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    for (Vertex i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    auto curve = sweep(g, order, ws);
    std::set<Vertex> prefix;
    std::optional<double> best;
    for (Vertex i = 0; i < n; ++i) {
      prefix.insert(order[i]);
      auto c = oracle::cut_of(a, prefix);
      CHECK(curve.prefix_cut[i] == c.cut);
      CHECK(curve.prefix_vol[i] == c.vol);
      auto p = oracle::phi(c, g.total_volume());
      CHECK(curve.prefix_conductance[i] == p);
      if (p && (!best || *p < *best)) best = p;
    }
    CHECK(curve.best_conductance == best);
  }
}
