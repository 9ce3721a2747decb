#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "egonet/edge_list.hpp"
#include "egonet/generators.hpp"
#include "egonet/graph.hpp"

namespace egonet::testing {

inline std::filesystem::path data_dir() { return EGONET_DATA_DIR; }

inline Graph lesmis() { return load_edge_list(data_dir() / "lesmis.txt").graph; }

inline Graph make_graph(Vertex n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

inline Graph complete(Vertex n) {
  std::vector<Vertex> sizes{n};
  return clique_union(sizes);
}

// Two K5 on {0..4} and {5..9}, joined by the edge 0-5.
inline Graph bridged_k5_pair() {
  std::vector<Vertex> sizes{5, 5};
  std::vector<CliqueBridge> bridges{{0, 1}};
  return clique_union(sizes, bridges);
}

inline Graph path(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

// Center 0 with `leaves` leaves.
inline Graph star(Vertex leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

// Connected G(n, p) sample: retries seeds until connected.
inline Graph connected_random(Vertex n, double p, std::uint64_t seed) {
  for (std::uint64_t s = seed;; s += 1000003) {
    auto g = random_graph(n, p, s);
    if (is_connected(g)) return g;
  }
}

}  // namespace egonet::testing
