#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "egonet/graph.hpp"

namespace egonet {

struct ForestFireParams {
  Vertex n = 25000;
  Vertex k = 2;  // initial clique
  double p = 0.4;  // burn probability
  std::uint64_t rng_seed = 1;

  /// Throws std::invalid_argument unless n >= k >= 1 and 0 <= p < 1.
  void validate() const;
};

/// Undirected forest fire growth. Each new node picks a uniform ambassador and
/// burns outward breadth first: every burned node u lights a geometric number
/// (mean p / (1 - p)) of its not yet burned neighbors, chosen uniformly. The
/// new node links to every burned node.
Graph forest_fire(const ForestFireParams& params);

/// A bridge joins clique `from` to clique `to` by one edge between their
/// lowest-numbered vertices.
struct CliqueBridge {
  std::size_t from = 0;
  std::size_t to = 0;
};

/// Disjoint cliques on consecutive vertex ranges, plus the listed bridges.
Graph clique_union(std::span<const Vertex> sizes, std::span<const CliqueBridge> bridges = {});

/// Bridges 0-1, 1-2, ..., chaining `count` cliques into a path.
std::vector<CliqueBridge> chain_bridges(std::size_t count);

/// G(n, p): each pair independently with probability p.
Graph random_graph(Vertex n, double p, std::uint64_t rng_seed);

}  // namespace egonet
