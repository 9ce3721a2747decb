#pragma once

#include <optional>
#include <vector>

#include "egonet/community.hpp"
#include "egonet/graph.hpp"

namespace egonet {

struct BiconnectedComponents {
  // Edges of each biconnected component, as (u, v) with u < v.
  std::vector<std::vector<Edge>> components;
  std::vector<Vertex> articulation_points;  // sorted
  std::vector<Edge> bridges;                // sorted, u < v
  // Index into `components`: most edges, then most vertices, then smallest
  // vertex id. Empty for a graph without edges.
  std::optional<std::size_t> largest;

  std::vector<Vertex> component_vertices(std::size_t i) const;
};

/// Iterative depth-first decomposition (explicit stack, safe on long paths).
BiconnectedComponents biconnected_components(const Graph& g);

struct WhiskerSet {
  std::vector<Edge> bridges;
  std::vector<Vertex> largest_bicomp;
  // Sorted by decreasing volume, ties by smallest member.
  std::vector<Community> whiskers;

  const Community* best() const { return whiskers.empty() ? nullptr : &whiskers.front(); }
};

/// Subgraphs hanging off the largest biconnected component by one bridge.
/// By default only maximal whiskers are listed; with `nested` every subtree of
/// the bridge tree outside the core is reported, whiskers on whiskers
/// included.
WhiskerSet whiskers(const Graph& g, bool nested = false);

}  // namespace egonet
