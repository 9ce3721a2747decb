#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "egonet/common.hpp"

namespace egonet {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable undirected simple graph stored as sorted compressed adjacency.
///
/// Vertex ids are contiguous in [0, n). Every edge is stored in both
/// directions, lists are sorted and duplicate-free, and there are no loops.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `n` vertices. Self-loops are dropped and duplicate or
  /// reversed edges merged. Throws std::out_of_range for ids >= n.
  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex num_vertices() const { return static_cast<Vertex>(degrees_.size()); }
  Count num_edges() const { return targets_.size() / 2; }
  Count total_volume() const { return targets_.size(); }

  Count degree(Vertex v) const { return degrees_[v]; }
  std::span<const Count> degrees() const { return degrees_; }
  Count max_degree() const { return max_degree_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  bool has_edge(Vertex u, Vertex v) const;

  /// Each undirected edge once, as (u, v) with u < v, in sorted order.
  std::vector<Edge> edges() const;

 private:
  std::vector<Count> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<Count> degrees_;
  Count max_degree_ = 0;
};

/// Induced subgraph on `members` (sorted, relabeled in increasing order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> members);

/// Connected component id of every vertex; ids are assigned in order of each
/// component's smallest vertex.
std::vector<Vertex> connected_components(const Graph& g, Vertex* count = nullptr);

bool is_connected(const Graph& g);

struct ComponentResult {
  Graph graph;
  // old_to_new[v] is the new id of v, or std::nullopt if v was dropped.
  std::vector<std::optional<Vertex>> old_to_new;
  // new_to_old[i] is the original id of new vertex i.
  std::vector<Vertex> new_to_old;
};

/// Largest connected component by vertex count. Ties go to the component whose
/// smallest vertex id is smallest. Throws DataError on an empty graph.
ComponentResult largest_connected_component(const Graph& g);

// ---------------------------------------------------------------------------
// Cuts, volumes and conductance

/// A vertex set with its boundary counts. `internal` is twice the number of
/// edges with both endpoints inside (so internal = vol - cut).
struct VertexSet {
  std::vector<Vertex> members;  // sorted, unique
  Count cut = 0;
  Count vol = 0;
  Count internal = 0;
};

/// Direct count of cut and volume. Duplicates in `members` are ignored.
/// Throws std::out_of_range on ids outside the graph.
VertexSet set_metrics(const Graph& g, std::span<const Vertex> members);

/// cut / min(vol, total - vol); nullopt when the smaller side has no volume.
std::optional<double> conductance(Count cut, Count vol, Count total_volume);

std::optional<double> conductance(const VertexSet& s, const Graph& g);

/// The smaller of |S| and |V \ S|, the size every profile reports.
inline Vertex smaller_side(std::size_t size, Vertex n) {
  auto s = static_cast<Vertex>(size);
  return s <= n - s ? s : n - s;
}

// ---------------------------------------------------------------------------
// Sweep cuts

struct SweepCurve {
  std::vector<Vertex> order;
  std::vector<Count> prefix_cut;
  std::vector<Count> prefix_vol;
  // nullopt where the prefix or its complement has zero volume.
  std::vector<std::optional<double>> prefix_conductance;
  std::optional<std::size_t> best_index;
  std::optional<double> best_conductance;

  /// Members of the best prefix (empty when no prefix is defined).
  std::vector<Vertex> best_set() const;
};

/// Scratch space for repeated sweeps over the same graph; keeps membership
/// marks between calls so that a sweep costs O(vol(order)) instead of O(n).
class SweepWorkspace {
 public:
  explicit SweepWorkspace(Vertex n = 0) : mark_(n, 0) {}

 private:
  friend SweepCurve sweep(const Graph&, std::span<const Vertex>, SweepWorkspace&);
  std::vector<char> mark_;
};

/// Conductance of every prefix of `order`, maintained incrementally. The best
/// prefix is the first one attaining the minimum. Throws std::invalid_argument
/// on a repeated vertex.
SweepCurve sweep(const Graph& g, std::span<const Vertex> order);
SweepCurve sweep(const Graph& g, std::span<const Vertex> order, SweepWorkspace& ws);

}  // namespace egonet
