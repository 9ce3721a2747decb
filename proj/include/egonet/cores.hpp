#pragma once

#include <vector>

#include "egonet/community.hpp"
#include "egonet/graph.hpp"

namespace egonet {

struct CoreDecomposition {
  std::vector<Count> core_number;
  // Peeling order: removal_order[i] is the vertex removed at step i.
  std::vector<Vertex> removal_order;
  std::vector<Vertex> removal_step;

  Count max_core() const;
  /// Vertices with core number >= k, sorted.
  std::vector<Vertex> core(Count k) const;
};

/// Min-degree peeling; among vertices of equal current degree the smallest id
/// is removed first.
CoreDecomposition core_decomposition(const Graph& g);

struct CoreLevel {
  Count k = 0;
  Community best;  // best suffix of the removal order inside the k-core
};

struct CoreSweep {
  // The sweep adds vertices in reverse removal order, so prefix i of this
  // curve is the removal-order suffix of length i + 1.
  SweepCurve curve;
  // One entry per k = 1..max_core that has a suffix with defined conductance.
  std::vector<CoreLevel> levels;
};

/// Conductance of every suffix {v_i, ..., v_n} of the removal order, and for
/// each k the best suffix contained in the k-core.
CoreSweep core_sweep(const Graph& g, const CoreDecomposition& cores);

}  // namespace egonet
