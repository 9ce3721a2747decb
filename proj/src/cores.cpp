#include "egonet/cores.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace egonet {

Count CoreDecomposition::max_core() const {
  return core_number.empty() ? 0 : *std::max_element(core_number.begin(), core_number.end());
}

std::vector<Vertex> CoreDecomposition::core(Count k) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < core_number.size(); ++v) {
    if (core_number[v] >= k) out.push_back(v);
  }
  return out;
}

CoreDecomposition core_decomposition(const Graph& g) {
  const Vertex n = g.num_vertices();
  using MinHeap = std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>>;

  // Bucket queue keyed by current degree. A vertex is re-inserted whenever its
  // degree drops; stale entries are skipped on pop.
  std::vector<Count> degree(g.degrees().begin(), g.degrees().end());
  std::vector<MinHeap> buckets(g.max_degree() + 1);
  for (Vertex v = 0; v < n; ++v) buckets[degree[v]].push(v);
  std::vector<char> removed(n, 0);

  CoreDecomposition out;
  out.core_number.assign(n, 0);
  out.removal_step.assign(n, 0);
  out.removal_order.reserve(n);

  Count level = 0;
  Count current = 0;  // smallest possibly non-empty bucket
  while (out.removal_order.size() < n) {
    while (buckets[current].empty()) ++current;
    Vertex v = buckets[current].top();
    buckets[current].pop();
    if (removed[v] || degree[v] != current) continue;

    level = std::max(level, current);
    out.core_number[v] = level;
    out.removal_step[v] = static_cast<Vertex>(out.removal_order.size());
    out.removal_order.push_back(v);
    removed[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      --degree[w];
      buckets[degree[w]].push(w);
      current = std::min(current, degree[w]);
    }
  }
  return out;
}

CoreSweep core_sweep(const Graph& g, const CoreDecomposition& cores) {
  std::vector<Vertex> reversed(cores.removal_order.rbegin(), cores.removal_order.rend());

  CoreSweep out;
  out.curve = sweep(g, reversed);
  const Count max_core = cores.max_core();

  // Core numbers are non-decreasing along the removal order, so a suffix lies
  // in the k-core exactly when its earliest removed vertex has core >= k.
  std::vector<std::optional<std::size_t>> best_at(max_core + 1);
  for (std::size_t i = 0; i < reversed.size(); ++i) {
    const auto& phi = out.curve.prefix_conductance[i];
    if (!phi) continue;
    Count c = cores.core_number[reversed[i]];
    auto& slot = best_at[c];
    if (!slot || *phi < *out.curve.prefix_conductance[*slot]) slot = i;
  }

  std::optional<std::size_t> running;
  std::vector<CoreLevel> levels;
  for (Count k = max_core; k >= 1; --k) {
    if (best_at[k] && (!running || *out.curve.prefix_conductance[*best_at[k]] <
                                       *out.curve.prefix_conductance[*running])) {
      running = best_at[k];
    }
    if (!running) continue;
    std::span<const Vertex> members(reversed.data(), *running + 1);
    Provenance prov;
    prov.k = k;
    CoreLevel level;
    level.k = k;
    level.best = make_community(g, members, method::kCore, prov);
    levels.push_back(std::move(level));
  }
  std::reverse(levels.begin(), levels.end());
  out.levels = std::move(levels);
  return out;
}

}  // namespace egonet
