#include "egonet/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "egonet/random.hpp"

namespace egonet {

void ForestFireParams::validate() const {
  if (k < 1 || n < k) throw std::invalid_argument("forest fire needs n >= k >= 1");
  if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("forest fire burn probability must lie in [0, 1)");
}

Graph forest_fire(const ForestFireParams& params) {
  params.validate();
  Rng rng(params.rng_seed);
  std::vector<std::vector<Vertex>> adj(params.n);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < params.k; ++u) {
    for (Vertex v = u + 1; v < params.k; ++v) {
      adj[u].push_back(v);
      adj[v].push_back(u);
      edges.emplace_back(u, v);
    }
  }

  // burned[v] == node id of the fire that last burned v
  std::vector<Vertex> burned(params.n, params.n);
  std::vector<Vertex> frontier;
  std::vector<Vertex> lit;
  std::vector<Vertex> candidates;
  for (Vertex node = params.k; node < params.n; ++node) {
    Vertex ambassador = static_cast<Vertex>(rng.below(node));
    lit.clear();
    frontier.clear();
    burned[ambassador] = node;
    lit.push_back(ambassador);
    frontier.push_back(ambassador);
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      Vertex u = frontier[head];
      auto want = rng.geometric_failures(params.p);
      if (want == 0) continue;
      candidates.clear();
      for (Vertex w : adj[u]) {
        if (burned[w] != node) candidates.push_back(w);
      }
      auto take = static_cast<std::size_t>(std::min<std::uint64_t>(want, candidates.size()));
      for (std::size_t i = 0; i < take; ++i) {
        auto j = i + static_cast<std::size_t>(rng.below(candidates.size() - i));
        std::swap(candidates[i], candidates[j]);
        Vertex w = candidates[i];
        burned[w] = node;
        lit.push_back(w);
        frontier.push_back(w);
      }
    }
    for (Vertex w : lit) {
      adj[w].push_back(node);
      adj[node].push_back(w);
      edges.emplace_back(w, node);
    }
  }
  return Graph::from_edges(params.n, edges);
}

Graph clique_union(std::span<const Vertex> sizes, std::span<const CliqueBridge> bridges) {
  if (sizes.empty()) throw std::invalid_argument("clique_union needs at least one clique");
  std::vector<Vertex> first(sizes.size());
  Vertex n = 0;
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    first[c] = n;
    for (Vertex i = 0; i < sizes[c]; ++i) {
      for (Vertex j = i + 1; j < sizes[c]; ++j) edges.emplace_back(n + i, n + j);
    }
    n += sizes[c];
  }
  for (const auto& b : bridges) {
    if (b.from >= sizes.size() || b.to >= sizes.size()) throw std::invalid_argument("bridge names a missing clique");
    edges.emplace_back(first[b.from], first[b.to]);
  }
  return Graph::from_edges(n, edges);
}

std::vector<CliqueBridge> chain_bridges(std::size_t count) {
  std::vector<CliqueBridge> out;
  for (std::size_t i = 0; i + 1 < count; ++i) out.push_back({i, i + 1});
  return out;
}

Graph random_graph(Vertex n, double p, std::uint64_t rng_seed) {
  if (n < 1) throw std::invalid_argument("random_graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  Rng rng(rng_seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform() < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace egonet
