#include "egonet/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace egonet {

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  std::vector<Edge> arcs;
  arcs.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::out_of_range("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") outside vertex range " + std::to_string(n));
    }
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.degrees_.assign(n, 0);
  for (const auto& [u, v] : arcs) ++g.degrees_[u];
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + g.degrees_[v];
  g.targets_.reserve(arcs.size());
  for (const auto& arc : arcs) g.targets_.push_back(arc.second);
  g.max_degree_ = n == 0 ? 0 : *std::max_element(g.degrees_.begin(), g.degrees_.end());
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto a = neighbors(u);
  auto b = neighbors(v);
  if (a.size() > b.size()) return std::binary_search(b.begin(), b.end(), u);
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> members) {
  std::vector<Vertex> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> remap(g.num_vertices(), kAbsent);
  for (std::size_t i = 0; i < sorted.size(); ++i) remap.at(sorted[i]) = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : sorted) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && remap[v] != kAbsent) edges.emplace_back(remap[u], remap[v]);
    }
  }
  return Graph::from_edges(static_cast<Vertex>(sorted.size()), edges);
}

std::vector<Vertex> connected_components(const Graph& g, Vertex* count) {
  constexpr Vertex kUnseen = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> comp(g.num_vertices(), kUnseen);
  std::vector<Vertex> stack;
  Vertex next = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] != kUnseen) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (comp[w] == kUnseen) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return comp;
}

bool is_connected(const Graph& g) {
  Vertex count = 0;
  connected_components(g, &count);
  return count == 1;
}

ComponentResult largest_connected_component(const Graph& g) {
  if (g.num_vertices() == 0) throw DataError("largest connected component of an empty graph");
  Vertex count = 0;
  auto comp = connected_components(g, &count);
  std::vector<Vertex> sizes(count, 0);
  for (Vertex c : comp) ++sizes[c];
  // Components are numbered by smallest member, so the first maximum wins ties.
  Vertex best = static_cast<Vertex>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  ComponentResult result;
  result.old_to_new.assign(g.num_vertices(), std::nullopt);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (comp[v] == best) {
      result.old_to_new[v] = static_cast<Vertex>(result.new_to_old.size());
      result.new_to_old.push_back(v);
    }
  }
  result.graph = induced_subgraph(g, result.new_to_old);
  return result;
}

VertexSet set_metrics(const Graph& g, std::span<const Vertex> members) {
  VertexSet s;
  s.members.assign(members.begin(), members.end());
  std::sort(s.members.begin(), s.members.end());
  s.members.erase(std::unique(s.members.begin(), s.members.end()), s.members.end());
  if (!s.members.empty() && s.members.back() >= g.num_vertices()) {
    throw std::out_of_range("vertex " + std::to_string(s.members.back()) + " outside graph of " +
                            std::to_string(g.num_vertices()) + " vertices");
  }
  for (Vertex u : s.members) {
    s.vol += g.degree(u);
    for (Vertex w : g.neighbors(u)) {
      if (!std::binary_search(s.members.begin(), s.members.end(), w)) ++s.cut;
    }
  }
  s.internal = s.vol - s.cut;
  return s;
}

std::optional<double> conductance(Count cut, Count vol, Count total_volume) {
  if (vol > total_volume) return std::nullopt;
  Count smaller = std::min(vol, total_volume - vol);
  if (smaller == 0) return std::nullopt;
  return static_cast<double>(cut) / static_cast<double>(smaller);
}

std::optional<double> conductance(const VertexSet& s, const Graph& g) {
  if (s.members.empty()) return std::nullopt;
  return conductance(s.cut, s.vol, g.total_volume());
}

std::vector<Vertex> SweepCurve::best_set() const {
  if (!best_index) return {};
  return {order.begin(), order.begin() + static_cast<std::ptrdiff_t>(*best_index + 1)};
}

SweepCurve sweep(const Graph& g, std::span<const Vertex> order) {
  SweepWorkspace ws(g.num_vertices());
  return sweep(g, order, ws);
}

SweepCurve sweep(const Graph& g, std::span<const Vertex> order, SweepWorkspace& ws) {
  if (ws.mark_.size() != g.num_vertices()) ws.mark_.assign(g.num_vertices(), 0);
  auto& mark = ws.mark_;

  SweepCurve curve;
  curve.order.assign(order.begin(), order.end());
  curve.prefix_cut.reserve(order.size());
  curve.prefix_vol.reserve(order.size());
  curve.prefix_conductance.reserve(order.size());

  auto clear_marks = [&](std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i) mark[order[i]] = 0;
  };

  Count cut = 0;
  Count vol = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    if (v >= g.num_vertices()) {
      clear_marks(i);
      throw std::out_of_range("sweep vertex " + std::to_string(v) + " outside graph");
    }
    if (mark[v]) {
      clear_marks(i);
      throw std::invalid_argument("sweep order repeats vertex " + std::to_string(v));
    }
    Count inside = 0;
    for (Vertex w : g.neighbors(v)) inside += mark[w] ? 1 : 0;
    mark[v] = 1;
    cut = cut + g.degree(v) - 2 * inside;
    vol += g.degree(v);
    curve.prefix_cut.push_back(cut);
    curve.prefix_vol.push_back(vol);
    auto phi = conductance(cut, vol, g.total_volume());
    curve.prefix_conductance.push_back(phi);
    if (phi && (!curve.best_conductance || *phi < *curve.best_conductance)) {
      curve.best_conductance = phi;
      curve.best_index = i;
    }
  }
  clear_marks(order.size());
  return curve;
}

}  // namespace egonet
