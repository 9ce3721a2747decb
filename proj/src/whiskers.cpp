#include "egonet/whiskers.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace egonet {
namespace {

constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

Edge ordered(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

std::vector<Vertex> BiconnectedComponents::component_vertices(std::size_t i) const {
  std::vector<Vertex> out;
  for (const auto& [u, v] : components.at(i)) {
    out.push_back(u);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BiconnectedComponents biconnected_components(const Graph& g) {
  const Vertex n = g.num_vertices();
  BiconnectedComponents out;
  std::vector<Vertex> disc(n, kNone);
  std::vector<Vertex> low(n, 0);
  std::vector<Vertex> parent(n, kNone);
  std::vector<char> is_articulation(n, 0);
  std::vector<Edge> edge_stack;

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  Vertex time = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kNone) continue;
    disc[root] = low[root] = time++;
    stack.push_back({root, 0});
    Vertex root_children = 0;

    while (!stack.empty()) {
      Frame& f = stack.back();
      const Vertex v = f.v;
      auto nbrs = g.neighbors(v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (disc[w] == kNone) {
          parent[w] = v;
          disc[w] = low[w] = time++;
          edge_stack.emplace_back(v, w);
          if (v == root) ++root_children;
          stack.push_back({w, 0});
        } else if (w != parent[v] && disc[w] < disc[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }

      stack.pop_back();
      const Vertex p = parent[v];
      if (p == kNone) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        if (p != root) is_articulation[p] = 1;
        std::vector<Edge> comp;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          comp.push_back(ordered(e.first, e.second));
          if (e.first == p && e.second == v) break;
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
      }
      if (low[v] > disc[p]) out.bridges.push_back(ordered(p, v));
    }
    if (root_children >= 2) is_articulation[root] = 1;
  }

  for (Vertex v = 0; v < n; ++v) {
    if (is_articulation[v]) out.articulation_points.push_back(v);
  }
  std::sort(out.bridges.begin(), out.bridges.end());

  // most edges, then most vertices, then smallest vertex
  std::tuple<std::size_t, std::size_t, Vertex> best_key{0, 0, 0};
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    auto verts = out.component_vertices(i);
    std::tuple<std::size_t, std::size_t, Vertex> key{out.components[i].size(), verts.size(), verts.front()};
    auto better = [](const auto& a, const auto& b) {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
      if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) > std::get<1>(b);
      return std::get<2>(a) < std::get<2>(b);
    };
    if (!out.largest || better(key, best_key)) {
      out.largest = i;
      best_key = key;
    }
  }
  return out;
}

WhiskerSet whiskers(const Graph& g, bool nested) {
  if (g.num_vertices() > 0 && !is_connected(g)) throw DataError("whiskers need a connected graph");
  const Vertex n = g.num_vertices();
  const auto bcc = biconnected_components(g);
  WhiskerSet out;
  out.bridges = bcc.bridges;
  if (!bcc.largest) return out;
  out.largest_bicomp = bcc.component_vertices(*bcc.largest);

  auto is_bridge = [&](Vertex a, Vertex b) {
    return std::binary_search(bcc.bridges.begin(), bcc.bridges.end(), ordered(a, b));
  };

  // 2-edge-connected pieces: components once bridges are removed.
  std::vector<Vertex> piece(n, kNone);
  Vertex pieces = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (piece[s] != kNone) continue;
    piece[s] = pieces;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (piece[w] == kNone && !is_bridge(u, w)) {
          piece[w] = pieces;
          stack.push_back(w);
        }
      }
    }
    ++pieces;
  }

  // Bridge tree. The core region is every piece touching the largest
  // biconnected component (two pieces only when that component is itself a
  // bridge, i.e. the graph is a tree).
  std::vector<std::vector<Vertex>> tree(pieces);
  for (const auto& [a, b] : bcc.bridges) {
    tree[piece[a]].push_back(piece[b]);
    tree[piece[b]].push_back(piece[a]);
  }
  std::vector<char> in_core(pieces, 0);
  for (Vertex v : out.largest_bicomp) in_core[piece[v]] = 1;

  std::vector<std::vector<Vertex>> piece_members(pieces);
  for (Vertex v = 0; v < n; ++v) piece_members[piece[v]].push_back(v);

  // Preorder over the non-core pieces; each subtree is a contiguous range.
  std::vector<Vertex> preorder;
  std::vector<std::size_t> subtree_end(pieces, 0);
  std::vector<Vertex> tree_parent(pieces, kNone);
  std::vector<Vertex> top_level;
  for (Vertex c = 0; c < pieces; ++c) {
    if (!in_core[c]) continue;
    for (Vertex child : tree[c]) {
      if (!in_core[child]) top_level.push_back(child);
    }
  }
  std::sort(top_level.begin(), top_level.end());
  struct Frame {
    Vertex node;
    std::size_t next;
  };
  std::vector<Frame> frames;
  for (Vertex top : top_level) {
    tree_parent[top] = kNone;
    preorder.push_back(top);
    frames.push_back({top, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& kids = tree[f.node];
      if (f.next < kids.size()) {
        Vertex child = kids[f.next++];
        if (in_core[child] || child == tree_parent[f.node]) continue;
        tree_parent[child] = f.node;
        preorder.push_back(child);
        frames.push_back({child, 0});
      } else {
        subtree_end[f.node] = preorder.size();
        frames.pop_back();
      }
    }
  }
  std::vector<std::size_t> position(pieces, 0);
  for (std::size_t i = 0; i < preorder.size(); ++i) position[preorder[i]] = i;

  auto subtree_members = [&](Vertex top) {
    std::vector<Vertex> members;
    for (std::size_t i = position[top]; i < subtree_end[top]; ++i) {
      const auto& pm = piece_members[preorder[i]];
      members.insert(members.end(), pm.begin(), pm.end());
    }
    return members;
  };

  std::vector<Vertex> roots = nested ? preorder : top_level;
  for (Vertex top : roots) {
    out.whiskers.push_back(make_community(g, subtree_members(top), method::kWhisker));
  }
  std::sort(out.whiskers.begin(), out.whiskers.end(), [](const Community& a, const Community& b) {
    if (a.vol != b.vol) return a.vol > b.vol;
    return a.members.front() < b.members.front();
  });
  return out;
}

}  // namespace egonet
