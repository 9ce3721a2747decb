#include "egonet/clustering.hpp"

#include <algorithm>
#include <cmath>

#include "egonet/cores.hpp"
#include "egonet/parallel.hpp"

namespace egonet {
namespace {

// Neighbors of each vertex that come later in (degree, id) order.
struct ForwardAdjacency {
  std::vector<Count> offsets;
  std::vector<Vertex> targets;

  std::span<const Vertex> out(Vertex v) const {
    return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
  }
};

ForwardAdjacency degree_oriented(const Graph& g) {
  auto before = [&](Vertex a, Vertex b) {
    return g.degree(a) < g.degree(b) || (g.degree(a) == g.degree(b) && a < b);
  };
  ForwardAdjacency fwd;
  fwd.offsets.assign(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
  fwd.targets.reserve(g.num_edges());
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (before(u, v)) fwd.targets.push_back(v);
    }
    fwd.offsets[u + 1] = fwd.targets.size();
  }
  return fwd;
}

}  // namespace

std::vector<Count> triangle_counts(const Graph& g, unsigned threads) {
  const Vertex n = g.num_vertices();
  const auto fwd = degree_oriented(g);
  threads = std::max(1u, threads);
  std::vector<std::vector<Count>> partial(threads, std::vector<Count>(n, 0));

  parallel_for(threads, threads, [&](std::size_t t) {
    auto& counts = partial[t];
    for (Vertex u = static_cast<Vertex>(t); u < n; u += threads) {
      auto out_u = fwd.out(u);
      for (Vertex v : out_u) {
        auto out_v = fwd.out(v);
        auto a = out_u.begin();
        auto b = out_v.begin();
        while (a != out_u.end() && b != out_v.end()) {
          if (*a < *b) {
            ++a;
          } else if (*b < *a) {
            ++b;
          } else {
            ++counts[u];
            ++counts[v];
            ++counts[*a];
            ++a;
            ++b;
          }
        }
      }
    }
  });

  std::vector<Count> total = std::move(partial[0]);
  for (unsigned t = 1; t < threads; ++t) {
    for (Vertex v = 0; v < n; ++v) total[v] += partial[t][v];
  }
  return total;
}

Count triangle_total(const Graph& g) {
  Count total = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    auto nu = g.neighbors(u);
    for (Vertex v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      auto a = std::upper_bound(nu.begin(), nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++total;
          ++a;
          ++b;
        }
      }
    }
  }
  return total;
}

GlobalClustering global_clustering(const Graph& g, const std::vector<Count>& triangles) {
  GlobalClustering gc;
  double local_sum = 0.0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    Count w = wedges_at(g.degree(v));
    gc.total_wedges += w;
    gc.closed_wedges += triangles[v];
    if (w > 0) {
      local_sum += static_cast<double>(triangles[v]) / static_cast<double>(w);
    }
  }
  if (gc.total_wedges > 0) {
    gc.kappa = static_cast<double>(gc.closed_wedges) / static_cast<double>(gc.total_wedges);
  }
  // vertices of degree < 2 count as C_v = 0
  if (g.num_vertices() > 0) gc.mean_local = local_sum / static_cast<double>(g.num_vertices());
  gc.wedge_weights.assign(g.num_vertices(), 0.0);
  if (gc.total_wedges > 0) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      gc.wedge_weights[v] =
          static_cast<double>(wedges_at(g.degree(v))) / static_cast<double>(gc.total_wedges);
    }
  }
  return gc;
}

NeighborhoodStats neighborhood_stats(const Graph& g, const std::vector<Count>& triangles) {
  const Vertex n = g.num_vertices();
  NeighborhoodStats s;
  s.degree.resize(n);
  s.wedges.resize(n);
  s.triangles = triangles;
  s.local_clustering.resize(n);
  s.ball_size.resize(n);
  s.ball_cut.resize(n);
  s.ball_vol.resize(n);
  s.ball_conductance.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const Count d = g.degree(v);
    s.degree[v] = d;
    s.wedges[v] = wedges_at(d);
    if (s.wedges[v] > 0) {
      s.local_clustering[v] = static_cast<double>(triangles[v]) / static_cast<double>(s.wedges[v]);
    }
    Count vol = d;
    for (Vertex u : g.neighbors(v)) vol += g.degree(u);
    s.ball_size[v] = d + 1;
    s.ball_vol[v] = vol;
    s.ball_cut[v] = vol - 2 * (d + triangles[v]);
    s.ball_conductance[v] = conductance(s.ball_cut[v], vol, g.total_volume());
  }
  return s;
}

NeighborhoodStats neighborhood_stats(const Graph& g, unsigned threads) {
  return neighborhood_stats(g, triangle_counts(g, threads));
}

std::vector<Vertex> ball(const Graph& g, Vertex v) {
  std::vector<Vertex> members;
  members.reserve(g.degree(v) + 1);
  members.push_back(v);
  for (Vertex u : g.neighbors(v)) members.push_back(u);
  return members;
}

IdentityCheck check_identity_kappa(const Graph& g) {
  IdentityCheck check;
  for (Count t : triangle_counts(g)) check.lhs += t;
  check.rhs = 3 * triangle_total(g);
  return check;
}

IdentityCheck check_identity_nbd_cut(const Graph& g) {
  IdentityCheck check;
  std::vector<Vertex> stamp(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const Vertex mark = v + 1;
    stamp[v] = mark;
    for (Vertex u : g.neighbors(v)) stamp[u] = mark;
    Count cut = 0;
    for (Vertex u : g.neighbors(v)) {
      for (Vertex w : g.neighbors(u)) cut += stamp[w] == mark ? 0 : 1;
    }
    check.lhs += cut;
  }
  Count wedges = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) wedges += wedges_at(g.degree(v));
  check.rhs = 2 * (wedges - 3 * triangle_total(g));
  return check;
}

TheoremReport theorem_diagnostics(const Graph& g, double beta) {
  TheoremReport r;
  r.beta = beta;
  r.max_degree = g.max_degree();
  const auto stats = neighborhood_stats(g);
  const auto gc = global_clustering(g, stats.triangles);
  r.kappa = gc.kappa;

  const auto cores = core_decomposition(g);
  r.max_core = cores.max_core();
  if (r.kappa) {
    r.core_bound = *r.kappa * std::pow(static_cast<double>(r.max_degree), beta) / 2.0;
    r.core_bound_met = static_cast<double>(r.max_core) >= *r.core_bound;
    r.conductance_bound = 4.0 * (1.0 - *r.kappa) / (3.0 - 2.0 * *r.kappa);
  }
  for (const auto& phi : stats.ball_conductance) {
    if (phi && (!r.min_ball_conductance || *phi < *r.min_ball_conductance)) r.min_ball_conductance = phi;
  }
  if (r.conductance_bound && r.min_ball_conductance) {
    r.best_ball_at_most_bound = *r.min_ball_conductance <= *r.conductance_bound;
    r.best_ball_at_least_bound = *r.min_ball_conductance >= *r.conductance_bound;
  }
  return r;
}

DegreeDistribution degree_distribution(const Graph& g, double beta) {
  DegreeDistribution dd;
  dd.beta = beta;
  std::vector<Count> freq(g.max_degree() + 1, 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) ++freq[g.degree(v)];
  for (Count d = 0; d < freq.size(); ++d) {
    if (freq[d] > 0) dd.frequency.emplace_back(d, freq[d]);
  }
  dd.high_degree_threshold = std::pow(static_cast<double>(g.max_degree()), beta);
  Count total = 0;
  Count high = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    Count w = wedges_at(g.degree(v));
    total += w;
    if (static_cast<double>(g.degree(v)) > dd.high_degree_threshold) high += w;
  }
  if (total > 0) dd.high_degree_wedge_share = static_cast<double>(high) / static_cast<double>(total);
  return dd;
}

}  // namespace egonet
