#pragma once

#include <optional>
#include <vector>

#include "egonet/graph.hpp"

namespace egonet {

/// Number of edges among the neighbors of each vertex (triangles at v).
/// Exact; uses degree-ordered neighbor intersection.
std::vector<Count> triangle_counts(const Graph& g, unsigned threads = 1);

/// Number of triangles in the graph, counted once each with an id-ordered
/// forward intersection (independent of triangle_counts).
Count triangle_total(const Graph& g);

inline Count wedges_at(Count degree) { return degree * (degree - (degree > 0 ? 1 : 0)) / 2; }

struct GlobalClustering {
  Count total_wedges = 0;
  Count closed_wedges = 0;
  // closed / total; nullopt when the graph has no wedges.
  std::optional<double> kappa;
  // Mean of C_v over all vertices, taking C_v = 0 below degree 2; nullopt
  // only for the empty graph.
  std::optional<double> mean_local;
  // |W_v| / |W|, zero for degree < 2.
  std::vector<double> wedge_weights;
};

GlobalClustering global_clustering(const Graph& g, const std::vector<Count>& triangles);

/// Per-vertex statistics of the ball B1(v) = {v} plus its neighbors.
struct NeighborhoodStats {
  std::vector<Count> degree;
  std::vector<Count> wedges;
  std::vector<Count> triangles;
  std::vector<std::optional<double>> local_clustering;
  std::vector<Count> ball_size;
  std::vector<Count> ball_cut;
  std::vector<Count> ball_vol;
  std::vector<std::optional<double>> ball_conductance;

  std::size_t size() const { return degree.size(); }
};

/// Ball statistics from triangle counts. The ball's internal volume is
/// 2 (d_v + t_v): its edges are the d_v spokes plus t_v neighbor pairs.
NeighborhoodStats neighborhood_stats(const Graph& g, const std::vector<Count>& triangles);
NeighborhoodStats neighborhood_stats(const Graph& g, unsigned threads = 1);

/// Ball members of v: v followed by its sorted neighbors.
std::vector<Vertex> ball(const Graph& g, Vertex v);

/// Two independently computed sides of an integer identity.
struct IdentityCheck {
  Count lhs = 0;
  Count rhs = 0;
  bool holds() const { return lhs == rhs; }
};

/// sum_v t_v (per-vertex counts) against 3 * triangles (forward count). This is
/// the integer form of sum_v p_v C_v = kappa.
IdentityCheck check_identity_kappa(const Graph& g);

/// sum_v cut(B1(v)), counted edge by edge around each ball, against
/// 2 * (open wedges) = 2 (|W| - 3 * triangles). Integer form of
/// sum_v p_v cut(B1(v)) / |W_v| = 2 (1 - kappa).
IdentityCheck check_identity_nbd_cut(const Graph& g);

struct TheoremReport {
  double beta = 2.0 / 3.0;
  std::optional<double> kappa;
  Count max_degree = 0;

  // Dense core: some k-core exists with k >= kappa * dmax^beta / 2.
  std::optional<double> core_bound;
  Count max_core = 0;
  bool core_bound_met = false;

  // Neighborhood cut: 4 (1 - kappa) / (3 - 2 kappa) against the best ball.
  std::optional<double> conductance_bound;
  std::optional<double> min_ball_conductance;
  bool best_ball_at_most_bound = false;
  bool best_ball_at_least_bound = false;
};

/// Evaluates both asymptotic bounds on this graph. The hypotheses behind them
/// (heavy tails, large kappa) need not hold, so results are flags only.
TheoremReport theorem_diagnostics(const Graph& g, double beta = 2.0 / 3.0);

/// Degree histogram f_d together with the share of wedges centered at
/// vertices of degree above dmax^beta.
struct DegreeDistribution {
  std::vector<std::pair<Count, Count>> frequency;  // (d, f_d), increasing d
  double beta = 2.0 / 3.0;
  double high_degree_threshold = 0.0;
  double high_degree_wedge_share = 0.0;
};

DegreeDistribution degree_distribution(const Graph& g, double beta = 2.0 / 3.0);

}  // namespace egonet
