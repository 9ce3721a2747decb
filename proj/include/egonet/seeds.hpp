#pragma once

#include <span>
#include <vector>

#include "egonet/clustering.hpp"
#include "egonet/cores.hpp"
#include "egonet/graph.hpp"
#include "egonet/profile.hpp"

namespace egonet {

struct SeedSet {
  std::vector<Vertex> seeds;  // increasing
  Count min_size = 7;
  std::vector<Count> ball_size;
  std::vector<Count> ball_cut;
  std::vector<Count> ball_vol;
  std::vector<double> ball_conductance;
};

/// Vertices whose ball conductance is no larger than that of any neighbor's
/// ball (neighbors with undefined conductance are ignored) and whose ball has
/// at least `min_size` vertices.
SeedSet locally_minimal_seeds(const NeighborhoodStats& stats, const Graph& g, Count min_size = 7);

struct GrowthOptions {
  double alpha = 0.99;
  // Seed the push with the whole ball B1(v); otherwise with v alone.
  bool seed_with_ball = true;
  unsigned threads = 1;
};

struct GrowthResult {
  CommunityProfile profile;
  Count runs = 0;
};

inline std::vector<double> default_seed_multipliers() { return {2, 5, 10, 25, 50}; }
inline std::vector<double> default_core_multipliers() { return {2, 3, 5}; }

/// PPR communities from every seed at sigma = multiplier * vol(B1(v)),
/// tagged "seeded-ppr".
GrowthResult grow_seeds(const Graph& g, const SeedSet& seeds, std::span<const double> multipliers,
                        const GrowthOptions& options = {});

/// PPR communities from each k-core (degree-weighted seed over the core) at
/// sigma = multiplier * vol(core), tagged "seeded-core-ppr". Cores with volume
/// above m are skipped.
GrowthResult grow_cores(const Graph& g, const CoreDecomposition& cores, std::span<const double> multipliers,
                        const GrowthOptions& options = {});

}  // namespace egonet
