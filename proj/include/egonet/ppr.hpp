#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "egonet/community.hpp"
#include "egonet/graph.hpp"
#include "egonet/profile.hpp"

namespace egonet {

/// Personalized PageRank parameters. The walk follows an edge with
/// probability alpha and teleports to the seed with probability 1 - alpha.
struct PprParams {
  double alpha = 0.99;
  double sigma = 100.0;  // target community volume
  double tau = 1e-3;     // push threshold, residual r(u) < tau * d_u at exit

  /// tau = 1 / (10 sigma)
  static PprParams for_volume(double sigma, double alpha = 0.99);
  /// Throws std::invalid_argument unless 0 < alpha < 1 and tau > 0.
  void validate() const;
};

struct PprVector {
  // Sparse entries sorted by vertex; only nonzeros are kept.
  std::vector<std::pair<Vertex, double>> estimate;
  std::vector<std::pair<Vertex, double>> residual;
  std::vector<Vertex> seeds;
  Count pushes = 0;

  double estimate_mass() const;
  double residual_mass() const;
};

/// Dense scratch arrays reused across push runs on one graph.
class PprWorkspace {
 public:
  explicit PprWorkspace(Vertex n = 0);

 private:
  friend PprVector ppr_push(const Graph&, std::span<const Vertex>, const PprParams&, PprWorkspace&);
  friend Community ppr_community(const Graph&, std::span<const Vertex>, const PprParams&, PprWorkspace&);
  void reset_for(Vertex n);

  std::vector<double> p_;
  std::vector<double> r_;
  std::vector<char> queued_;
  std::vector<char> touched_flag_;
  std::vector<Vertex> touched_;
  SweepWorkspace sweep_;
};

/// Push procedure with a FIFO work queue. The initial residual is the
/// degree-weighted distribution over the seeds. Throws std::invalid_argument
/// on an empty or out-of-range seed set.
PprVector ppr_push(const Graph& g, std::span<const Vertex> seeds, const PprParams& params);
PprVector ppr_push(const Graph& g, std::span<const Vertex> seeds, const PprParams& params, PprWorkspace& ws);

/// Best sweep prefix of the estimate ordered by p(v) / d_v (descending, ties by
/// id). When no prefix has defined conductance the seed set itself is
/// returned.
Community ppr_community(const Graph& g, std::span<const Vertex> seeds, const PprParams& params);
Community ppr_community(const Graph& g, std::span<const Vertex> seeds, const PprParams& params, PprWorkspace& ws);

struct SeedPolicy {
  enum class Kind { kAll, kRandom, kExplicit };
  Kind kind = Kind::kAll;
  std::size_t count = 0;        // kRandom
  std::uint64_t rng_seed = 1;   // kRandom
  std::vector<Vertex> explicit_seeds;

  static SeedPolicy all() { return {}; }
  static SeedPolicy random(std::size_t k, std::uint64_t seed) { return {Kind::kRandom, k, seed, {}}; }
  static SeedPolicy list(std::vector<Vertex> seeds) { return {Kind::kExplicit, 0, 1, std::move(seeds)}; }

  std::vector<Vertex> resolve(Vertex n) const;
};

struct NcpOptions {
  double alpha = 0.99;
  // Skip a seed once this many earlier communities contain it (0 disables).
  unsigned visit_limit = 0;
  unsigned threads = 1;
};

struct NcpResult {
  CommunityProfile profile;
  Count runs = 0;           // push + sweep computations issued
  Count skipped_seeds = 0;
};

/// Geometric ladder 10, 10^1.5, 100, ... up to and including `max_sigma`.
std::vector<double> default_sigma_ladder(double max_sigma = 1000.0);

/// Runs ppr_community for every (seed, sigma) pair and folds the results.
NcpResult ppr_ncp(const Graph& g, const SeedPolicy& seeds, std::span<const double> sigmas,
                  const NcpOptions& options = {});

}  // namespace egonet
