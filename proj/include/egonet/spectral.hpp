#pragma once

#include <cstddef>
#include <vector>

#include "egonet/community.hpp"
#include "egonet/graph.hpp"

namespace egonet {

enum class EigenSolver {
  kAuto,     // dense below dense_limit vertices, Lanczos above
  kDense,
  kLanczos,
};

struct FiedlerOptions {
  double tolerance = 1e-8;  // bound on ||L x - lambda x|| for unit x
  EigenSolver solver = EigenSolver::kAuto;
  std::size_t dense_limit = 2000;
  std::size_t krylov_dim = 80;
  std::size_t max_restarts = 200;
};

/// Second eigenpair of the normalized Laplacian I - D^-1/2 A D^-1/2.
struct FiedlerVector {
  double lambda2 = 0.0;
  // Unit eigenvector, orthogonal to D^1/2 1. Its sign is fixed so that the
  // largest-magnitude entry (lowest index on ties) is positive.
  std::vector<double> vector;
  double residual_norm = 0.0;
};

/// Throws DataError on a disconnected graph or one with fewer than two
/// vertices, and ConvergenceError when Lanczos misses the tolerance.
FiedlerVector fiedler_vector(const Graph& g, const FiedlerOptions& options = {});

/// How eigenvector entries are turned into sweep scores.
enum class FiedlerOrdering {
  kDegreeNormalized,  // x_v / sqrt(d_v), the random-walk eigenvector
  kDegreeScaled,      // sqrt(d_v) * x_v
};

struct FiedlerResult {
  double lambda2 = 0.0;
  std::vector<double> embedding;  // sweep scores
  Community community;
  double residual_norm = 0.0;
  double cheeger_lower = 0.0;  // lambda2 / 2
  double cheeger_upper = 0.0;  // sqrt(2 lambda2)
  bool cheeger_holds = false;
  FiedlerOrdering ordering = FiedlerOrdering::kDegreeNormalized;
};

/// Sweep over increasing embedding values (ties by vertex id).
FiedlerResult fiedler_community(const Graph& g, const FiedlerOptions& options = {},
                                FiedlerOrdering ordering = FiedlerOrdering::kDegreeNormalized);

FiedlerResult fiedler_community(const Graph& g, const FiedlerVector& fv,
                                FiedlerOrdering ordering = FiedlerOrdering::kDegreeNormalized);

/// Sweeps one eigenvector under both orderings (debugging aid).
struct OrderingComparison {
  FiedlerResult normalized;
  FiedlerResult scaled;
  FiedlerOrdering winner = FiedlerOrdering::kDegreeNormalized;
};

OrderingComparison compare_fiedler_orderings(const Graph& g, const FiedlerOptions& options = {});

}  // namespace egonet
