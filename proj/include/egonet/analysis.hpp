#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "egonet/clustering.hpp"
#include "egonet/profile.hpp"
#include "egonet/spectral.hpp"

namespace egonet {

struct DatasetStats {
  Vertex n = 0;
  Count m = 0;
  double average_degree = 0.0;
  Count max_degree = 0;
  std::optional<double> kappa;
  std::optional<double> mean_local;
};

DatasetStats dataset_stats(const Graph& g, unsigned threads = 1);

/// Every ball B1(v) as a "neighborhood" community, folded into a profile.
CommunityProfile neighborhood_profile(const Graph& g, const NeighborhoodStats& stats);

struct NcpNeighResult {
  CommunityProfile profile;
  std::optional<FiedlerResult> fiedler;  // empty when the graph is too small
};

/// Neighborhood profile plus the Fiedler community point.
NcpNeighResult ncp_neigh(const Graph& g, const FiedlerOptions& options = {}, unsigned threads = 1);

struct BestTableOptions {
  std::vector<std::string> methods{"neighborhood", "fiedler", "ppr", "whisker", "core"};
  std::vector<double> sigmas;  // empty: default ladder
  double alpha = 0.99;
  unsigned visit_limit = 0;
  unsigned threads = 1;
  FiedlerOptions fiedler;
};

struct BestEntry {
  std::string method;
  std::optional<Community> community;  // empty when the method found nothing
};

/// Lowest-conductance community found by each requested method.
std::vector<BestEntry> best_table(const Graph& g, const BestTableOptions& options = {});

/// size,conductance,method,cut,vol,seed rows (separator configurable).
void write_profile(std::ostream& out, const CommunityProfile& profile, char sep = ',');

/// Gnuplot script drawing `csv_name` on log-log axes with the dmax + 1 and
/// n / 2 markers.
std::string gnuplot_script(const CommunityProfile& profile, const std::string& csv_name);

}  // namespace egonet
