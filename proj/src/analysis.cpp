#include "egonet/analysis.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "egonet/cores.hpp"
#include "egonet/ppr.hpp"
#include "egonet/whiskers.hpp"

namespace egonet {

DatasetStats dataset_stats(const Graph& g, unsigned threads) {
  DatasetStats s;
  s.n = g.num_vertices();
  s.m = g.num_edges();
  s.average_degree = s.n == 0 ? 0.0 : static_cast<double>(g.total_volume()) / static_cast<double>(s.n);
  s.max_degree = g.max_degree();
  auto gc = global_clustering(g, triangle_counts(g, threads));
  s.kappa = gc.kappa;
  s.mean_local = gc.mean_local;
  return s;
}

CommunityProfile neighborhood_profile(const Graph& g, const NeighborhoodStats& stats) {
  CommunityProfile profile(g);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!stats.ball_conductance[v]) continue;
    Community c;
    c.members = ball(g, v);
    std::sort(c.members.begin(), c.members.end());
    c.cut = stats.ball_cut[v];
    c.vol = stats.ball_vol[v];
    c.conductance = stats.ball_conductance[v];
    c.size = smaller_side(c.members.size(), g.num_vertices());
    c.method = method::kNeighborhood;
    c.provenance.seed = v;
    profile.fold(c);
  }
  return profile;
}

NcpNeighResult ncp_neigh(const Graph& g, const FiedlerOptions& options, unsigned threads) {
  NcpNeighResult out{neighborhood_profile(g, neighborhood_stats(g, threads)), std::nullopt};
  if (g.num_vertices() >= 2) out.fiedler = fiedler_community(g, options);
  return out;
}

std::vector<BestEntry> best_table(const Graph& g, const BestTableOptions& options) {
  std::vector<BestEntry> table;
  for (const auto& name : options.methods) {
    BestEntry entry{name, std::nullopt};
    if (name == method::kNeighborhood) {
      auto profile = neighborhood_profile(g, neighborhood_stats(g, options.threads));
      if (auto* b = profile.best()) entry.community = *b;
    } else if (name == method::kFiedler) {
      auto r = fiedler_community(g, options.fiedler);
      if (r.community.conductance) entry.community = r.community;
    } else if (name == method::kPpr) {
      auto sigmas = options.sigmas.empty() ? default_sigma_ladder() : options.sigmas;
      NcpOptions ncp{options.alpha, options.visit_limit, options.threads};
      auto r = ppr_ncp(g, SeedPolicy::all(), sigmas, ncp);
      if (auto* b = r.profile.best()) entry.community = *b;
    } else if (name == method::kWhisker) {
      auto w = whiskers(g);
      // Every whisker has cut 1, so the largest volume wins unless it spans
      // more than half the graph; compare by conductance to be safe.
      for (const auto& c : w.whiskers) {
        if (c.conductance && (!entry.community || better_community(c, *entry.community))) entry.community = c;
      }
    } else if (name == method::kCore) {
      auto sweep = core_sweep(g, core_decomposition(g));
      for (const auto& level : sweep.levels) {
        if (!entry.community || better_community(level.best, *entry.community)) entry.community = level.best;
      }
    } else {
      throw std::invalid_argument("unknown method '" + name + "'");
    }
    table.push_back(std::move(entry));
  }
  return table;
}

void write_profile(std::ostream& out, const CommunityProfile& profile, char sep) {
  out << "size" << sep << "conductance" << sep << "method" << sep << "cut" << sep << "vol" << sep << "seed\n";
  for (const auto& [size, c] : profile.records()) {
    out << size << sep << *c.conductance << sep << c.method << sep << c.cut << sep << c.vol << sep;
    if (c.provenance.seed) out << *c.provenance.seed;
    out << '\n';
  }
}

std::string gnuplot_script(const CommunityProfile& profile, const std::string& csv_name) {
  std::ostringstream s;
  s << "set datafile separator ','\n"
    << "set logscale xy\n"
    << "set xlabel 'Number of vertices in cluster'\n"
    << "set ylabel 'Conductance'\n"
    << "set key bottom left\n"
    << "set arrow from " << profile.max_degree_marker() << ", graph 0 to " << profile.max_degree_marker()
    << ", graph 1 nohead dt 2\n"
    << "set arrow from " << profile.half_size_marker() << ", graph 0 to " << profile.half_size_marker()
    << ", graph 1 nohead dt 3\n"
    << "plot '" << csv_name << "' every ::1 using 1:2 with linespoints title 'best conductance'\n";
  return s.str();
}

}  // namespace egonet
