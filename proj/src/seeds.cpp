#include "egonet/seeds.hpp"

#include <algorithm>

#include "egonet/parallel.hpp"
#include "egonet/ppr.hpp"

namespace egonet {

SeedSet locally_minimal_seeds(const NeighborhoodStats& stats, const Graph& g, Count min_size) {
  SeedSet out;
  out.min_size = min_size;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto& phi = stats.ball_conductance[v];
    if (!phi || stats.ball_size[v] < min_size) continue;
    bool minimal = std::all_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](Vertex w) {
      const auto& other = stats.ball_conductance[w];
      return !other || *phi <= *other;
    });
    if (!minimal) continue;
    out.seeds.push_back(v);
    out.ball_size.push_back(stats.ball_size[v]);
    out.ball_cut.push_back(stats.ball_cut[v]);
    out.ball_vol.push_back(stats.ball_vol[v]);
    out.ball_conductance.push_back(*phi);
  }
  return out;
}

namespace {

struct GrowthTask {
  std::vector<Vertex> seed_set;
  Count volume = 0;
  Provenance provenance;
};

GrowthResult run_growth(const Graph& g, const std::vector<GrowthTask>& tasks, std::span<const double> multipliers,
                        const GrowthOptions& options, const char* label) {
  GrowthResult result{CommunityProfile(g), 0};
  const unsigned threads = std::max(1u, options.threads);
  std::vector<std::vector<Community>> found(tasks.size());
  parallel_for(threads, threads, [&](std::size_t worker) {
    PprWorkspace ws(g.num_vertices());
    for (std::size_t i = worker; i < tasks.size(); i += threads) {
      const auto& task = tasks[i];
      for (double c : multipliers) {
        auto params = PprParams::for_volume(c * static_cast<double>(task.volume), options.alpha);
        auto community = ppr_community(g, task.seed_set, params, ws);
        community.method = label;
        community.provenance = task.provenance;
        community.provenance.sigma = params.sigma;
        community.provenance.multiplier = c;
        found[i].push_back(std::move(community));
      }
    }
  });
  for (const auto& per_task : found) {
    for (const auto& c : per_task) {
      ++result.runs;
      result.profile.fold(c);
    }
  }
  return result;
}

}  // namespace

GrowthResult grow_seeds(const Graph& g, const SeedSet& seeds, std::span<const double> multipliers,
                        const GrowthOptions& options) {
  std::vector<GrowthTask> tasks;
  tasks.reserve(seeds.seeds.size());
  for (std::size_t i = 0; i < seeds.seeds.size(); ++i) {
    Vertex v = seeds.seeds[i];
    GrowthTask task;
    task.seed_set = options.seed_with_ball ? ball(g, v) : std::vector<Vertex>{v};
    task.volume = seeds.ball_vol[i];
    task.provenance.seed = v;
    tasks.push_back(std::move(task));
  }
  return run_growth(g, tasks, multipliers, options, method::kSeededPpr);
}

GrowthResult grow_cores(const Graph& g, const CoreDecomposition& cores, std::span<const double> multipliers,
                        const GrowthOptions& options) {
  std::vector<GrowthTask> tasks;
  for (Count k = 1; k <= cores.max_core(); ++k) {
    auto members = cores.core(k);
    if (members.empty()) continue;
    Count vol = 0;
    for (Vertex v : members) vol += g.degree(v);
    if (vol > g.num_edges()) continue;
    GrowthTask task;
    task.seed_set = std::move(members);
    task.volume = vol;
    task.provenance.k = k;
    tasks.push_back(std::move(task));
  }
  return run_growth(g, tasks, multipliers, options, method::kSeededCorePpr);
}

}  // namespace egonet
