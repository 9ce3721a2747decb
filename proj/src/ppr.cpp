#include "egonet/ppr.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

#include "egonet/parallel.hpp"
#include "egonet/random.hpp"

namespace egonet {

PprParams PprParams::for_volume(double sigma, double alpha) {
  PprParams p;
  p.alpha = alpha;
  p.sigma = sigma;
  p.tau = 1.0 / (10.0 * sigma);
  return p;
}

void PprParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
}

double PprVector::estimate_mass() const {
  double s = 0.0;
  for (const auto& e : estimate) s += e.second;
  return s;
}

double PprVector::residual_mass() const {
  double s = 0.0;
  for (const auto& e : residual) s += e.second;
  return s;
}

PprWorkspace::PprWorkspace(Vertex n) { reset_for(n); }

void PprWorkspace::reset_for(Vertex n) {
  if (p_.size() == n) return;
  p_.assign(n, 0.0);
  r_.assign(n, 0.0);
  queued_.assign(n, 0);
  touched_flag_.assign(n, 0);
  touched_.clear();
}

namespace {

// Leaves p/r populated on the touched vertices; the caller clears them.
Count push_into(const Graph& g, std::span<const Vertex> seeds, const PprParams& params, std::vector<double>& p,
                std::vector<double>& r, std::vector<char>& queued, std::vector<char>& touched_flag,
                std::vector<Vertex>& touched) {
  params.validate();
  if (seeds.empty()) throw std::invalid_argument("seed set is empty");
  auto touch = [&](Vertex v) {
    if (!touched_flag[v]) {
      touched_flag[v] = 1;
      touched.push_back(v);
    }
  };

  std::vector<Vertex> unique_seeds(seeds.begin(), seeds.end());
  std::sort(unique_seeds.begin(), unique_seeds.end());
  unique_seeds.erase(std::unique(unique_seeds.begin(), unique_seeds.end()), unique_seeds.end());
  if (unique_seeds.back() >= g.num_vertices()) {
    throw std::invalid_argument("seed " + std::to_string(unique_seeds.back()) + " outside graph");
  }
  Count seed_vol = 0;
  for (Vertex s : unique_seeds) seed_vol += g.degree(s);
  for (Vertex s : unique_seeds) {
    r[s] = seed_vol > 0 ? static_cast<double>(g.degree(s)) / static_cast<double>(seed_vol)
                        : 1.0 / static_cast<double>(unique_seeds.size());
    touch(s);
  }

  const double alpha = params.alpha;
  const double tau = params.tau;
  const double push_cap = 1.0 / ((1.0 - alpha) * tau);

  std::deque<Vertex> queue;
  for (Vertex s : unique_seeds) {
    if (r[s] >= tau * static_cast<double>(g.degree(s))) {
      queue.push_back(s);
      queued[s] = 1;
    }
  }

  Count pushes = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    queued[u] = 0;
    const double ru = r[u];
    const Count du = g.degree(u);
    if (du == 0) {
      // No edge to follow: the mass stays put.
      p[u] += ru;
      r[u] = 0.0;
      continue;
    }
    if (ru < tau * static_cast<double>(du)) continue;
    ++pushes;
    if (static_cast<double>(pushes) > push_cap) {
      throw std::logic_error("push count exceeded 1 / ((1 - alpha) tau)");
    }
    p[u] += (1.0 - alpha) * ru;
    r[u] = 0.0;
    const double share = alpha * ru / static_cast<double>(du);
    for (Vertex w : g.neighbors(u)) {
      touch(w);
      r[w] += share;
      if (!queued[w] && r[w] >= tau * static_cast<double>(g.degree(w))) {
        queued[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return pushes;
}

void clear_touched(std::vector<double>& p, std::vector<double>& r, std::vector<char>& touched_flag,
                   std::vector<Vertex>& touched) {
  for (Vertex v : touched) {
    p[v] = 0.0;
    r[v] = 0.0;
    touched_flag[v] = 0;
  }
  touched.clear();
}

}  // namespace

PprVector ppr_push(const Graph& g, std::span<const Vertex> seeds, const PprParams& params) {
  PprWorkspace ws(g.num_vertices());
  return ppr_push(g, seeds, params, ws);
}

PprVector ppr_push(const Graph& g, std::span<const Vertex> seeds, const PprParams& params, PprWorkspace& ws) {
  ws.reset_for(g.num_vertices());
  PprVector out;
  try {
    out.pushes = push_into(g, seeds, params, ws.p_, ws.r_, ws.queued_, ws.touched_flag_, ws.touched_);
  } catch (...) {
    clear_touched(ws.p_, ws.r_, ws.touched_flag_, ws.touched_);
    throw;
  }
  std::vector<Vertex> touched = ws.touched_;
  std::sort(touched.begin(), touched.end());
  for (Vertex v : touched) {
    if (ws.p_[v] > 0.0) out.estimate.emplace_back(v, ws.p_[v]);
    if (ws.r_[v] > 0.0) out.residual.emplace_back(v, ws.r_[v]);
  }
  out.seeds.assign(seeds.begin(), seeds.end());
  clear_touched(ws.p_, ws.r_, ws.touched_flag_, ws.touched_);
  return out;
}

Community ppr_community(const Graph& g, std::span<const Vertex> seeds, const PprParams& params) {
  PprWorkspace ws(g.num_vertices());
  return ppr_community(g, seeds, params, ws);
}

Community ppr_community(const Graph& g, std::span<const Vertex> seeds, const PprParams& params, PprWorkspace& ws) {
  auto vec = ppr_push(g, seeds, params, ws);

  std::vector<std::pair<double, Vertex>> scored;
  scored.reserve(vec.estimate.size());
  for (const auto& [v, mass] : vec.estimate) {
    scored.emplace_back(mass / static_cast<double>(std::max<Count>(g.degree(v), 1)), v);
  }
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    return a.first > b.first || (a.first == b.first && a.second < b.second);
  });
  std::vector<Vertex> order;
  order.reserve(scored.size());
  for (const auto& s : scored) order.push_back(s.second);

  Provenance prov;
  if (!seeds.empty()) prov.seed = seeds.front();
  prov.sigma = params.sigma;

  auto curve = sweep(g, order, ws.sweep_);
  if (!curve.best_index) return make_community(g, seeds, method::kPpr, prov);
  return make_community(g, curve.best_set(), method::kPpr, prov);
}

std::vector<Vertex> SeedPolicy::resolve(Vertex n) const {
  switch (kind) {
    case Kind::kAll: {
      std::vector<Vertex> all(n);
      std::iota(all.begin(), all.end(), Vertex{0});
      return all;
    }
    case Kind::kRandom: {
      std::vector<Vertex> all(n);
      std::iota(all.begin(), all.end(), Vertex{0});
      Rng rng(rng_seed);
      std::size_t k = std::min<std::size_t>(count, n);
      for (std::size_t i = 0; i < k; ++i) {
        auto j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(all[i], all[j]);
      }
      all.resize(k);
      return all;
    }
    case Kind::kExplicit:
      for (Vertex v : explicit_seeds) {
        if (v >= n) throw std::invalid_argument("seed " + std::to_string(v) + " outside graph");
      }
      return explicit_seeds;
  }
  return {};
}

std::vector<double> default_sigma_ladder(double max_sigma) {
  std::vector<double> ladder;
  for (int i = 0;; ++i) {
    double s = std::pow(10.0, 1.0 + 0.5 * i);
    if (s > max_sigma * (1.0 + 1e-12)) break;
    ladder.push_back(s);
  }
  return ladder;
}

NcpResult ppr_ncp(const Graph& g, const SeedPolicy& policy, std::span<const double> sigmas,
                  const NcpOptions& options) {
  if (sigmas.empty()) throw std::invalid_argument("sigma ladder is empty");
  const auto seeds = policy.resolve(g.num_vertices());
  NcpResult result{CommunityProfile(g), 0, 0};

  const unsigned threads = std::max(1u, options.threads);
  std::vector<PprWorkspace> workspaces;
  workspaces.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) workspaces.emplace_back(g.num_vertices());
  std::vector<unsigned> visits(g.num_vertices(), 0);

  // Seeds are handled in fixed-size blocks: skip decisions use the visit
  // counts as of the start of the block, so results do not depend on the
  // number of threads.
  constexpr std::size_t kBlock = 64;
  for (std::size_t begin = 0; begin < seeds.size(); begin += kBlock) {
    const std::size_t end = std::min(seeds.size(), begin + kBlock);
    std::vector<Vertex> active;
    for (std::size_t i = begin; i < end; ++i) {
      if (options.visit_limit > 0 && visits[seeds[i]] >= options.visit_limit) {
        ++result.skipped_seeds;
      } else {
        active.push_back(seeds[i]);
      }
    }
    std::vector<std::vector<Community>> found(active.size());
    // Worker t owns workspaces[t] and handles tasks t, t + threads, ...
    parallel_for(threads, threads, [&](std::size_t worker) {
      auto& ws = workspaces[worker];
      for (std::size_t i = worker; i < active.size(); i += threads) {
        Vertex seed = active[i];
        for (double sigma : sigmas) {
          found[i].push_back(ppr_community(g, std::span<const Vertex>(&seed, 1),
                                           PprParams::for_volume(sigma, options.alpha), ws));
        }
      }
    });
    for (const auto& per_seed : found) {
      for (const auto& c : per_seed) {
        ++result.runs;
        result.profile.fold(c);
        if (options.visit_limit > 0) {
          for (Vertex v : c.members) ++visits[v];
        }
      }
    }
  }
  return result;
}

}  // namespace egonet
