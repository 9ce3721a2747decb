// Command-line front end: loads an edge list, keeps its largest connected
// component, and runs one analysis per subcommand. Vertex ids in all output
// are the original labels from the input file.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "egonet/analysis.hpp"
#include "egonet/cores.hpp"
#include "egonet/edge_list.hpp"
#include "egonet/generators.hpp"
#include "egonet/parallel.hpp"
#include "egonet/ppr.hpp"
#include "egonet/seeds.hpp"
#include "egonet/whiskers.hpp"

namespace fs = std::filesystem;
using namespace egonet;

namespace {

enum Exit { kOk = 0, kUsage = 1, kData = 2, kConvergence = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string input;
  std::string output;
  unsigned threads = default_thread_count();
  std::uint64_t seed = 1;
  double alpha = 0.99;
  std::vector<double> sigmas;
  Count min_size = 7;
  std::string format = "csv";

  char sep() const { return format == "tsv" ? '\t' : ','; }
};

// Loaded input restricted to its largest component.
struct Input {
  Graph graph;
  std::vector<Label> labels;

  Label label(Vertex v) const { return labels[v]; }
  Vertex vertex(Label l) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), l);
    if (it == labels.end() || *it != l) {
      throw UsageError("vertex " + std::to_string(l) + " is not in the largest connected component");
    }
    return static_cast<Vertex>(it - labels.begin());
  }
};

Input load(const Settings& s) {
  if (s.input.empty()) throw UsageError("--input is required");
  if (!fs::exists(s.input)) throw DataError("cannot open " + s.input);
  auto lcc = largest_component(load_edge_list(fs::path(s.input)));
  Input in{std::move(lcc.graph), std::move(lcc.labels)};
  if (!s.output.empty()) {
    fs::create_directories(s.output);
    std::ofstream map(fs::path(s.output) / "label_map.txt");
    write_label_map(map, in.labels);
  }
  return in;
}

// Writes to OUTPUT/name when --output is set, otherwise to stdout.
class Sink {
 public:
  Sink(const Settings& s, const std::string& name) {
    if (s.output.empty()) return;
    fs::create_directories(s.output);
    path_ = fs::path(s.output) / name;
    file_.open(path_);
    if (!file_) throw DataError("cannot write " + path_.string());
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  bool to_file() const { return file_.is_open(); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
  std::ofstream file_;
};

std::string num(std::optional<double> x) {
  if (!x) return "";
  std::ostringstream s;
  s.precision(10);
  s << *x;
  return s.str();
}

void write_members(std::ostream& out, const Input& in, const Community& c) {
  for (std::size_t i = 0; i < c.members.size(); ++i) out << (i ? " " : "") << in.label(c.members[i]);
  out << '\n';
}

// size, conductance, method, cut, vol, seed rows with original labels.
void write_profile_rows(std::ostream& out, const Input& in, const CommunityProfile& p, char sep) {
  out << "size" << sep << "conductance" << sep << "method" << sep << "cut" << sep << "vol" << sep << "seed\n";
  for (const auto& [size, c] : p.records()) {
    out << size << sep << num(c.conductance) << sep << c.method << sep << c.cut << sep << c.vol << sep;
    if (c.provenance.seed) out << in.label(*c.provenance.seed);
    out << '\n';
  }
}

void emit_profile(const Settings& s, const Input& in, const CommunityProfile& p, const std::string& stem) {
  Sink sink(s, stem + (s.format == "tsv" ? ".tsv" : ".csv"));
  write_profile_rows(sink.out(), in, p, s.sep());
  if (sink.to_file()) {
    std::ofstream plot(fs::path(s.output) / (stem + ".gp"));
    auto script = gnuplot_script(p, sink.path().filename().string());
    if (s.format == "tsv") script.replace(script.find("','"), 3, "'\\t'");
    plot << script;
  }
}

void summary(const char* what, const Input& in, const Community& c) {
  std::cerr << what << ": size " << c.size << ", cut " << c.cut << ", vol " << c.vol << ", conductance "
            << num(c.conductance);
  if (c.provenance.seed) std::cerr << ", seed " << in.label(*c.provenance.seed);
  std::cerr << '\n';
}

// --- subcommands -----------------------------------------------------------

int cmd_stats(const Settings& s) {
  auto in = load(s);
  auto st = dataset_stats(in.graph, s.threads);
  std::cout << "vertices " << st.n << "\nedges " << st.m << "\naverage_degree " << st.average_degree
            << "\nmax_degree " << st.max_degree << "\nkappa " << num(st.kappa) << "\nmean_clustering "
            << num(st.mean_local) << '\n';
  if (!s.output.empty()) {
    auto ns = neighborhood_stats(in.graph, s.threads);
    const char c = s.sep();
    Sink sink(s, std::string("vertex_stats.") + (s.format == "tsv" ? "tsv" : "csv"));
    auto& out = sink.out();
    out << "vertex" << c << "degree" << c << "wedges" << c << "triangles" << c << "local_clustering" << c
        << "ball_size" << c << "ball_cut" << c << "ball_vol" << c << "ball_conductance\n";
    for (Vertex v = 0; v < in.graph.num_vertices(); ++v) {
      out << in.label(v) << c << ns.degree[v] << c << ns.wedges[v] << c << ns.triangles[v] << c
          << num(ns.local_clustering[v]) << c << ns.ball_size[v] << c << ns.ball_cut[v] << c << ns.ball_vol[v] << c
          << num(ns.ball_conductance[v]) << '\n';
    }
  }
  return kOk;
}

int cmd_ncp_neigh(const Settings& s) {
  auto in = load(s);
  auto r = ncp_neigh(in.graph, {}, s.threads);
  auto profile = r.profile;
  if (r.fiedler && r.fiedler->community.conductance) profile.fold(r.fiedler->community);
  emit_profile(s, in, profile, "ncp_neigh");
  if (auto* b = r.profile.best()) summary("best neighborhood", in, *b);
  if (r.fiedler) summary("fiedler", in, r.fiedler->community);
  return kOk;
}

int cmd_fiedler(const Settings& s, const std::string& solver, double tolerance, bool debug_orderings) {
  auto in = load(s);
  FiedlerOptions opt;
  opt.tolerance = tolerance;
  if (solver == "dense") opt.solver = EigenSolver::kDense;
  if (solver == "lanczos") opt.solver = EigenSolver::kLanczos;
  auto fv = fiedler_vector(in.graph, opt);
  auto r = fiedler_community(in.graph, fv);
  std::cout << "lambda2 " << num(r.lambda2) << "\nresidual " << num(r.residual_norm) << "\ncheeger_lower "
            << num(r.cheeger_lower) << "\ncheeger_upper " << num(r.cheeger_upper) << "\nsize "
            << r.community.size << "\ncut " << r.community.cut << "\nvol " << r.community.vol
            << "\nconductance " << num(r.community.conductance) << '\n';
  if (debug_orderings) {
    auto scaled = fiedler_community(in.graph, fv, FiedlerOrdering::kDegreeScaled);
    std::cout << "scaled_ordering_size " << scaled.community.size << "\nscaled_ordering_conductance "
              << num(scaled.community.conductance) << '\n';
  }
  if (!s.output.empty()) {
    Sink members(s, "fiedler_members.txt");
    write_members(members.out(), in, r.community);
    Sink vec(s, std::string("fiedler_vector.") + (s.format == "tsv" ? "tsv" : "csv"));
    vec.out() << "vertex" << s.sep() << "value" << s.sep() << "score\n";
    for (Vertex v = 0; v < in.graph.num_vertices(); ++v) {
      vec.out() << in.label(v) << s.sep() << num(fv.vector[v]) << s.sep() << num(r.embedding[v]) << '\n';
    }
  }
  return kOk;
}

int cmd_ppr(const Settings& s, std::optional<Label> vertex, double sigma) {
  if (!vertex) throw UsageError("ppr needs --vertex");
  auto in = load(s);
  std::vector<Vertex> seeds{in.vertex(*vertex)};
  auto c = ppr_community(in.graph, seeds, PprParams::for_volume(sigma, s.alpha));
  const char d = s.sep();
  std::cout << "method" << d << "seed" << d << "sigma" << d << "size" << d << "cut" << d << "vol" << d
            << "conductance\n"
            << c.method << d << *vertex << d << sigma << d << c.size << d << c.cut << d << c.vol << d
            << num(c.conductance) << '\n';
  if (!s.output.empty()) {
    Sink members(s, "ppr_members.txt");
    write_members(members.out(), in, c);
  }
  return kOk;
}

SeedPolicy parse_seed_policy(const std::string& spec, const Input& in, std::uint64_t rng_seed) {
  if (spec == "all") return SeedPolicy::all();
  if (spec.rfind("random:", 0) == 0) {
    try {
      return SeedPolicy::random(std::stoul(spec.substr(7)), rng_seed);
    } catch (const std::logic_error&) {
      throw UsageError("bad seed count in '" + spec + "'");
    }
  }
  std::string path = spec.rfind("file:", 0) == 0 ? spec.substr(5) : spec;
  std::ifstream f(path);
  if (!f) throw UsageError("--seeds must be all, random:K or a file of vertex ids");
  std::vector<Vertex> list;
  Label l;
  while (f >> l) list.push_back(in.vertex(l));
  return SeedPolicy::list(std::move(list));
}

int cmd_ncp_ppr(const Settings& s, const std::string& seeds, unsigned visit_limit) {
  auto in = load(s);
  auto policy = parse_seed_policy(seeds, in, s.seed);
  auto sigmas = s.sigmas.empty() ? default_sigma_ladder() : s.sigmas;
  NcpOptions opt{s.alpha, visit_limit, s.threads};
  auto r = ppr_ncp(in.graph, policy, sigmas, opt);
  const char d = s.sep();
  Sink sink(s, std::string("ncp_ppr.") + (s.format == "tsv" ? "tsv" : "csv"));
  sink.out() << "method" << d << "seed" << d << "sigma" << d << "size" << d << "cut" << d << "vol" << d
             << "conductance\n";
  for (const auto& [size, c] : r.profile.records()) {
    sink.out() << c.method << d << in.label(*c.provenance.seed) << d << *c.provenance.sigma << d << size << d
               << c.cut << d << c.vol << d << num(c.conductance) << '\n';
  }
  if (sink.to_file()) {
    std::ofstream plot(fs::path(s.output) / "ncp_ppr.gp");
    plot << gnuplot_script(r.profile, sink.path().filename().string());
  }
  std::cerr << "runs " << r.runs << ", skipped seeds " << r.skipped_seeds << '\n';
  if (auto* b = r.profile.best()) summary("best ppr", in, *b);
  return kOk;
}

int cmd_cores(const Settings& s) {
  auto in = load(s);
  auto d = core_decomposition(in.graph);
  auto sw = core_sweep(in.graph, d);
  const char c = s.sep();
  Sink sink(s, std::string("cores.") + (s.format == "tsv" ? "tsv" : "csv"));
  sink.out() << "k" << c << "best_size" << c << "best_conductance\n";
  for (const auto& level : sw.levels) {
    sink.out() << level.k << c << level.best.size << c << num(level.best.conductance) << '\n';
  }
  if (!s.output.empty()) {
    Sink numbers(s, std::string("core_numbers.") + (s.format == "tsv" ? "tsv" : "csv"));
    numbers.out() << "vertex" << c << "core\n";
    for (Vertex v = 0; v < in.graph.num_vertices(); ++v) numbers.out() << in.label(v) << c << d.core_number[v] << '\n';
  }
  std::cerr << "max core " << d.max_core() << '\n';
  return kOk;
}

int cmd_whiskers(const Settings& s, bool nested) {
  auto in = load(s);
  auto w = whiskers(in.graph, nested);
  const char c = s.sep();
  Sink sink(s, std::string("whiskers.") + (s.format == "tsv" ? "tsv" : "csv"));
  sink.out() << "whisker_id" << c << "size" << c << "vol" << c << "conductance\n";
  for (std::size_t i = 0; i < w.whiskers.size(); ++i) {
    const auto& x = w.whiskers[i];
    sink.out() << i << c << x.size << c << x.vol << c << num(x.conductance) << '\n';
  }
  std::cerr << "bridges " << w.bridges.size() << ", largest biconnected component " << w.largest_bicomp.size()
            << " vertices, whiskers " << w.whiskers.size() << '\n';
  return kOk;
}

int cmd_seeds(const Settings& s) {
  auto in = load(s);
  auto seeds = locally_minimal_seeds(neighborhood_stats(in.graph, s.threads), in.graph, s.min_size);
  const char c = s.sep();
  Sink sink(s, std::string("seeds.") + (s.format == "tsv" ? "tsv" : "csv"));
  sink.out() << "vertex" << c << "ball_size" << c << "ball_cut" << c << "ball_vol" << c << "ball_conductance\n";
  for (std::size_t i = 0; i < seeds.seeds.size(); ++i) {
    sink.out() << in.label(seeds.seeds[i]) << c << seeds.ball_size[i] << c << seeds.ball_cut[i] << c
               << seeds.ball_vol[i] << c << num(seeds.ball_conductance[i]) << '\n';
  }
  std::cerr << seeds.seeds.size() << " locally minimal seeds with at least " << s.min_size << " vertices\n";
  return kOk;
}

int cmd_grow(const Settings& s, const std::string& from, std::vector<double> multipliers, bool single_vertex) {
  auto in = load(s);
  GrowthOptions opt;
  opt.alpha = s.alpha;
  opt.threads = s.threads;
  opt.seed_with_ball = !single_vertex;
  GrowthResult r;
  if (from == "seeds") {
    if (multipliers.empty()) multipliers = default_seed_multipliers();
    auto seeds = locally_minimal_seeds(neighborhood_stats(in.graph, s.threads), in.graph, s.min_size);
    r = grow_seeds(in.graph, seeds, multipliers, opt);
  } else {
    if (multipliers.empty()) multipliers = default_core_multipliers();
    r = grow_cores(in.graph, core_decomposition(in.graph), multipliers, opt);
  }
  emit_profile(s, in, r.profile, "grow_" + from);
  std::cerr << "runs " << r.runs << '\n';
  if (auto* b = r.profile.best()) summary("best grown", in, *b);
  return kOk;
}

int emit_graph(const Settings& s, const Graph& g) {
  Sink sink(s, "graph.txt");
  write_edge_list(sink.out(), g);
  return kOk;
}

int cmd_check_identities(const Settings& s) {
  auto in = load(s);
  auto k = check_identity_kappa(in.graph);
  auto c = check_identity_nbd_cut(in.graph);
  std::cout << "sum_triangles_at_vertices " << k.lhs << "\nthree_times_triangles " << k.rhs << "\nkappa_identity "
            << (k.holds() ? "holds" : "FAILS") << "\nsum_ball_cuts " << c.lhs << "\ntwice_open_wedges " << c.rhs
            << "\nneighborhood_cut_identity " << (c.holds() ? "holds" : "FAILS") << '\n';
  auto t = theorem_diagnostics(in.graph);
  std::cout << "kappa " << num(t.kappa) << "\nmax_degree " << t.max_degree << "\ncore_bound " << num(t.core_bound)
            << "\nmax_core " << t.max_core << "\ncore_bound_met " << t.core_bound_met << "\nconductance_bound "
            << num(t.conductance_bound) << "\nmin_ball_conductance " << num(t.min_ball_conductance) << '\n';
  return k.holds() && c.holds() ? kOk : kData;
}

int cmd_best_table(const Settings& s, const std::vector<std::string>& methods, unsigned visit_limit) {
  auto in = load(s);
  BestTableOptions opt;
  if (!methods.empty()) opt.methods = methods;
  opt.sigmas = s.sigmas;
  opt.alpha = s.alpha;
  opt.visit_limit = visit_limit;
  opt.threads = s.threads;
  const char c = s.sep();
  Sink sink(s, std::string("best_table.") + (s.format == "tsv" ? "tsv" : "csv"));
  sink.out() << "method" << c << "size" << c << "cut" << c << "vol" << c << "conductance\n";
  for (const auto& e : best_table(in.graph, opt)) {
    sink.out() << e.method << c;
    if (e.community) {
      sink.out() << e.community->size << c << e.community->cut << c << e.community->vol << c
                 << num(e.community->conductance);
    } else {
      sink.out() << c << c << c;
    }
    sink.out() << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conductance-based community analysis of undirected graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--input,-i", s.input, "Edge list (u v per line)");
  app.add_option("--output,-o", s.output, "Directory for output files (stdout when absent)");
  app.add_option("--threads", s.threads, "Worker threads (default: EGONET_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", s.seed, "Random seed");
  app.add_option("--alpha", s.alpha, "PageRank continuation probability")->check(CLI::Range(0.0, 1.0));
  app.add_option("--sigmas", s.sigmas, "Target volumes, comma separated")->delimiter(',');
  app.add_option("--min-size", s.min_size, "Smallest seed neighborhood")->check(CLI::PositiveNumber);
  app.add_option("--format", s.format, "csv or tsv")->check(CLI::IsMember({"csv", "tsv"}));

  std::function<int()> run;

  app.add_subcommand("stats", "Size, degree and clustering summary; per-vertex table with --output")
      ->callback([&] { run = [&] { return cmd_stats(s); }; });
  app.add_subcommand("ncp-neigh", "Neighborhood community profile plus the Fiedler point")
      ->callback([&] { run = [&] { return cmd_ncp_neigh(s); }; });

  auto* fiedler = app.add_subcommand("fiedler", "Spectral sweep community");
  std::string solver = "auto";
  double tolerance = 1e-8;
  bool debug_orderings = false;
  fiedler->add_option("--solver", solver)->check(CLI::IsMember({"auto", "dense", "lanczos"}));
  fiedler->add_option("--tolerance", tolerance)->check(CLI::PositiveNumber);
  fiedler->add_flag("--debug-orderings", debug_orderings, "Also sweep sqrt(d) * x");
  fiedler->callback([&] { run = [&] { return cmd_fiedler(s, solver, tolerance, debug_orderings); }; });

  auto* ppr = app.add_subcommand("ppr", "Personalized PageRank community from one vertex");
  std::optional<Label> vertex;
  double sigma = 100.0;
  ppr->add_option("--vertex,-v", vertex, "Seed vertex (input label)");
  ppr->add_option("--sigma", sigma, "Target volume")->check(CLI::PositiveNumber);
  ppr->callback([&] { run = [&] { return cmd_ppr(s, vertex, sigma); }; });

  auto* ncp_ppr = app.add_subcommand("ncp-ppr", "PageRank community profile over many seeds");
  std::string seeds = "all";
  unsigned visit_limit = 0;
  ncp_ppr->add_option("--seeds", seeds, "all, random:K, or a file of vertex labels");
  ncp_ppr->add_option("--visit-limit", visit_limit, "Skip seeds already inside this many communities (0: off)");
  ncp_ppr->callback([&] { run = [&] { return cmd_ncp_ppr(s, seeds, visit_limit); }; });

  app.add_subcommand("cores", "k-core decomposition and core sweep")
      ->callback([&] { run = [&] { return cmd_cores(s); }; });

  auto* wh = app.add_subcommand("whiskers", "Subgraphs hanging off the largest biconnected component");
  bool nested = false;
  wh->add_flag("--nested", nested, "Report whiskers on whiskers too");
  wh->callback([&] { run = [&] { return cmd_whiskers(s, nested); }; });

  app.add_subcommand("seeds", "Locally minimal neighborhoods")->callback([&] { run = [&] { return cmd_seeds(s); }; });

  auto* grow = app.add_subcommand("grow", "PageRank growth from seeds or cores");
  std::string from = "seeds";
  std::vector<double> multipliers;
  bool single_vertex = false;
  grow->add_option("--from", from)->check(CLI::IsMember({"seeds", "cores"}));
  grow->add_option("--multipliers", multipliers, "Volume multipliers, comma separated")->delimiter(',');
  grow->add_flag("--single-vertex", single_vertex, "Seed with the vertex only, not its neighborhood");
  grow->callback([&] { run = [&] { return cmd_grow(s, from, multipliers, single_vertex); }; });

  auto* gen = app.add_subcommand("gen", "Generate a graph (edge list on stdout or OUTPUT/graph.txt)");
  gen->require_subcommand(1);
  ForestFireParams ff;
  auto* gen_ff = gen->add_subcommand("ff", "Forest fire");
  gen_ff->add_option("--n", ff.n);
  gen_ff->add_option("--p", ff.p);
  gen_ff->add_option("--k", ff.k);
  gen_ff->callback([&] {
    run = [&] {
      ff.rng_seed = s.seed;
      return emit_graph(s, forest_fire(ff));
    };
  });
  std::vector<Vertex> sizes;
  std::vector<std::string> bridges;
  auto* gen_cliques = gen->add_subcommand("cliques", "Disjoint cliques joined by bridges");
  gen_cliques->add_option("--sizes", sizes)->delimiter(',')->required();
  gen_cliques->add_option("--bridges", bridges, "Clique pairs a-b, comma separated")->delimiter(',');
  gen_cliques->callback([&] {
    run = [&] {
      std::vector<CliqueBridge> b;
      for (const auto& spec : bridges) {
        auto dash = spec.find('-');
        if (dash == std::string::npos) throw UsageError("bridge '" + spec + "' is not of the form a-b");
        try {
          b.push_back({std::stoul(spec.substr(0, dash)), std::stoul(spec.substr(dash + 1))});
        } catch (const std::logic_error&) {
          throw UsageError("bridge '" + spec + "' is not of the form a-b");
        }
      }
      return emit_graph(s, clique_union(sizes, b));
    };
  });
  Vertex er_n = 100;
  double er_p = 0.05;
  auto* gen_er = gen->add_subcommand("er", "Erdos-Renyi G(n, p)");
  gen_er->add_option("--n", er_n);
  gen_er->add_option("--p", er_p);
  gen_er->callback([&] { run = [&] { return emit_graph(s, random_graph(er_n, er_p, s.seed)); }; });

  app.add_subcommand("check-identities", "Verify the clustering and neighborhood-cut identities")
      ->callback([&] { run = [&] { return cmd_check_identities(s); }; });

  auto* best = app.add_subcommand("best-table", "Best community per method");
  std::vector<std::string> methods;
  best->add_option("--methods", methods, "neighborhood,fiedler,ppr,whisker,core")->delimiter(',');
  best->add_option("--visit-limit", visit_limit);
  best->callback([&] { run = [&] { return cmd_best_table(s, methods, visit_limit); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (best residual " << e.best_residual() << ")\n";
    return kConvergence;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  }
}
