#include "egonet/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace egonet {
namespace {

using Vec = Eigen::VectorXd;

// y = D^-1/2 A D^-1/2 x
void apply_normalized_adjacency(const Graph& g, const Vec& inv_sqrt_deg, const Vec& x, Vec& y) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    double acc = 0.0;
    for (Vertex w : g.neighbors(u)) acc += inv_sqrt_deg[w] * x[w];
    y[u] = inv_sqrt_deg[u] * acc;
  }
}

double laplacian_residual(const Graph& g, const Vec& inv_sqrt_deg, const Vec& x, double lambda) {
  Vec ax(x.size());
  apply_normalized_adjacency(g, inv_sqrt_deg, x, ax);
  // L x - lambda x = x - A x - lambda x
  return ((1.0 - lambda) * x - ax).norm() / x.norm();
}

void fix_sign(Vec& x) {
  Eigen::Index arg = 0;
  for (Eigen::Index i = 1; i < x.size(); ++i) {
    if (std::abs(x[i]) > std::abs(x[arg])) arg = i;
  }
  if (x[arg] < 0) x = -x;
}

FiedlerVector dense_solve(const Graph& g, const Vec& inv_sqrt_deg) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(n, n);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex w : g.neighbors(u)) lap(u, w) -= inv_sqrt_deg[u] * inv_sqrt_deg[w];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("dense eigensolver failed", std::numeric_limits<double>::infinity());
  }
  Vec x = solver.eigenvectors().col(1);
  x.normalize();
  fix_sign(x);
  FiedlerVector out;
  out.lambda2 = solver.eigenvalues()[1];
  out.residual_norm = laplacian_residual(g, inv_sqrt_deg, x, out.lambda2);
  out.vector.assign(x.data(), x.data() + x.size());
  return out;
}

// Explicitly restarted Lanczos with full reorthogonalization on the
// normalized adjacency, deflated against its top eigenvector D^1/2 1. The
// largest remaining eigenvalue mu gives lambda2 = 1 - mu.
FiedlerVector lanczos_solve(const Graph& g, const Vec& inv_sqrt_deg, const FiedlerOptions& opt) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Vec top(n);
  for (Eigen::Index i = 0; i < n; ++i) top[i] = 1.0 / inv_sqrt_deg[i];
  top.normalize();

  auto deflate = [&](Vec& v) { v -= top.dot(v) * top; };

  // Fixed start vector: a scrambled but deterministic pattern.
  Vec start(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    start[i] = static_cast<double>((static_cast<std::uint64_t>(i) * 2654435761ull) % 1000) / 1000.0 - 0.5;
  }
  deflate(start);
  start.normalize();

  const Eigen::Index dim = std::min<Eigen::Index>(static_cast<Eigen::Index>(opt.krylov_dim), n - 1);
  Eigen::MatrixXd basis(n, dim + 1);
  Vec w(n);
  double best_residual = std::numeric_limits<double>::infinity();
  FiedlerVector out;

  for (std::size_t restart = 0; restart <= opt.max_restarts; ++restart) {
    basis.col(0) = start;
    std::vector<double> alpha;
    std::vector<double> beta;
    Eigen::Index steps = 0;
    for (Eigen::Index j = 0; j < dim; ++j) {
      apply_normalized_adjacency(g, inv_sqrt_deg, basis.col(j), w);
      alpha.push_back(basis.col(j).dot(w));
      for (int pass = 0; pass < 2; ++pass) {
        deflate(w);
        w -= basis.leftCols(j + 1) * (basis.leftCols(j + 1).transpose() * w);
      }
      steps = j + 1;
      double b = w.norm();
      if (b < 1e-13) break;  // invariant subspace
      beta.push_back(b);
      basis.col(j + 1) = w / b;
    }

    Vec diag = Eigen::Map<Vec>(alpha.data(), steps);
    Vec sub(std::max<Eigen::Index>(steps - 1, 0));
    for (Eigen::Index i = 0; i + 1 < steps; ++i) sub[i] = beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const Eigen::Index top_ritz = steps - 1;  // eigenvalues ascend
    double mu = tri.eigenvalues()[top_ritz];
    Vec x = basis.leftCols(steps) * tri.eigenvectors().col(top_ritz);
    deflate(x);
    x.normalize();

    double residual = laplacian_residual(g, inv_sqrt_deg, x, 1.0 - mu);
    if (residual < best_residual) {
      best_residual = residual;
      out.lambda2 = 1.0 - mu;
      out.residual_norm = residual;
      out.vector.assign(x.data(), x.data() + x.size());
    }
    if (residual <= opt.tolerance) {
      Vec fixed = Eigen::Map<Vec>(out.vector.data(), n);
      fix_sign(fixed);
      out.vector.assign(fixed.data(), fixed.data() + n);
      return out;
    }
    start = x;
  }
  throw ConvergenceError("Lanczos did not reach tolerance; best residual " + std::to_string(best_residual),
                         best_residual);
}

}  // namespace

FiedlerVector fiedler_vector(const Graph& g, const FiedlerOptions& options) {
  if (g.num_vertices() < 2) throw DataError("Fiedler vector needs at least two vertices");
  if (!is_connected(g)) throw DataError("Fiedler vector needs a connected graph; take the largest component");
  Vec inv_sqrt_deg(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    inv_sqrt_deg[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  }
  bool dense = options.solver == EigenSolver::kDense ||
               (options.solver == EigenSolver::kAuto && g.num_vertices() <= options.dense_limit) ||
               g.num_vertices() == 2;
  return dense ? dense_solve(g, inv_sqrt_deg) : lanczos_solve(g, inv_sqrt_deg, options);
}

FiedlerResult fiedler_community(const Graph& g, const FiedlerVector& fv, FiedlerOrdering ordering) {
  const Vertex n = g.num_vertices();
  FiedlerResult r;
  r.lambda2 = fv.lambda2;
  r.residual_norm = fv.residual_norm;
  r.ordering = ordering;
  r.embedding.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    double root = std::sqrt(static_cast<double>(g.degree(v)));
    r.embedding[v] = ordering == FiedlerOrdering::kDegreeNormalized ? fv.vector[v] / root : fv.vector[v] * root;
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return r.embedding[a] < r.embedding[b]; });
  auto curve = sweep(g, order);
  r.community = make_community(g, curve.best_set(), method::kFiedler);
  r.cheeger_lower = std::max(0.0, r.lambda2) / 2.0;
  r.cheeger_upper = std::sqrt(2.0 * std::max(0.0, r.lambda2));
  if (r.community.conductance) {
    constexpr double kSlack = 1e-10;
    double phi = *r.community.conductance;
    r.cheeger_holds = r.cheeger_lower <= phi + kSlack && phi <= r.cheeger_upper + kSlack;
  }
  return r;
}

FiedlerResult fiedler_community(const Graph& g, const FiedlerOptions& options, FiedlerOrdering ordering) {
  return fiedler_community(g, fiedler_vector(g, options), ordering);
}

OrderingComparison compare_fiedler_orderings(const Graph& g, const FiedlerOptions& options) {
  auto fv = fiedler_vector(g, options);
  OrderingComparison cmp;
  cmp.normalized = fiedler_community(g, fv, FiedlerOrdering::kDegreeNormalized);
  cmp.scaled = fiedler_community(g, fv, FiedlerOrdering::kDegreeScaled);
  const auto& a = cmp.normalized.community.conductance;
  const auto& b = cmp.scaled.community.conductance;
  if (b && (!a || *b < *a)) cmp.winner = FiedlerOrdering::kDegreeScaled;
  return cmp;
}

}  // namespace egonet
