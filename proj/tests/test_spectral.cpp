#include <doctest.h>

#include <cmath>
#include <numeric>

#include "egonet/spectral.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace egonet;
using namespace egonet::testing;

namespace {

FiedlerOptions lanczos() {
  FiedlerOptions o;
  o.solver = EigenSolver::kLanczos;
  return o;
}

FiedlerOptions dense() {
  FiedlerOptions o;
  o.solver = EigenSolver::kDense;
  return o;
}

double residual(const Graph& g, const FiedlerVector& fv) {
  double r2 = 0.0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    double lx = fv.vector[u];
    for (Vertex w : g.neighbors(u)) lx -= fv.vector[w] / std::sqrt(static_cast<double>(g.degree(u) * g.degree(w)));
    r2 += (lx - fv.lambda2 * fv.vector[u]) * (lx - fv.lambda2 * fv.vector[u]);
  }
  return std::sqrt(r2);
}

}  // namespace

TEST_CASE("lambda2 of small graphs by hand") {
  // K_{1,3}: spectrum {0, 1, 1, 2}; C4: {0, 1, 1, 2}; K_n: {0, n/(n-1) ...}
  CHECK(fiedler_vector(star(3), dense()).lambda2 == doctest::Approx(1.0));
  CHECK(fiedler_vector(star(3), lanczos()).lambda2 == doctest::Approx(1.0));
  CHECK(fiedler_vector(cycle(4), lanczos()).lambda2 == doctest::Approx(1.0));
  CHECK(fiedler_vector(complete(6), lanczos()).lambda2 == doctest::Approx(6.0 / 5.0));
  CHECK(fiedler_vector(path(2), lanczos()).lambda2 == doctest::Approx(2.0));
}

TEST_CASE("lambda2 against the dense spectrum") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto g = connected_random(40 + static_cast<Vertex>(seed) * 10, 0.12, seed);
    auto spectrum = oracle::normalized_laplacian_spectrum(g);
    auto fv = fiedler_vector(g, lanczos());
    CHECK(fv.lambda2 == doctest::Approx(spectrum[1]).epsilon(1e-8));
    CHECK(fv.residual_norm <= 1e-8);
    CHECK(residual(g, fv) <= 1e-7);
    // orthogonal to D^1/2 1 and unit length
    double dot = 0.0;
    double norm = 0.0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      dot += std::sqrt(static_cast<double>(g.degree(v))) * fv.vector[v];
      norm += fv.vector[v] * fv.vector[v];
    }
    CHECK(std::abs(dot) <= 1e-8);
    CHECK(norm == doctest::Approx(1.0));
  }
}

TEST_CASE("Les Miserables: Lanczos agrees with the dense solver") {
  auto g = lesmis();
  auto a = fiedler_vector(g, lanczos());
  auto b = fiedler_vector(g, dense());
  CHECK(std::abs(a.lambda2 - b.lambda2) <= 1e-6);
  CHECK(a.lambda2 == doctest::Approx(0.088134).epsilon(1e-5));
  // the sign convention makes the vectors comparable entrywise
  for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(std::abs(a.vector[v] - b.vector[v]) <= 1e-6);
}

TEST_CASE("Les Miserables Fiedler community") {
  auto r = fiedler_community(lesmis(), lanczos());
  CHECK(r.community.size == 36);
  CHECK(r.community.cut == 29);
  CHECK(r.community.method == "fiedler");
  CHECK(*r.community.conductance == doctest::Approx(29.0 / 219.0));
  CHECK(r.cheeger_holds);
}

TEST_CASE("Cheeger inequality on random connected graphs") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto g = connected_random(30, 0.15, seed * 7);
    auto r = fiedler_community(g);
    REQUIRE(r.community.conductance.has_value());
    double phi = *r.community.conductance;
    CHECK(r.lambda2 / 2.0 <= phi + 1e-10);
    CHECK(phi <= std::sqrt(2.0 * r.lambda2) + 1e-10);
    CHECK(r.cheeger_holds);
    CHECK(revalidate(g, r.community));
  }
}

TEST_CASE("sweep is invariant under flipping the eigenvector") {
  auto g = connected_random(60, 0.08, 3);
  auto fv = fiedler_vector(g);
  auto flipped = fv;
  for (auto& x : flipped.vector) x = -x;
  auto a = fiedler_community(g, fv);
  auto b = fiedler_community(g, flipped);
  // Reversing the order sweeps complements, which have the same
  // conductance. Only ties may break differently.
  CHECK(*a.community.conductance == doctest::Approx(*b.community.conductance).epsilon(1e-12));
}

TEST_CASE("Fiedler sweep is never below the exhaustive optimum") {
  for (Vertex n = 4; n <= 12; ++n) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto g = connected_random(n, 0.4, seed * 31 + n);
      auto best = oracle::exhaustive_min_conductance(g);
      auto r = fiedler_community(g);
      REQUIRE(best.has_value());
      CHECK(*r.community.conductance >= *best - 1e-12);
      CHECK(*best >= r.lambda2 / 2.0 - 1e-10);
    }
  }
}

TEST_CASE("bridged K5 pair splits at the bridge") {
  auto r = fiedler_community(bridged_k5_pair());
  CHECK(r.community.cut == 1);
  CHECK(r.community.size == 5);
}

TEST_CASE("ordering comparison") {
  auto cmp = compare_fiedler_orderings(lesmis());
  CHECK(cmp.normalized.ordering == FiedlerOrdering::kDegreeNormalized);
  CHECK(cmp.scaled.ordering == FiedlerOrdering::kDegreeScaled);
  CHECK(cmp.normalized.lambda2 == cmp.scaled.lambda2);
  auto w = cmp.winner == FiedlerOrdering::kDegreeNormalized ? cmp.normalized : cmp.scaled;
  CHECK(*w.community.conductance <= *cmp.normalized.community.conductance);
  CHECK(*w.community.conductance <= *cmp.scaled.community.conductance);
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(fiedler_vector(path(1)), DataError);
  std::vector<Vertex> sizes{3, 3};
  CHECK_THROWS_AS(fiedler_vector(clique_union(sizes)), DataError);
}

TEST_CASE("Lanczos reports failure to converge") {
  auto g = connected_random(300, 0.03, 5);
  FiedlerOptions o = lanczos();
  o.krylov_dim = 3;
  o.max_restarts = 1;
  o.tolerance = 1e-14;
  try {
    fiedler_vector(g, o);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.best_residual() > 1e-14);
  }
}
