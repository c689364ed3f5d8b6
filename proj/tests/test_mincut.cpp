#include <doctest.h>

#include <algorithm>
#include <set>

#include "hypersketch/contract.hpp"
#include "hypersketch/errors.hpp"
#include "hypersketch/generators.hpp"
#include "hypersketch/mincut.hpp"
#include "oracles.hpp"

using namespace hypersketch;

namespace {

Hypergraph unit_triangle() {
  return Hypergraph(3, {{{0, 1}, 1.0}, {{1, 2}, 1.0}, {{0, 2}, 1.0}});
}

// Two unit triangles joined by one bridge edge of weight 1.
Hypergraph bridged_triangles() {
  return Hypergraph(6, {{{0, 1}, 1.0},
                        {{1, 2}, 1.0},
                        {{0, 2}, 1.0},
                        {{3, 4}, 1.0},
                        {{4, 5}, 1.0},
                        {{3, 5}, 1.0},
                        {{2, 3}, 1.0}});
}

}  // namespace

TEST_CASE("min_cut trivial instances") {
  Hypergraph single(3, {{{0, 1, 2}, 5.0}});
  CHECK(min_cut(single).weight == 5.0);
  CHECK(min_cut(unit_triangle()).weight == 2.0);
  CHECK(min_cut(bridged_triangles()).weight == 1.0);
}

TEST_CASE("min_cut matches the exhaustive oracle on random instances") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(derive_seed(99, seed));
    const int n = 4 + rng.below_int(9);  // [4, 12]
    const int m = n + rng.below_int(2 * n);
    const auto h = random_uniform_hypergraph(n, m, 3, seed, true, 0.5, 2.0);
    const auto mc = min_cut(h);
    CHECK(oracles::approx_rel(mc.weight, oracles::min_cut_by_masks(h)));
    CHECK(mc.weight == cut_weight(h, mc.cut));  // reported weight matches its cut
  }
}

TEST_CASE("min_cut is invariant under vertex relabeling and edge reorder") {
  const auto h = random_uniform_hypergraph(8, 16, 3, 5, true);
  const double w = min_cut(h).weight;

  std::vector<Hyperedge> reversed(h.edges().rbegin(), h.edges().rend());
  CHECK(min_cut(Hypergraph(8, reversed)).weight == doctest::Approx(w).epsilon(1e-12));

  std::vector<int> perm{3, 7, 1, 0, 6, 2, 5, 4};
  std::vector<Hyperedge> relabeled;
  for (const auto& e : h.edges()) {
    Hyperedge copy = e;
    for (int& v : copy.endpoints) v = perm[static_cast<std::size_t>(v)];
    relabeled.push_back(copy);
  }
  CHECK(min_cut(Hypergraph(8, relabeled)).weight == doctest::Approx(w).epsilon(1e-12));
}

TEST_CASE("min_cut on disconnected input returns a zero cut") {
  Hypergraph h(4, {{{0, 1}, 3.0}, {{2, 3}, 2.0}});
  const auto mc = min_cut(h);
  CHECK(mc.weight == 0.0);
  CHECK(mc.cut.is_nontrivial());
  CHECK(cut_weight(h, mc.cut) == 0.0);
}

TEST_CASE("min_cut rejects single-vertex input") {
  CHECK_THROWS_AS(min_cut(Hypergraph(1, {{{0}, 1.0}})), std::invalid_argument);
}

TEST_CASE("randomized fallback agrees with the deterministic min cut") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto h = random_uniform_hypergraph(7, 14, 3, 40 + seed, true);
    CHECK(oracles::approx_rel(min_cut(h).weight, min_cut_randomized(h, seed).weight));
  }
}

TEST_CASE("strong_connectivities on the named instances") {
  Hypergraph single(3, {{{0, 1, 2}, 5.0}});
  CHECK(strong_connectivities(single).k == std::vector<double>{5.0});

  const auto tri = strong_connectivities(unit_triangle());
  CHECK(tri.k == std::vector<double>{2.0, 2.0, 2.0});

  const auto bridged = strong_connectivities(bridged_triangles());
  for (int e = 0; e < 6; ++e) CHECK(bridged.k[static_cast<std::size_t>(e)] == 2.0);
  CHECK(bridged.k[6] == 1.0);  // the bridge straddles the first cut
}

TEST_CASE("strong_connectivities matches the definitional brute force") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(derive_seed(123, seed));
    const int n = 4 + rng.below_int(5);  // [4, 8]
    const int m = n + rng.below_int(n);
    const auto h = random_uniform_hypergraph(n, m, 3, 70 + seed, true);
    const auto strengths = strong_connectivities(h);
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      CHECK(strengths.k[e] == doctest::Approx(oracles::strength_by_subsets(h, e)).epsilon(1e-12));
    }
  }
}

TEST_CASE("strong_connectivities structural invariants") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto h = random_uniform_hypergraph(9, 20, 3, 200 + seed, true, 0.5, 2.0);
    const auto strengths = strong_connectivities(h);
    REQUIRE(strengths.k.size() == h.edge_count());
    CHECK(strengths.distinct_values() <= h.vertex_count());
    const double w_min = min_cut(h).weight;
    double inverse_sum = 0.0;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      CHECK(strengths.k[e] >= w_min - 1e-12);  // k_e >= component min cut
      inverse_sum += h.edge(e).weight / strengths.k[e];
    }
    // The decomposition charges each edge's w_e/k_e to the node that first
    // cuts it; a binary recursion tree has at most n-1 such nodes.
    CHECK(inverse_sum <= h.vertex_count() - 1 + 1e-9);
  }
}

TEST_CASE("strong_connectivities on a disconnected hypergraph") {
  // Two separate triangles: the top-level zero cut contributes nothing and
  // each component keeps its own strength.
  Hypergraph h(6,
               {{{0, 1}, 1.0}, {{1, 2}, 1.0}, {{0, 2}, 1.0}, {{3, 4}, 2.0}, {{4, 5}, 2.0}, {{3, 5}, 2.0}});
  const auto strengths = strong_connectivities(h);
  for (int e = 0; e < 3; ++e) CHECK(strengths.k[static_cast<std::size_t>(e)] == 2.0);
  for (int e = 3; e < 6; ++e) CHECK(strengths.k[static_cast<std::size_t>(e)] == 4.0);
}

TEST_CASE("k_strong_check basics and guard") {
  const auto tri = unit_triangle();
  CHECK(k_strong_check(tri, {0, 1, 2}, 2.0));
  CHECK_FALSE(k_strong_check(tri, {0, 1, 2}, 2.5));
  CHECK(k_strong_check(tri, {0}, 1e9));  // vacuous on a single vertex
  std::vector<int> too_many(21);
  for (int v = 0; v < 21; ++v) too_many[static_cast<std::size_t>(v)] = v;
  CHECK_THROWS_AS(k_strong_check(Hypergraph(21, {{{0, 1}, 1.0}}), too_many, 1.0),
                  ResourceLimitError);
}
