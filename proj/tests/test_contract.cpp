#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hypersketch/contract.hpp"
#include "hypersketch/generators.hpp"
#include "hypersketch/mincut.hpp"
#include "oracles.hpp"

using namespace hypersketch;

namespace {

Hypergraph unit_triangle() {
  return Hypergraph(3, {{{0, 1}, 1.0}, {{1, 2}, 1.0}, {{0, 2}, 1.0}});
}

}  // namespace

TEST_CASE("contract_edge merges endpoints and keeps parallel edges") {
  ContractionState state(unit_triangle(), 0);
  state.contract_edge(0);  // contract {0,1}
  CHECK(state.super_count() == 2);
  REQUIRE(state.edges().size() == 2);
  CHECK(state.edges()[0].endpoints == state.edges()[1].endpoints);
  CHECK(state.edges()[0].weight == 1.0);

  const auto blocks = state.partition();
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<int>{0, 1});
  CHECK(blocks[1] == std::vector<int>{2});
}

TEST_CASE("contract_edge shrinks overlapping edges") {
  Hypergraph h(4, {{{0, 1, 2, 3}, 1.0}, {{0, 1, 2}, 1.0}});
  ContractionState state(h, 0);
  state.contract_edge(1);
  CHECK(state.super_count() == 2);
  REQUIRE(state.edges().size() == 1);
  CHECK(state.edges()[0].endpoints == std::vector<int>{0, 3});
}

TEST_CASE("contracting the only edge removes it entirely") {
  Hypergraph h(2, {{{0, 1}, 1.0}});
  ContractionState state(h, 0);
  state.contract_edge(0);
  CHECK(state.super_count() == 1);
  CHECK(state.edges().empty());
}

TEST_CASE("contraction state drops self-loops upfront and validates indices") {
  Hypergraph h(3, {{{0}, 2.0}, {{0, 1}, 1.0}, {{1, 2}, 1.0}});
  ContractionState state(h, 0);
  CHECK(state.edges().size() == 2);  // the cardinality-1 edge is gone
  CHECK_THROWS_AS(state.contract_edge(17), std::invalid_argument);
}

TEST_CASE("contraction invariants along a random run") {
  const auto h = random_uniform_hypergraph(10, 25, 4, 9, true);
  ContractionState state(h, 42);
  double prev_weight = state.total_weight();
  while (!state.edges().empty() && state.super_count() > 2) {
    const std::size_t pick = state.rng().below(state.edges().size());
    state.contract_edge(pick);

    for (const auto& e : state.edges()) CHECK(e.cardinality() >= 2);
    CHECK(state.total_weight() <= prev_weight + 1e-12);
    prev_weight = state.total_weight();

    const auto blocks = state.partition();
    std::set<int> seen;
    std::size_t covered = 0;
    for (const auto& b : blocks) {
      covered += b.size();
      seen.insert(b.begin(), b.end());
    }
    CHECK(covered == 10);
    CHECK(seen.size() == 10);  // disjoint blocks covering all vertices
  }
}

TEST_CASE("contraction preserves cuts that separate no merged pair") {
  const auto h = random_uniform_hypergraph(9, 22, 3, 31, true);
  Rng rng(7);
  for (int probe = 0; probe < 20; ++probe) {
    std::vector<bool> side(9);
    bool any = false, all = true;
    for (int v = 0; v < 9; ++v) {
      side[static_cast<std::size_t>(v)] = rng.coin();
      any = any || side[static_cast<std::size_t>(v)];
      all = all && side[static_cast<std::size_t>(v)];
    }
    if (!any || all) continue;
    const Cut cut(side);
    const double before = cut_weight(h, cut);

    // Contract a non-crossing edge, then compare the lifted cut's weight.
    ContractionState state(h, probe);
    int non_crossing = -1;
    for (std::size_t e = 0; e < state.edges().size(); ++e) {
      const auto& ends = state.edges()[e].endpoints;
      const bool first = side[static_cast<std::size_t>(ends[0])];
      if (std::all_of(ends.begin(), ends.end(),
                      [&](int v) { return side[static_cast<std::size_t>(v)] == first; })) {
        non_crossing = static_cast<int>(e);
        break;
      }
    }
    if (non_crossing < 0) continue;
    state.contract_edge(static_cast<std::size_t>(non_crossing));

    double after = 0.0;
    const auto blocks = state.partition();
    for (const auto& e : state.edges()) {
      bool has_true = false, has_false = false;
      for (int v : e.endpoints) {
        // super id v is the lowest original vertex of its block; look its
        // side up through any member.
        const auto& members =
            blocks[static_cast<std::size_t>(std::lower_bound(state.alive_supers().begin(),
                                                             state.alive_supers().end(), v) -
                                            state.alive_supers().begin())];
        (side[static_cast<std::size_t>(members[0])] ? has_true : has_false) = true;
      }
      if (has_true && has_false) after += e.weight;
    }
    CHECK(after == doctest::Approx(before).epsilon(1e-12));
  }
}

TEST_CASE("contract_algorithm output is always a nontrivial cut, deterministically") {
  const auto h = random_uniform_hypergraph(9, 20, 3, 3, true);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Cut cut = contract_algorithm(h, 1.0, seed);
    CHECK(cut.is_nontrivial());
    CHECK(cut == contract_algorithm(h, 1.0, seed));
  }
}

TEST_CASE("no contractions when the vertex count starts at alpha*r") {
  // alpha*r = 3 >= n, so the run is a uniform draw over the 3 bipartitions.
  const auto h = unit_triangle();
  std::map<Cut, long> freq;
  const long trials = 30000;
  for (long s = 0; s < trials; ++s) ++freq[contract_algorithm(h, 1.5, static_cast<std::uint64_t>(s))];
  REQUIRE(freq.size() == 3);
  for (const auto& [cut, count] : freq) {
    (void)cut;
    const double f = static_cast<double>(count) / trials;
    const double sigma = std::sqrt((1.0 / 3.0) * (2.0 / 3.0) / trials);
    CHECK(f >= 1.0 / 3.0 - 4.0 * sigma);
    CHECK(f <= 1.0 / 3.0 + 4.0 * sigma);
  }
}

TEST_CASE("triangle min cuts appear with the Karger frequency") {
  const auto h = unit_triangle();
  const long trials = 100000;
  const auto freq = contraction_frequency(h, 1.0, trials, 2024);
  const auto min_cuts = enumerate_cuts_below(h, 2.0);
  REQUIRE(min_cuts.size() == 3);
  const double sigma = std::sqrt((1.0 / 3.0) * (2.0 / 3.0) / trials);
  for (const auto& wc : min_cuts) {
    const auto it = freq.find(wc.cut);
    REQUIRE(it != freq.end());
    CHECK(static_cast<double>(it->second) / trials >= 1.0 / 3.0 - 3.0 * sigma);
  }
}

TEST_CASE("3-uniform capture frequency clears the bound") {
  const auto h = random_uniform_hypergraph(8, 14, 3, 77, true);
  const auto mc = min_cut(h);
  const auto min_cuts = enumerate_cuts_below(h, mc.weight * (1.0 + 1e-12));
  const long trials = 100000;
  const auto freq = contraction_frequency(h, 1.0, trials, 4096);
  const double bound = capture_probability_bound(8, 3, 1.0);
  const double sigma = std::sqrt(bound * (1.0 - bound) / trials);
  for (const auto& wc : min_cuts) {
    const auto it = freq.find(wc.cut);
    const double f = it == freq.end() ? 0.0 : static_cast<double>(it->second) / trials;
    CHECK(f >= bound - 4.0 * sigma);
  }
}

TEST_CASE("capture_probability_bound pinned values") {
  for (int n : {3, 5, 9, 20})
    CHECK(capture_probability_bound(n, 2, 1.0) ==
          doctest::Approx(2.0 / (static_cast<double>(n) * (n - 1))).epsilon(1e-12));
  CHECK(capture_probability_bound(6, 3, 1.0) == doctest::Approx(0.025).epsilon(1e-12));
  CHECK(capture_probability_bound(3, 3, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("capture_probability_bound rejects bad parameters") {
  CHECK_THROWS_AS(capture_probability_bound(1, 3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(capture_probability_bound(5, 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(capture_probability_bound(5, 3, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(capture_probability_bound(5, 3, 1.25), std::invalid_argument);
}

TEST_CASE("half-integer alpha keeps the bound finite and positive") {
  for (int n = 6; n <= 14; ++n) {
    const double b = capture_probability_bound(n, 3, 1.5);
    CHECK(b > 0.0);
    CHECK(b < 1.0);
  }
}

TEST_CASE("enumerate_near_min_cuts on the triangle") {
  const auto cuts = enumerate_near_min_cuts(unit_triangle(), 1.0, 10000, 11);
  CHECK(cuts.size() == 3);
  CHECK_THROWS_AS(enumerate_near_min_cuts(unit_triangle(), 0.5, 100, 0), std::invalid_argument);
}

TEST_CASE("sunflower structure and near-min-cut recovery") {
  const auto h = sunflower(3, 2, 2.0);
  CHECK(h.vertex_count() == 5);
  REQUIRE(h.edge_count() == 8);
  int heavy = 0, pairs = 0;
  for (const auto& e : h.edges()) {
    if (e.cardinality() == 3) {
      ++heavy;
      CHECK(e.weight == 1.0);
    } else {
      ++pairs;
      CHECK(e.weight == 0.125);
    }
  }
  CHECK(heavy == 2);
  CHECK(pairs == 6);

  for (int r : {2, 3, 4}) {
    for (int m : {1, 2, 3}) {
      CHECK(sunflower(r, m, 1.5).vertex_count() == r * m - m + 1);
    }
  }

  // Every oracle near-minimum cut is recovered by repeated contraction.
  const auto mc = min_cut(h);
  const auto expect = enumerate_cuts_below(h, 2.0 * mc.weight * (1.0 + 1e-12));
  const auto found = enumerate_near_min_cuts(h, 2.0, 30000, 5);
  std::set<Cut> found_set(found.begin(), found.end());
  for (const auto& wc : expect) CHECK(found_set.count(wc.cut) == 1);
  CHECK(found.size() == expect.size());
}

TEST_CASE("contract_algorithm validates alpha and size") {
  CHECK_THROWS_AS(contract_algorithm(unit_triangle(), 1.3, 0), std::invalid_argument);
  CHECK_THROWS_AS(contract_algorithm(unit_triangle(), 0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(contract_algorithm(Hypergraph(1, {}), 1.0, 0), std::invalid_argument);
}

TEST_CASE("disconnected remainder still yields a valid cut") {
  // Two far components: contractions exhaust edges while many supers remain.
  Hypergraph h(6, {{{0, 1}, 1.0}, {{4, 5}, 1.0}});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Cut cut = contract_algorithm(h, 1.0, seed);
    CHECK(cut.is_nontrivial());
    CHECK(cut.size() == 6);
  }
}
