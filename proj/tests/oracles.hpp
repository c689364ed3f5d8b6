#pragma once

// Test-only oracles, written independently of the library paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "hypersketch/hypergraph.hpp"

namespace oracles {

// Straddle test by counting endpoints in S instead of flag scanning.
inline double cut_weight_recount(const hypersketch::Hypergraph& h,
                                 const std::vector<bool>& side) {
  double total = 0.0;
  for (const auto& e : h.edges()) {
    int in_s = 0;
    for (int v : e.endpoints) in_s += side[static_cast<std::size_t>(v)] ? 1 : 0;
    if (in_s > 0 && in_s < e.cardinality()) total += e.weight;
  }
  return total;
}

// Minimum nontrivial cut weight by direct bipartition sweep (n <= 20).
inline double min_cut_by_masks(const hypersketch::Hypergraph& h) {
  const int n = h.vertex_count();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    std::vector<bool> side(static_cast<std::size_t>(n), false);
    for (int v = 1; v < n; ++v) side[static_cast<std::size_t>(v)] = ((mask << 1) >> v) & 1u;
    best = std::min(best, cut_weight_recount(h, side));
  }
  return best;
}

// Definitional strong connectivity: the best min-cut weight over all vertex
// sets (|U| >= 2) containing every endpoint of the edge. Exponential; n <= 10.
inline double strength_by_subsets(const hypersketch::Hypergraph& h, std::size_t edge_index) {
  const int n = h.vertex_count();
  const auto& endpoints = h.edge(edge_index).endpoints;
  std::uint32_t must = 0;
  for (int v : endpoints) must |= (1u << v);
  double best = 0.0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    if ((subset & must) != must) continue;
    std::vector<int> vertices;
    for (int v = 0; v < n; ++v)
      if ((subset >> v) & 1u) vertices.push_back(v);
    if (vertices.size() < 2) continue;
    const auto induced = hypersketch::induced_subhypergraph(h, vertices);
    best = std::max(best, min_cut_by_masks(induced.sub));
  }
  return best;
}

// Max cut by full bipartition sweep; components are not split out.
inline double max_cut_by_masks(const hypersketch::Hypergraph& h) {
  const int n = h.vertex_count();
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<bool> side(static_cast<std::size_t>(n), false);
    for (int v = 1; v < n; ++v) side[static_cast<std::size_t>(v)] = ((mask << 1) >> v) & 1u;
    best = std::max(best, cut_weight_recount(h, side));
  }
  return best;
}

inline bool approx_rel(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace oracles
