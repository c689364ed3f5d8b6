#pragma once

#include <vector>

#include "hypersketch/hypergraph.hpp"

namespace hypersketch {

struct MinCutResult {
  Cut cut;
  double weight = 0.0;
};

// Global minimum nontrivial cut via maximum-adjacency orderings generalized
// to hyperedges: a vertex's key is the total weight of edges containing it
// and at least one visited vertex; the cut of each phase isolates the last
// visited vertex, and the last two are merged between phases. Disconnected
// inputs return a weight-0 cut separating components.
MinCutResult min_cut(const Hypergraph& h);

// Per-edge strong connectivity k_e: e belongs to a k-strong component iff
// some vertex-induced subhypergraph containing all of e has every cut >= k.
struct StrongConnectivityMap {
  std::vector<double> k;  // indexed by edge

  int distinct_values() const;
};

// Recursive decomposition: compute the min cut, credit its weight to every
// edge fully inside the current vertex set, recurse into both sides; k_e is
// the max credit over all subhypergraphs that fully contained e.
StrongConnectivityMap strong_connectivities(const Hypergraph& h);

// Oracle-scale check (|vertices| <= 20): does every nontrivial cut of the
// induced subhypergraph weigh at least k? Vacuously true below 2 vertices.
bool k_strong_check(const Hypergraph& h, const std::vector<int>& vertices, double k);

}  // namespace hypersketch
