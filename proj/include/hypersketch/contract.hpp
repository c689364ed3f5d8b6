#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hypersketch/hypergraph.hpp"
#include "hypersketch/mincut.hpp"
#include "hypersketch/rng.hpp"

namespace hypersketch {

// Working state of randomized contraction: a hypergraph over super-vertices
// plus the partition of original vertices they stand for. Edges reduced to a
// single super-vertex are dropped immediately, so every surviving edge has
// cardinality >= 2. Parallel edges stay distinct.
class ContractionState {
 public:
  ContractionState(const Hypergraph& h, std::uint64_t seed);

  int super_count() const { return static_cast<int>(alive_.size()); }
  const std::vector<int>& alive_supers() const { return alive_; }
  const std::vector<Hyperedge>& edges() const { return edges_; }  // endpoints are super ids
  double total_weight() const;

  // Blocks of original vertices, one per alive super-vertex, ascending ids.
  std::vector<std::vector<int>> partition() const;

  // Merges all endpoints of edges()[index] into one super-vertex and rewrites
  // the surviving edges through the merge.
  void contract_edge(std::size_t index);

  // Lifts a side assignment over alive supers (aligned with alive_supers())
  // to a cut of the original hypergraph.
  Cut lift(const std::vector<bool>& super_side) const;

  Rng& rng() { return rng_; }

 private:
  int n_ = 0;
  std::vector<int> alive_;                  // sorted alive super ids
  std::vector<std::vector<int>> members_;   // super id -> original vertices
  std::vector<Hyperedge> edges_;
  Rng rng_;
};

// One run of randomized contraction: while more than alpha*r super-vertices
// remain, contract an edge drawn with probability proportional to weight;
// then return the cut induced by a uniformly random nontrivial bipartition
// of the remaining super-vertices. alpha must be a half-integer >= 1.
Cut contract_algorithm(const Hypergraph& h, double alpha, std::uint64_t seed);

// Lower bound on the probability that a single run outputs any fixed cut of
// weight at most alpha times the minimum:
//   (2a+1)/(r+1) * C(n - a(r-2), 2a)^-1 / (2^(ar-1) - 1),
// with the binomial part equal to 1 once n <= alpha*r. The upper index may
// be non-integral for half-integer alpha; 2a is an integer, so the binomial
// is a real falling-factorial product.
double capture_probability_bound(int n, int r, double alpha);

// `trials` independent runs (per-trial seed derived from `seed`), canonical
// cuts keyed to output counts. Runs in parallel; the result is order-free.
std::map<Cut, long> contraction_frequency(const Hypergraph& h, double alpha, long trials,
                                          std::uint64_t seed);

// Distinct cuts of weight <= alpha * min-cut found across `trials` runs.
std::vector<Cut> enumerate_near_min_cuts(const Hypergraph& h, double alpha, long trials,
                                         std::uint64_t seed);

// Randomized min-cut fallback for cross-checking: best cut over
// ceil(3 n^2 ln n) contraction runs at alpha = 1.
MinCutResult min_cut_randomized(const Hypergraph& h, std::uint64_t seed);

// Lower-bound family on n = r*m - m + 1 vertices: m weight-1 hyperedges of
// size r sharing exactly one center vertex, plus a 2-uniform clique of
// per-edge weight (alpha-1)/2^r on each hyperedge's endpoints. For alpha > 1
// it carries Omega(m * 2^r) cuts within alpha of the minimum.
Hypergraph sunflower(int r, int m, double alpha);

}  // namespace hypersketch
