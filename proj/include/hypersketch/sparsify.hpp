#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hypersketch/hypergraph.hpp"
#include "hypersketch/mincut.hpp"

namespace hypersketch {

struct SparsifyParams {
  double epsilon = 0.5;    // in (0,1)
  double d = 1.0;          // failure exponent, >= 1
  std::uint64_t seed = 0;
  // Additive log coefficient in the sampling probability; negative means the
  // default d+2. The alternative constant d+3 can be selected here.
  double log_coeff = -1.0;
};

struct SparsifierReport {
  std::size_t edge_count = 0;
  std::optional<double> expected_edge_count;        // sum of p_e, when sampled
  std::optional<double> max_relative_cut_error;     // oracle scale only
  bool within_epsilon = true;
};

// Minimum expected cut weight that makes every cut of an independently
// sampled subhypergraph concentrate within (1 +- eps), w.p. >= 1 - n^-d:
//   3/eps^2 * (r + (d+2) ln n).
double concentration_threshold(double epsilon, int r, double d, double n);

// Per-edge inclusion probability min(1, 3*(coeff*ln n + r) / (k_e eps^2)),
// coeff defaulting to d+2.
double sampling_probability(double k_e, double epsilon, double d, double n, int r,
                            double log_coeff = -1.0);

// Importance-sampling sparsifier: include edge e independently with
// probability p_e driven by its strong connectivity, reweighting to w_e/p_e.
// The result is a subhypergraph on the same vertex set. Per-edge draws are
// counter-based on (seed, edge index), so they are order-independent.
std::pair<Hypergraph, SparsifierReport> sparsify(const Hypergraph& h, const SparsifyParams& params);

// Same, with a precomputed strong-connectivity map (must match h's edges).
std::pair<Hypergraph, SparsifierReport> sparsify(const Hypergraph& h, const SparsifyParams& params,
                                                 const StrongConnectivityMap& strengths);

// Exhaustive all-cuts comparison (n <= 20): max |w'(C)/w(C) - 1| over every
// nontrivial cut; a cut with w(C)=0 but w'(C)>0 reports infinite error.
SparsifierReport verify_sparsifier(const Hypergraph& h, const Hypergraph& h_eps, double epsilon);

// Insert-only streaming builder. The working set is re-sparsified whenever it
// exceeds twice the level target 8*n*(r + (d+2) ln n)/eps_i^2, where the i-th
// compression uses eps_i = eps/2^(i+1); the levels' errors compose to at most
// (1 + eps). Streams that never trigger pass through verbatim.
class StreamingSparsifier {
 public:
  StreamingSparsifier(int vertex_count, SparsifyParams params);

  void push(std::vector<int> endpoints, double weight);
  void push(const Hyperedge& e) { push(e.endpoints, e.weight); }

  Hypergraph result() const;
  std::size_t working_size() const { return working_.size(); }
  int compressions() const { return levels_done_; }

 private:
  void maybe_compress();
  double level_epsilon(int level) const;
  double level_target(double level_eps) const;

  int n_ = 0;
  SparsifyParams params_;
  int max_cardinality_seen_ = 2;
  int levels_done_ = 0;
  std::vector<Hyperedge> working_;
};

Hypergraph streaming_sparsify(const std::vector<Hyperedge>& stream, int vertex_count,
                              const SparsifyParams& params);

}  // namespace hypersketch
