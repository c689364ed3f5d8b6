#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypersketch/hypergraph.hpp"
#include "hypersketch/rng.hpp"

namespace hypersketch {

// Boolean Hidden Hypermatching instance: Alice holds x (length n = 2kt), Bob
// holds a perfect t-hypermatching M over [n] and a vector w of length n/t,
// with the promise that Mx xor w is all-zeros or all-ones.
struct BhhInstance {
  int n = 0;
  int t = 0;
  std::vector<bool> x;
  std::vector<std::vector<int>> matching;  // n/t disjoint ascending t-tuples
  std::vector<bool> w;
  int promise_bit = 0;

  bool promise_holds() const;
};

BhhInstance random_bhh_instance(int k, int t, int promise_bit, std::uint64_t seed);

enum class EdgeOwner { Alice, Bob };

// The two-party reduction graph: 4n + 2n/t vertices, 2-regular by
// construction (a disjoint union of cycles), with per-edge ownership.
// Vertex layout (paper indices are 1-based): u_i -> i-1, v_i -> 2n + i-1,
// w_i -> 4n + i-1.
struct GadgetGraph {
  Hypergraph graph;  // 2-uniform, unit weights
  std::vector<EdgeOwner> owner;
  int n_bhh = 0;
  int t = 0;

  std::size_t alice_edge_count() const;
};

GadgetGraph build_gadget(const BhhInstance& instance);

// Exact maximum cut of a 2-uniform hypergraph, per connected component:
// cycle components use the closed form (total weight, minus the lightest
// edge when the cycle is odd); anything else is brute-forced, guarded at 24
// vertices per component.
double exact_max_cut(const Hypergraph& g);

// Component cycle lengths, ascending, when the graph is a disjoint union of
// cycles (every vertex degree exactly 2); nullopt otherwise.
std::optional<std::vector<int>> cycle_lengths(const Hypergraph& g);

// Closed-form maximum cut of the gadget: 4n for a 0-instance and 4n + 2n/t
// for a 1-instance.
double gadget_expected_value(int n, int t, int promise_bit);

struct TwoPartyResult {
  double w_alice = 0.0;
  double w_bob = 0.0;
  double estimate = 0.0;  // 2/3 * (w_alice + w_bob)
};

// One-round protocol value: Alice sends her exact max cut, Bob combines. The
// estimate v obeys v <= w <= 3/2 * v for the true max cut w of the union.
TwoPartyResult two_party_estimate(int vertex_count, const std::vector<Hyperedge>& alice_edges,
                                  const std::vector<Hyperedge>& bob_edges);

}  // namespace hypersketch
