#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hypersketch {

// A hyperedge over 0-based vertex indices. Endpoints are kept sorted and
// deduplicated; weight must be positive and finite. Cardinality-1 edges are
// legal (contraction produces them) but never contribute to any cut.
struct Hyperedge {
  std::vector<int> endpoints;
  double weight = 1.0;

  int cardinality() const { return static_cast<int>(endpoints.size()); }
  bool operator==(const Hyperedge&) const = default;
};

// Sorts, dedups and range-checks an endpoint list against vertex count n.
Hyperedge make_edge(std::vector<int> endpoints, double weight, int n);

// Immutable weighted hypergraph on vertices 0..n-1. Safe to share across
// concurrent readers; every operation on it is pure.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int vertex_count, std::vector<Hyperedge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(std::size_t i) const { return edges_[i]; }

  // Largest edge cardinality (the uniformity r); 0 when edgeless.
  int max_cardinality() const;
  double total_weight() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  int n_ = 0;
  std::vector<Hyperedge> edges_;
};

// A vertex bipartition (S, V\S), stored as the indicator of S. Two Cuts are
// equal iff they describe the same bipartition; the canonical representative
// keeps vertex 0 out of S.
class Cut {
 public:
  Cut() = default;
  explicit Cut(std::vector<bool> side) : side_(std::move(side)) {}
  static Cut from_true_side(int n, const std::vector<int>& s);

  std::size_t size() const { return side_.size(); }
  bool in_s(int v) const { return side_[static_cast<std::size_t>(v)]; }
  const std::vector<bool>& side() const { return side_; }

  Cut complement() const;
  Cut canonical() const;
  bool is_nontrivial() const;  // both sides populated
  std::string to_bitstring() const;  // canonical form, '0'/'1' per vertex

  bool operator==(const Cut& o) const;
  bool operator<(const Cut& o) const;  // canonical lexicographic order

 private:
  std::vector<bool> side_;
};

struct WeightedCut {
  Cut cut;
  double weight = 0.0;
};

// Total weight of edges with endpoints on both sides of c.
double cut_weight(const Hypergraph& h, const Cut& c);

// Exhaustive oracle: all nontrivial cuts of weight <= bound, each bipartition
// once, sorted by weight then canonical side vector. Guarded at n <= 26.
std::vector<WeightedCut> enumerate_cuts_below(const Hypergraph& h, double bound);

struct InducedSubhypergraph {
  Hypergraph sub;
  std::vector<int> vertex_of;  // sub vertex  -> original vertex
  std::vector<int> edge_of;    // sub edge    -> original edge index
};

// Vertex-induced subhypergraph: keeps exactly the edges with all endpoints in
// `vertices`, reindexed; the mappings back to the original are returned too.
InducedSubhypergraph induced_subhypergraph(const Hypergraph& h, const std::vector<int>& vertices);

struct ComponentLabels {
  std::vector<int> label;  // per vertex, component ids in first-seen order
  int count = 0;
};

ComponentLabels connected_components(const Hypergraph& h);

// Text format: "n m" then m lines "w k v1 ... vk". Weights round-trip
// bit-exactly through shortest-form decimals.
Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

}  // namespace hypersketch
