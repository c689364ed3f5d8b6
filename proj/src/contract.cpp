#include "hypersketch/contract.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypersketch/parallel.hpp"

namespace hypersketch {

namespace {

bool is_half_integer(double alpha) { return std::floor(2.0 * alpha) == 2.0 * alpha; }

void validate_alpha(double alpha) {
  if (!(alpha >= 1.0) || !is_half_integer(alpha))
    throw std::invalid_argument("alpha must be a half-integer >= 1");
}

}  // namespace

ContractionState::ContractionState(const Hypergraph& h, std::uint64_t seed)
    : n_(h.vertex_count()), rng_(seed) {
  alive_.resize(static_cast<std::size_t>(n_));
  members_.resize(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) {
    alive_[static_cast<std::size_t>(v)] = v;
    members_[static_cast<std::size_t>(v)] = {v};
  }
  for (const auto& e : h.edges()) {
    if (e.cardinality() >= 2) edges_.push_back(e);
  }
}

double ContractionState::total_weight() const {
  double total = 0.0;
  for (const auto& e : edges_) total += e.weight;
  return total;
}

std::vector<std::vector<int>> ContractionState::partition() const {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(alive_.size());
  for (int s : alive_) {
    auto block = members_[static_cast<std::size_t>(s)];
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

void ContractionState::contract_edge(std::size_t index) {
  if (index >= edges_.size()) throw std::invalid_argument("contract_edge: no such edge");
  const std::vector<int> merged = edges_[index].endpoints;
  if (merged.size() < 2)
    throw std::invalid_argument("contract_edge: cannot contract a self-loop");

  const int target = merged[0];  // endpoints are sorted; keep the lowest id
  for (std::size_t i = 1; i < merged.size(); ++i) {
    const int source = merged[i];
    auto& tm = members_[static_cast<std::size_t>(target)];
    auto& sm = members_[static_cast<std::size_t>(source)];
    tm.insert(tm.end(), sm.begin(), sm.end());
    sm.clear();
  }
  alive_.erase(std::remove_if(alive_.begin(), alive_.end(),
                              [&](int s) {
                                return s != target &&
                                       std::binary_search(merged.begin(), merged.end(), s);
                              }),
               alive_.end());

  std::vector<Hyperedge> survivors;
  survivors.reserve(edges_.size());
  for (auto& e : edges_) {
    for (int& v : e.endpoints) {
      if (std::binary_search(merged.begin(), merged.end(), v)) v = target;
    }
    std::sort(e.endpoints.begin(), e.endpoints.end());
    e.endpoints.erase(std::unique(e.endpoints.begin(), e.endpoints.end()), e.endpoints.end());
    if (e.endpoints.size() >= 2) survivors.push_back(std::move(e));
  }
  edges_ = std::move(survivors);
}

Cut ContractionState::lift(const std::vector<bool>& super_side) const {
  if (super_side.size() != alive_.size())
    throw std::invalid_argument("lift: side length does not match super-vertex count");
  std::vector<bool> side(static_cast<std::size_t>(n_), false);
  for (std::size_t i = 0; i < alive_.size(); ++i) {
    if (!super_side[i]) continue;
    for (int v : members_[static_cast<std::size_t>(alive_[i])])
      side[static_cast<std::size_t>(v)] = true;
  }
  return Cut(std::move(side));
}

Cut contract_algorithm(const Hypergraph& h, double alpha, std::uint64_t seed) {
  validate_alpha(alpha);
  if (h.vertex_count() < 2)
    throw std::invalid_argument("contract_algorithm needs at least 2 vertices");

  ContractionState state(h, seed);
  const int r = std::max(2, h.max_cardinality());
  const double limit = alpha * r;  // exact: half-integer times integer

  while (static_cast<double>(state.super_count()) > limit) {
    const auto& edges = state.edges();
    if (edges.empty()) break;  // disconnected remainder: bipartition what is left
    const double total = state.total_weight();
    const double u = state.rng().unit() * total;
    double acc = 0.0;
    std::size_t pick = edges.size() - 1;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      acc += edges[i].weight;
      if (u < acc) {
        pick = i;
        break;
      }
    }
    state.contract_edge(pick);
  }

  // Uniform over the 2^(k-1)-1 nontrivial bipartitions: the lowest super
  // stays out of S, the rest flip coins, all-empty rejected.
  const std::size_t k = static_cast<std::size_t>(state.super_count());
  std::vector<bool> super_side(k, false);
  bool any = false;
  while (!any) {
    for (std::size_t i = 1; i < k; ++i) {
      super_side[i] = state.rng().coin();
      any = any || super_side[i];
    }
  }
  return state.lift(super_side).canonical();
}

double capture_probability_bound(int n, int r, double alpha) {
  if (n < 2) throw std::invalid_argument("capture_probability_bound: n must be >= 2");
  if (r < 2) throw std::invalid_argument("capture_probability_bound: r must be >= 2");
  validate_alpha(alpha);

  const double divisor = std::pow(2.0, alpha * r - 1.0) - 1.0;
  if (static_cast<double>(n) <= alpha * r) return 1.0 / divisor;

  const int two_alpha = static_cast<int>(std::lround(2.0 * alpha));
  const double x = static_cast<double>(n) - alpha * (r - 2);
  double binom = 1.0;
  for (int j = 0; j < two_alpha; ++j) binom *= (x - j) / (j + 1);
  const double q = (2.0 * alpha + 1.0) / (r + 1.0) / binom;
  return q / divisor;
}

std::map<Cut, long> contraction_frequency(const Hypergraph& h, double alpha, long trials,
                                          std::uint64_t seed) {
  validate_alpha(alpha);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<Cut> outputs(static_cast<std::size_t>(trials));
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t i) {
    outputs[i] = contract_algorithm(h, alpha, derive_seed(seed, i));
  });
  std::map<Cut, long> freq;
  for (const auto& c : outputs) ++freq[c];
  return freq;
}

std::vector<Cut> enumerate_near_min_cuts(const Hypergraph& h, double alpha, long trials,
                                         std::uint64_t seed) {
  validate_alpha(alpha);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const auto mc = min_cut(h);
  const double bound = alpha * mc.weight * (1.0 + 1e-12);
  std::vector<Cut> result;
  for (const auto& [cut, count] : contraction_frequency(h, alpha, trials, seed)) {
    (void)count;
    if (cut_weight(h, cut) <= bound) result.push_back(cut);
  }
  return result;
}

MinCutResult min_cut_randomized(const Hypergraph& h, std::uint64_t seed) {
  const int n = h.vertex_count();
  if (n < 2) throw std::invalid_argument("min_cut_randomized needs at least 2 vertices");
  const long trials =
      static_cast<long>(std::ceil(3.0 * static_cast<double>(n) * n * std::log(n)));
  std::vector<Cut> outputs(static_cast<std::size_t>(trials));
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t i) {
    outputs[i] = contract_algorithm(h, 1.0, derive_seed(seed, i));
  });
  MinCutResult best{outputs[0], cut_weight(h, outputs[0])};
  for (const auto& c : outputs) {
    const double w = cut_weight(h, c);
    if (w < best.weight) best = {c, w};
  }
  return best;
}

Hypergraph sunflower(int r, int m, double alpha) {
  if (r < 2) throw std::invalid_argument("sunflower: r must be >= 2");
  if (m < 1) throw std::invalid_argument("sunflower: m must be >= 1");
  if (!(alpha > 1.0)) throw std::invalid_argument("sunflower: alpha must be > 1");

  const int n = r * m - m + 1;
  const double pair_weight = (alpha - 1.0) / std::pow(2.0, r);
  std::vector<Hyperedge> edges;
  for (int j = 0; j < m; ++j) {
    std::vector<int> petal{0};
    for (int i = 0; i < r - 1; ++i) petal.push_back(1 + j * (r - 1) + i);
    edges.push_back({petal, 1.0});
    for (std::size_t a = 0; a < petal.size(); ++a) {
      for (std::size_t b = a + 1; b < petal.size(); ++b) {
        edges.push_back({{petal[a], petal[b]}, pair_weight});
      }
    }
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace hypersketch
