#include "hypersketch/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypersketch/rng.hpp"

namespace hypersketch {

namespace {

std::vector<int> distinct_sample(Rng& rng, int n, int count) {
  std::vector<int> picks;
  picks.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(picks.size()) < count) {
    const int v = rng.below_int(n);
    if (std::find(picks.begin(), picks.end(), v) == picks.end()) picks.push_back(v);
  }
  return picks;
}

}  // namespace

Hypergraph random_uniform_hypergraph(int n, int m, int cardinality, std::uint64_t seed,
                                     bool require_connected, double weight_lo, double weight_hi) {
  if (n < 1 || m < 0) throw std::invalid_argument("bad hypergraph size");
  if (cardinality < 2 || cardinality > n)
    throw std::invalid_argument("cardinality must lie in [2, n]");
  if (!(weight_lo > 0.0) || weight_hi < weight_lo)
    throw std::invalid_argument("bad weight range");

  for (int attempt = 0; attempt < 1000; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::vector<Hyperedge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      Hyperedge e;
      e.endpoints = distinct_sample(rng, n, cardinality);
      std::sort(e.endpoints.begin(), e.endpoints.end());
      e.weight = weight_lo == weight_hi ? weight_lo : rng.uniform(weight_lo, weight_hi);
      edges.push_back(std::move(e));
    }
    Hypergraph h(n, std::move(edges));
    if (!require_connected || connected_components(h).count == 1) return h;
  }
  throw std::runtime_error("could not generate a connected hypergraph; increase m");
}

CnfFormula random_cnf(int num_vars, int num_clauses, int width, std::uint64_t seed) {
  if (num_vars < 1 || num_clauses < 0) throw std::invalid_argument("bad formula size");
  if (width < 1 || width > num_vars)
    throw std::invalid_argument("clause width must lie in [1, num_vars]");
  Rng rng(seed);
  std::vector<std::vector<int>> clauses;
  clauses.reserve(static_cast<std::size_t>(num_clauses));
  for (int i = 0; i < num_clauses; ++i) {
    std::vector<int> clause;
    for (int v : distinct_sample(rng, num_vars, width))
      clause.push_back(rng.coin() ? (v + 1) : -(v + 1));
    clauses.push_back(std::move(clause));
  }
  return make_cnf(num_vars, std::move(clauses));
}

}  // namespace hypersketch
