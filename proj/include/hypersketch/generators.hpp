#pragma once

#include <cstdint>

#include "hypersketch/hypergraph.hpp"
#include "hypersketch/satsketch.hpp"

namespace hypersketch {

// m edges of `cardinality` distinct endpoints each, weights uniform in
// [weight_lo, weight_hi] (unit when equal). With require_connected the seed
// is re-derived until the result is connected (bounded retries).
Hypergraph random_uniform_hypergraph(int n, int m, int cardinality, std::uint64_t seed,
                                     bool require_connected, double weight_lo = 1.0,
                                     double weight_hi = 1.0);

// Random CNF with `width` distinct variables per clause, random polarities.
CnfFormula random_cnf(int num_vars, int num_clauses, int width, std::uint64_t seed);

}  // namespace hypersketch
