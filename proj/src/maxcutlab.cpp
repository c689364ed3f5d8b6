#include "hypersketch/maxcutlab.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hypersketch/errors.hpp"

namespace hypersketch {

bool BhhInstance::promise_holds() const {
  if (static_cast<int>(x.size()) != n || t < 2 || n % t != 0) return false;
  if (static_cast<int>(w.size()) != n / t) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t j = 0; j < matching.size(); ++j) {
    if (static_cast<int>(matching[j].size()) != t) return false;
    bool parity = false;
    for (int idx : matching[j]) {
      if (idx < 0 || idx >= n || seen[static_cast<std::size_t>(idx)]) return false;
      seen[static_cast<std::size_t>(idx)] = 1;
      parity = parity != x[static_cast<std::size_t>(idx)];
    }
    if ((parity != w[j]) != (promise_bit == 1)) return false;
  }
  return static_cast<int>(matching.size()) == n / t;
}

BhhInstance random_bhh_instance(int k, int t, int promise_bit, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (t < 2) throw std::invalid_argument("t must be >= 2");
  if (promise_bit != 0 && promise_bit != 1)
    throw std::invalid_argument("promise bit must be 0 or 1");

  Rng rng(seed);
  BhhInstance inst;
  inst.n = 2 * k * t;
  inst.t = t;
  inst.promise_bit = promise_bit;
  inst.x.resize(static_cast<std::size_t>(inst.n));
  for (int i = 0; i < inst.n; ++i) inst.x[static_cast<std::size_t>(i)] = rng.coin();

  std::vector<int> perm(static_cast<std::size_t>(inst.n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = inst.n - 1; i > 0; --i)
    std::swap(perm[static_cast<std::size_t>(i)],
              perm[static_cast<std::size_t>(rng.below_int(i + 1))]);

  const int groups = inst.n / t;
  inst.matching.resize(static_cast<std::size_t>(groups));
  for (int j = 0; j < groups; ++j) {
    auto& tuple = inst.matching[static_cast<std::size_t>(j)];
    tuple.assign(perm.begin() + static_cast<std::ptrdiff_t>(j) * t,
                 perm.begin() + static_cast<std::ptrdiff_t>(j + 1) * t);
    std::sort(tuple.begin(), tuple.end());  // traversal order fixed: ascending
    bool parity = false;
    for (int idx : tuple) parity = parity != inst.x[static_cast<std::size_t>(idx)];
    inst.w.push_back(parity != (promise_bit == 1));
  }
  return inst;
}

std::size_t GadgetGraph::alice_edge_count() const {
  std::size_t count = 0;
  for (auto o : owner)
    if (o == EdgeOwner::Alice) ++count;
  return count;
}

GadgetGraph build_gadget(const BhhInstance& inst) {
  const int n = inst.n;
  const int t = inst.t;
  if (n < 2 || t < 2 || n % t != 0 || static_cast<int>(inst.x.size()) != n ||
      static_cast<int>(inst.w.size()) != n / t ||
      static_cast<int>(inst.matching.size()) != n / t)
    throw std::invalid_argument("malformed BHH instance");
  {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const auto& tuple : inst.matching) {
      if (static_cast<int>(tuple.size()) != t)
        throw std::invalid_argument("malformed BHH instance: tuple size");
      for (int idx : tuple) {
        if (idx < 0 || idx >= n || seen[static_cast<std::size_t>(idx)])
          throw std::invalid_argument("malformed BHH instance: not a perfect hypermatching");
        seen[static_cast<std::size_t>(idx)] = 1;
      }
    }
  }

  // 1-based slots as in the construction: u_i -> i-1, v_i -> 2n+i-1,
  // w_i -> 4n+i-1.
  auto U = [](int i) { return i - 1; };
  auto V = [n](int i) { return 2 * n + i - 1; };
  auto W = [n](int i) { return 4 * n + i - 1; };

  GadgetGraph gadget;
  gadget.n_bhh = n;
  gadget.t = t;
  std::vector<Hyperedge> edges;
  auto add = [&](int a, int b, EdgeOwner who) {
    edges.push_back({{std::min(a, b), std::max(a, b)}, 1.0});
    gadget.owner.push_back(who);
  };

  for (int i = 1; i <= n; ++i) {
    if (!inst.x[static_cast<std::size_t>(i - 1)]) {
      add(U(2 * i - 1), V(2 * i - 1), EdgeOwner::Alice);
      add(U(2 * i), V(2 * i), EdgeOwner::Alice);
    } else {
      add(U(2 * i - 1), V(2 * i), EdgeOwner::Alice);
      add(U(2 * i), V(2 * i - 1), EdgeOwner::Alice);
    }
  }
  for (int j = 1; j <= n / t; ++j) {
    const auto& tuple = inst.matching[static_cast<std::size_t>(j - 1)];
    auto I = [&tuple](int k) { return tuple[static_cast<std::size_t>(k - 1)] + 1; };  // 1-based
    for (int k = 1; k <= t - 1; ++k) {
      add(U(2 * I(k) - 1), V(2 * I(k + 1) - 1), EdgeOwner::Bob);
      add(U(2 * I(k)), V(2 * I(k + 1)), EdgeOwner::Bob);
    }
    add(U(2 * I(t)), W(2 * j), EdgeOwner::Bob);
    add(U(2 * I(t) - 1), W(2 * j - 1), EdgeOwner::Bob);
    if (!inst.w[static_cast<std::size_t>(j - 1)]) {
      add(W(2 * j), V(2 * I(1)), EdgeOwner::Bob);
      add(W(2 * j - 1), V(2 * I(1) - 1), EdgeOwner::Bob);
    } else {
      add(W(2 * j), V(2 * I(1) - 1), EdgeOwner::Bob);
      add(W(2 * j - 1), V(2 * I(1)), EdgeOwner::Bob);
    }
  }
  gadget.graph = Hypergraph(4 * n + 2 * n / t, std::move(edges));
  return gadget;
}

namespace {

struct ComponentView {
  std::vector<int> vertices;                      // original ids
  std::vector<std::pair<std::pair<int, int>, double>> edges;  // local indices
};

std::vector<ComponentView> split_components(const Hypergraph& g) {
  if (g.max_cardinality() > 2)
    throw std::invalid_argument("exact_max_cut expects a 2-uniform hypergraph");
  const auto comps = connected_components(g);
  std::vector<ComponentView> views(static_cast<std::size_t>(comps.count));
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto& view = views[static_cast<std::size_t>(comps.label[static_cast<std::size_t>(v)])];
    local[static_cast<std::size_t>(v)] = static_cast<int>(view.vertices.size());
    view.vertices.push_back(v);
  }
  for (const auto& e : g.edges()) {
    if (e.cardinality() < 2) continue;  // self-loops join no cut
    const int c = comps.label[static_cast<std::size_t>(e.endpoints[0])];
    auto& view = views[static_cast<std::size_t>(c)];
    view.edges.push_back({{local[static_cast<std::size_t>(e.endpoints[0])],
                           local[static_cast<std::size_t>(e.endpoints[1])]},
                          e.weight});
  }
  return views;
}

double component_max_cut(const ComponentView& view) {
  const int c = static_cast<int>(view.vertices.size());
  if (view.edges.empty()) return 0.0;

  // Cycle components (every vertex of degree 2, as many edges as vertices)
  // have a closed form: everything cut, minus the lightest edge when odd.
  std::vector<int> degree(static_cast<std::size_t>(c), 0);
  for (const auto& [ends, w] : view.edges) {
    (void)w;
    ++degree[static_cast<std::size_t>(ends.first)];
    ++degree[static_cast<std::size_t>(ends.second)];
  }
  const bool two_regular =
      std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; });
  if (two_regular && view.edges.size() == static_cast<std::size_t>(c)) {
    double total = 0.0, lightest = std::numeric_limits<double>::infinity();
    for (const auto& [ends, w] : view.edges) {
      (void)ends;
      total += w;
      lightest = std::min(lightest, w);
    }
    return (c % 2 == 0) ? total : total - lightest;
  }

  if (c > 24)
    throw ResourceLimitError("exact_max_cut: non-cycle component with " + std::to_string(c) +
                             " vertices exceeds the brute-force guard of 24");
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << (c - 1)); ++mask) {
    double w = 0.0;
    for (const auto& [ends, weight] : view.edges) {
      const std::uint32_t a = (mask >> ends.first) & 1u;
      const std::uint32_t b = (mask >> ends.second) & 1u;
      if (a != b) w += weight;
    }
    best = std::max(best, w);
  }
  return best;
}

}  // namespace

double exact_max_cut(const Hypergraph& g) {
  double total = 0.0;
  for (const auto& view : split_components(g)) total += component_max_cut(view);
  return total;
}

std::optional<std::vector<int>> cycle_lengths(const Hypergraph& g) {
  if (g.max_cardinality() > 2) return std::nullopt;
  std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& e : g.edges()) {
    if (e.cardinality() < 2) return std::nullopt;  // self-loops break 2-regularity
    ++degree[static_cast<std::size_t>(e.endpoints[0])];
    ++degree[static_cast<std::size_t>(e.endpoints[1])];
  }
  if (!std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; }))
    return std::nullopt;
  const auto comps = connected_components(g);
  std::vector<int> lengths(static_cast<std::size_t>(comps.count), 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    ++lengths[static_cast<std::size_t>(comps.label[static_cast<std::size_t>(v)])];
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

double gadget_expected_value(int n, int t, int promise_bit) {
  if (t < 2 || n < 2 * t || n % t != 0 || (n / t) % 2 != 0)
    throw std::invalid_argument("gadget_expected_value: n must equal 2kt with t >= 2");
  if (promise_bit != 0 && promise_bit != 1)
    throw std::invalid_argument("promise bit must be 0 or 1");
  return promise_bit == 0 ? 4.0 * n : 4.0 * n + 2.0 * n / t;
}

TwoPartyResult two_party_estimate(int vertex_count, const std::vector<Hyperedge>& alice_edges,
                                  const std::vector<Hyperedge>& bob_edges) {
  const Hypergraph alice(vertex_count, alice_edges);
  const Hypergraph bob(vertex_count, bob_edges);
  TwoPartyResult result;
  result.w_alice = exact_max_cut(alice);
  result.w_bob = exact_max_cut(bob);
  result.estimate = 2.0 * (result.w_alice + result.w_bob) / 3.0;
  return result;
}

}  // namespace hypersketch
