#include "hypersketch/mincut.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "hypersketch/errors.hpp"

namespace hypersketch {

namespace {

// One maximum-adjacency phase over the current super-vertices. A vertex's key
// is the total weight of edges containing it and at least one visited vertex;
// the key of the vertex visited last equals the weight of the cut isolating
// it. Fills `last` and `second_last`, returns that cut weight.
struct Working {
  std::vector<char> alive;                 // per super id
  std::vector<std::vector<int>> members;   // super id -> original vertices
  std::vector<std::vector<int>> ends;      // edge -> super ids, sorted unique
  std::vector<double> weight;              // edge weight
  std::vector<char> edge_alive;
  std::vector<std::vector<int>> incidence; // super id -> edge indices (may be stale)
  int alive_count = 0;
};

double ma_phase(Working& w, int& last, int& second_last) {
  const int n = static_cast<int>(w.alive.size());
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<double> key(static_cast<std::size_t>(n), 0.0);
  std::vector<char> activated(w.ends.size(), 0);

  last = -1;
  second_last = -1;
  double last_key = 0.0;
  for (int step = 0; step < w.alive_count; ++step) {
    int pick = -1;
    if (step == 0) {
      for (int v = 0; v < n; ++v) {
        if (w.alive[static_cast<std::size_t>(v)]) {
          pick = v;
          break;
        }
      }
    } else {
      double best = -1.0;
      for (int v = 0; v < n; ++v) {
        if (!w.alive[static_cast<std::size_t>(v)] || visited[static_cast<std::size_t>(v)]) continue;
        if (key[static_cast<std::size_t>(v)] > best) {
          best = key[static_cast<std::size_t>(v)];
          pick = v;
        }
      }
    }
    visited[static_cast<std::size_t>(pick)] = 1;
    second_last = last;
    last = pick;
    last_key = key[static_cast<std::size_t>(pick)];
    for (int ei : w.incidence[static_cast<std::size_t>(pick)]) {
      if (!w.edge_alive[static_cast<std::size_t>(ei)] || activated[static_cast<std::size_t>(ei)])
        continue;
      const auto& ends = w.ends[static_cast<std::size_t>(ei)];
      if (!std::binary_search(ends.begin(), ends.end(), pick)) continue;  // stale entry
      activated[static_cast<std::size_t>(ei)] = 1;
      for (int u : ends) {
        if (!visited[static_cast<std::size_t>(u)])
          key[static_cast<std::size_t>(u)] += w.weight[static_cast<std::size_t>(ei)];
      }
    }
  }
  return last_key;
}

void merge_supers(Working& w, int target, int source) {
  if (target > source) std::swap(target, source);
  auto& tm = w.members[static_cast<std::size_t>(target)];
  auto& sm = w.members[static_cast<std::size_t>(source)];
  tm.insert(tm.end(), sm.begin(), sm.end());
  sm.clear();
  w.alive[static_cast<std::size_t>(source)] = 0;
  --w.alive_count;
  for (int ei : w.incidence[static_cast<std::size_t>(source)]) {
    if (!w.edge_alive[static_cast<std::size_t>(ei)]) continue;
    auto& ends = w.ends[static_cast<std::size_t>(ei)];
    if (!std::binary_search(ends.begin(), ends.end(), source)) continue;
    std::replace(ends.begin(), ends.end(), source, target);
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    if (ends.size() < 2) {
      w.edge_alive[static_cast<std::size_t>(ei)] = 0;
    } else {
      w.incidence[static_cast<std::size_t>(target)].push_back(ei);
    }
  }
  w.incidence[static_cast<std::size_t>(source)].clear();
}

}  // namespace

MinCutResult min_cut(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n < 2) throw std::invalid_argument("min_cut needs at least 2 vertices");

  const auto comps = connected_components(h);
  if (comps.count > 1) {
    std::vector<bool> side(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v)
      side[static_cast<std::size_t>(v)] = comps.label[static_cast<std::size_t>(v)] != comps.label[0];
    Cut cut(std::move(side));
    return {cut, cut_weight(h, cut)};
  }

  Working w;
  w.alive.assign(static_cast<std::size_t>(n), 1);
  w.alive_count = n;
  w.members.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) w.members[static_cast<std::size_t>(v)] = {v};
  w.incidence.resize(static_cast<std::size_t>(n));
  for (const auto& e : h.edges()) {
    if (e.cardinality() < 2) continue;  // self-loops join no cut
    const int ei = static_cast<int>(w.ends.size());
    w.ends.push_back(e.endpoints);
    w.weight.push_back(e.weight);
    w.edge_alive.push_back(1);
    for (int v : e.endpoints) w.incidence[static_cast<std::size_t>(v)].push_back(ei);
  }

  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_true_side;
  while (w.alive_count > 1) {
    int last = -1, second_last = -1;
    const double phase_cut = ma_phase(w, last, second_last);
    if (phase_cut < best) {
      best = phase_cut;
      best_true_side = w.members[static_cast<std::size_t>(last)];
    }
    merge_supers(w, second_last, last);
  }

  Cut cut = Cut::from_true_side(n, best_true_side).canonical();
  // Recompute through cut_weight so the value matches the enumeration path
  // bit for bit on the same bipartition.
  return {cut, cut_weight(h, cut)};
}

int StrongConnectivityMap::distinct_values() const {
  std::set<double> values(k.begin(), k.end());
  return static_cast<int>(values.size());
}

StrongConnectivityMap strong_connectivities(const Hypergraph& h) {
  StrongConnectivityMap result;
  result.k.assign(h.edge_count(), 0.0);
  if (h.vertex_count() < 2) return result;

  std::vector<std::vector<int>> stack;
  {
    std::vector<int> all(static_cast<std::size_t>(h.vertex_count()));
    for (int v = 0; v < h.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
    stack.push_back(std::move(all));
  }
  while (!stack.empty()) {
    std::vector<int> vertices = std::move(stack.back());
    stack.pop_back();
    auto induced = induced_subhypergraph(h, vertices);
    const auto mc = min_cut(induced.sub);
    for (int original_edge : induced.edge_of) {
      auto& k = result.k[static_cast<std::size_t>(original_edge)];
      k = std::max(k, mc.weight);
    }
    std::vector<int> side_true, side_false;
    for (std::size_t i = 0; i < induced.vertex_of.size(); ++i) {
      (mc.cut.in_s(static_cast<int>(i)) ? side_true : side_false)
          .push_back(induced.vertex_of[i]);
    }
    if (side_true.size() >= 2) stack.push_back(std::move(side_true));
    if (side_false.size() >= 2) stack.push_back(std::move(side_false));
  }
  return result;
}

bool k_strong_check(const Hypergraph& h, const std::vector<int>& vertices, double k) {
  std::vector<int> verts = vertices;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.size() > 20)
    throw ResourceLimitError("k_strong_check guarded at |U| <= 20, got " +
                             std::to_string(verts.size()));
  auto induced = induced_subhypergraph(h, verts);
  const int n = induced.sub.vertex_count();
  if (n < 2) return true;  // no nontrivial cuts
  std::vector<std::uint32_t> edge_bits(induced.sub.edge_count(), 0);
  for (std::size_t i = 0; i < induced.sub.edge_count(); ++i) {
    for (int v : induced.sub.edge(i).endpoints) edge_bits[i] |= (1u << v);
  }
  const std::uint32_t full = (1u << n) - 1u;
  for (std::uint32_t m = 1; m < (1u << (n - 1)); ++m) {
    const std::uint32_t s = m << 1;
    double w = 0.0;
    for (std::size_t i = 0; i < edge_bits.size(); ++i) {
      if ((edge_bits[i] & s) != 0 && (edge_bits[i] & ~s & full) != 0)
        w += induced.sub.edge(i).weight;
    }
    if (w < k) return false;
  }
  return true;
}

}  // namespace hypersketch
