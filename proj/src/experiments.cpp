#include "hypersketch/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "hypersketch/contract.hpp"
#include "hypersketch/errors.hpp"
#include "hypersketch/generators.hpp"
#include "hypersketch/maxcutlab.hpp"
#include "hypersketch/mincut.hpp"
#include "hypersketch/rng.hpp"
#include "hypersketch/satsketch.hpp"
#include "hypersketch/sparsify.hpp"

namespace hypersketch {

namespace {

using nlohmann::json;

double num_param(const json& params, const char* key, double fallback) {
  if (params.contains(key)) return params.at(key).get<double>();
  return fallback;
}

long int_param(const json& params, const char* key, long fallback) {
  if (params.contains(key)) return params.at(key).get<long>();
  return fallback;
}

// ---- cut-counting: brute-force near-minimum cut counts vs 2^(ar) n^(2a) ----

ExperimentReport cut_counting(const json& params, std::uint64_t seed) {
  ExperimentReport rep;
  const long per_r = int_param(params, "instances_per_r", 4);
  const long max_n = int_param(params, "max_n", 14);
  if (per_r < 1 || max_n < 6 || max_n > 24)
    throw UsageError("cut-counting needs instances_per_r >= 1 and max_n in [6, 24]");
  const std::vector<double> alphas{1.0, 1.5, 2.0};

  long checks = 0, violations_c1 = 0;
  double max_ratio_c4 = 0.0;
  std::uint64_t stream = 0;
  for (int r = 2; r <= 4; ++r) {
    for (long i = 0; i < per_r; ++i) {
      Rng rng(derive_seed(seed, stream++));
      const int n = 6 + rng.below_int(static_cast<int>(max_n) - 5);  // [6, max_n]
      const int m = n + rng.below_int(2 * n);
      const auto h = random_uniform_hypergraph(n, m, r, derive_seed(seed, stream++), true);
      const double w_min = min_cut(h).weight;
      for (double alpha : alphas) {
        const auto cuts = enumerate_cuts_below(h, alpha * w_min * (1.0 + 1e-12));
        const double count = static_cast<double>(cuts.size());
        const double bound1 = std::pow(2.0, alpha * r) * std::pow(n, 2.0 * alpha);
        ++checks;
        if (count > bound1) ++violations_c1;
        max_ratio_c4 = std::max(max_ratio_c4, count / (4.0 * bound1));
      }
    }
  }
  rep.metrics["checks"] = static_cast<double>(checks);
  rep.metrics["constant1_violations"] = static_cast<double>(violations_c1);
  rep.metrics["max_count_over_4bound"] = max_ratio_c4;
  rep.pass = max_ratio_c4 <= 1.0;
  rep.parameters = {{"instances_per_r", per_r}, {"max_n", max_n}, {"alphas", alphas}};
  return rep;
}

// ---- contraction-probability: per-min-cut output frequency vs the bound ----

double worst_margin(const Hypergraph& h, int r, long trials, std::uint64_t seed) {
  const auto mc = min_cut(h);
  const auto min_cuts = enumerate_cuts_below(h, mc.weight * (1.0 + 1e-12));
  const auto freq = contraction_frequency(h, 1.0, trials, seed);
  const double bound = capture_probability_bound(h.vertex_count(), r, 1.0);
  const double sigma = std::sqrt(bound * (1.0 - bound) / static_cast<double>(trials));
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& wc : min_cuts) {
    const auto it = freq.find(wc.cut);
    const double f =
        it == freq.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(trials);
    margin = std::min(margin, f - (bound - 4.0 * sigma));
  }
  return margin;
}

ExperimentReport contraction_probability(const json& params, std::uint64_t seed) {
  ExperimentReport rep;
  const long trials = int_param(params, "trials", 100000);
  const long instances_r3 = int_param(params, "instances_r3", 10);
  const long instances_r2 = int_param(params, "instances_r2", 5);

  double min_margin_r3 = std::numeric_limits<double>::infinity();
  for (long i = 0; i < instances_r3; ++i) {
    Rng rng(derive_seed(seed, 100 + static_cast<std::uint64_t>(i)));
    const int n = 4 + rng.below_int(5);  // [4, 8]
    const int m = n + rng.below_int(2 * n);
    const auto h =
        random_uniform_hypergraph(n, m, 3, derive_seed(seed, 200 + static_cast<std::uint64_t>(i)), true);
    min_margin_r3 = std::min(
        min_margin_r3, worst_margin(h, 3, trials, derive_seed(seed, 300 + static_cast<std::uint64_t>(i))));
  }

  double min_margin_r2 = std::numeric_limits<double>::infinity();
  for (long i = 0; i < instances_r2; ++i) {
    Rng rng(derive_seed(seed, 400 + static_cast<std::uint64_t>(i)));
    const int n = 4 + rng.below_int(5);
    const int m = n + rng.below_int(2 * n);
    const auto h =
        random_uniform_hypergraph(n, m, 2, derive_seed(seed, 500 + static_cast<std::uint64_t>(i)), true);
    // For graphs the bound specializes to Karger's 2/(n(n-1)).
    min_margin_r2 = std::min(
        min_margin_r2, worst_margin(h, 2, trials, derive_seed(seed, 600 + static_cast<std::uint64_t>(i))));
  }

  rep.metrics["min_margin_r3"] = min_margin_r3;
  rep.metrics["min_margin_r2"] = min_margin_r2;
  rep.metrics["trials"] = static_cast<double>(trials);
  rep.pass = min_margin_r3 >= 0.0 && min_margin_r2 >= 0.0;
  rep.parameters = {
      {"trials", trials}, {"instances_r3", instances_r3}, {"instances_r2", instances_r2}};
  return rep;
}

// ---- sparsifier-quality: all-cuts error, size bound, unbiasedness ----

ExperimentReport sparsifier_quality(const json& params, std::uint64_t seed) {
  ExperimentReport rep;
  const long instances = int_param(params, "instances", 10);
  const int n = static_cast<int>(int_param(params, "n", 12));
  const int m = static_cast<int>(int_param(params, "m", 600));
  const int r = static_cast<int>(int_param(params, "r", 3));
  const long seeds = int_param(params, "seeds", 20);
  const long unbias_seeds = int_param(params, "unbias_seeds", 1000);
  const double d = num_param(params, "d", 1.0);
  if (instances < 1 || seeds < 1 || unbias_seeds < 1 || n < 6 || n > 20 || m < 1)
    throw UsageError("sparsifier-quality needs instances/seeds >= 1 and n in [6, 20]");
  const std::vector<double> epsilons{num_param(params, "epsilon_lo", 0.3),
                                     num_param(params, "epsilon_hi", 0.5)};

  double min_within_fraction = 1.0;
  double max_mean_edges_over_bound = 0.0;
  std::vector<Hypergraph> instances_kept;
  std::vector<StrongConnectivityMap> strengths_kept;
  for (long inst = 0; inst < instances; ++inst) {
    const auto h =
        random_uniform_hypergraph(n, m, r, derive_seed(seed, 10 + static_cast<std::uint64_t>(inst)), true);
    const auto strengths = strong_connectivities(h);
    for (double eps : epsilons) {
      long within = 0;
      double edge_sum = 0.0;
      for (long s = 0; s < seeds; ++s) {
        SparsifyParams p;
        p.epsilon = eps;
        p.d = d;
        p.seed = derive_seed(seed, 1000 + static_cast<std::uint64_t>(inst * 100 + s));
        const auto [sparse, build_report] = sparsify(h, p, strengths);
        (void)build_report;
        const auto check = verify_sparsifier(h, sparse, eps);
        if (check.within_epsilon) ++within;
        edge_sum += static_cast<double>(check.edge_count);
      }
      min_within_fraction = std::min(
          min_within_fraction, static_cast<double>(within) / static_cast<double>(seeds));
      const double bound = 3.0 * (n - 1) * (r + (d + 2.0) * std::log(n)) / (eps * eps);
      max_mean_edges_over_bound =
          std::max(max_mean_edges_over_bound, edge_sum / static_cast<double>(seeds) / bound);
    }
    instances_kept.push_back(h);
    strengths_kept.push_back(strengths);
  }

  // Unbiasedness on the first instance at the larger epsilon: the mean
  // sampled weight of three fixed cuts must sit within 3 standard errors.
  const auto& h0 = instances_kept.front();
  std::vector<Cut> probes;
  probes.push_back(Cut::from_true_side(n, {0}));
  {
    std::vector<int> half;
    for (int v = 0; v < n / 2; ++v) half.push_back(v);
    probes.push_back(Cut::from_true_side(n, half));
    probes.push_back(Cut::from_true_side(n, {1, 3, 5}));
  }
  double unbias_max_ratio = 0.0;
  for (const auto& probe : probes) {
    const double truth = cut_weight(h0, probe);
    double sum = 0.0, sum_sq = 0.0;
    for (long s = 0; s < unbias_seeds; ++s) {
      SparsifyParams p;
      p.epsilon = epsilons.back();
      p.d = d;
      p.seed = derive_seed(seed, 70000 + static_cast<std::uint64_t>(s));
      const auto [sparse, build_report] = sparsify(h0, p, strengths_kept.front());
      (void)build_report;
      const double w = cut_weight(sparse, probe);
      sum += w;
      sum_sq += w * w;
    }
    const double count = static_cast<double>(unbias_seeds);
    const double mean = sum / count;
    const double variance = std::max(0.0, sum_sq / count - mean * mean);
    const double stderr3 = 3.0 * std::sqrt(variance / count);
    const double diff = std::abs(mean - truth);
    if (stderr3 == 0.0) {
      if (diff > 0.0) unbias_max_ratio = std::numeric_limits<double>::infinity();
    } else {
      unbias_max_ratio = std::max(unbias_max_ratio, diff / stderr3);
    }
  }

  rep.metrics["min_within_fraction"] = min_within_fraction;
  rep.metrics["max_mean_edges_over_bound"] = max_mean_edges_over_bound;
  rep.metrics["unbias_max_ratio"] = unbias_max_ratio;
  rep.pass = min_within_fraction >= 0.9 && max_mean_edges_over_bound <= 1.0 &&
             unbias_max_ratio <= 1.0;
  rep.parameters = {{"instances", instances},       {"n", n},
                    {"m", m},                       {"r", r},
                    {"seeds", seeds},               {"unbias_seeds", unbias_seeds},
                    {"d", d},                       {"epsilons", epsilons}};
  return rep;
}

// ---- sat-quality: reduction exactness plus sketch accuracy ----

ExperimentReport sat_quality(const json& params, std::uint64_t seed) {
  ExperimentReport rep;
  const int num_vars = static_cast<int>(int_param(params, "num_vars", 10));
  const int clauses = static_cast<int>(int_param(params, "clauses", 500));
  const int width = static_cast<int>(int_param(params, "width", 3));
  const double epsilon = num_param(params, "epsilon", 0.4);
  const double d = num_param(params, "d", 1.0);
  const long seeds = int_param(params, "seeds", 20);
  if (num_vars < 1 || num_vars > 16 || seeds < 1)
    throw UsageError("sat-quality sweeps all assignments; num_vars must lie in [1, 16]");

  const auto phi = random_cnf(num_vars, clauses, width, derive_seed(seed, 1));
  const auto reduced = cnf_to_hypergraph(phi);

  const std::uint64_t assignments = 1ull << num_vars;
  bool exactness_ok = true;
  for (std::uint64_t a = 0; a < assignments; ++a) {
    std::vector<bool> assignment(static_cast<std::size_t>(num_vars));
    for (int v = 0; v < num_vars; ++v) assignment[static_cast<std::size_t>(v)] = (a >> v) & 1ull;
    const double via_cut = cut_weight(reduced.hypergraph, assignment_to_cut(phi, assignment));
    if (via_cut != static_cast<double>(exact_value(phi, assignment))) {
      exactness_ok = false;
      break;
    }
  }

  long seeds_within = 0;
  double max_sketch_edges = 0.0;
  for (long s = 0; s < seeds; ++s) {
    const auto sketch =
        sketch_formula(phi, epsilon, d, derive_seed(seed, 100 + static_cast<std::uint64_t>(s)));
    max_sketch_edges =
        std::max(max_sketch_edges, static_cast<double>(sketch.hypergraph.edge_count()));
    bool all_within = true;
    for (std::uint64_t a = 0; a < assignments && all_within; ++a) {
      std::vector<bool> assignment(static_cast<std::size_t>(num_vars));
      for (int v = 0; v < num_vars; ++v)
        assignment[static_cast<std::size_t>(v)] = (a >> v) & 1ull;
      const double est = estimate_value(sketch, assignment);
      const double exact = static_cast<double>(exact_value(phi, assignment));
      if (est < (1.0 - epsilon) * exact - 1e-9 || est > (1.0 + epsilon) * exact + 1e-9)
        all_within = false;
    }
    if (all_within) ++seeds_within;
  }
  const double within_fraction = static_cast<double>(seeds_within) / static_cast<double>(seeds);
  const int sketch_n = 2 * num_vars + 1;
  const int sketch_r = phi.max_clause_width() + 1;
  const double edge_bound =
      3.0 * (sketch_n - 1) * (sketch_r + (d + 2.0) * std::log(sketch_n)) / (epsilon * epsilon);

  rep.metrics["exactness_ok"] = exactness_ok ? 1.0 : 0.0;
  rep.metrics["within_fraction"] = within_fraction;
  rep.metrics["max_sketch_edges"] = max_sketch_edges;
  rep.metrics["edge_bound"] = edge_bound;
  rep.pass = exactness_ok && within_fraction >= 0.9 && max_sketch_edges <= edge_bound;
  rep.parameters = {{"num_vars", num_vars}, {"clauses", clauses}, {"width", width},
                    {"epsilon", epsilon},   {"d", d},             {"seeds", seeds}};
  return rep;
}

// ---- gadget-values: exact max cut vs closed form, cycle structure, ratio ----

bool gadget_case_ok(const BhhInstance& inst, double* maxcut_out, double* expected_out) {
  const auto gadget = build_gadget(inst);
  const double maxcut = exact_max_cut(gadget.graph);
  const double expected = gadget_expected_value(inst.n, inst.t, inst.promise_bit);
  if (maxcut_out) *maxcut_out = maxcut;
  if (expected_out) *expected_out = expected;
  if (maxcut != expected) return false;
  if (!inst.promise_holds()) return false;
  if (gadget.alice_edge_count() != static_cast<std::size_t>(2 * inst.n)) return false;
  const auto lengths = cycle_lengths(gadget.graph);
  if (!lengths) return false;
  std::vector<int> want;
  if (inst.promise_bit == 0)
    want.assign(static_cast<std::size_t>(2 * inst.n / inst.t), 2 * inst.t + 1);
  else
    want.assign(static_cast<std::size_t>(inst.n / inst.t), 4 * inst.t + 2);
  return *lengths == want;
}

bool ratio_threshold_ok() {
  // c0/c1 = 2t/(2t+1) exactly, and for eps = p/q and t = floor((q-p)/(2p))
  // the ratio clears 1 - eps. All in integers.
  for (int t = 2; t <= 4; ++t) {
    const long n = 2L * t;  // k = 1
    const long c0 = 4 * n;
    const long c1 = 4 * n + 2 * n / t;
    if (c0 * (2L * t + 1) != c1 * 2L * t) return false;
  }
  const std::pair<long, long> eps_fracs[] = {{1, 20}, {1, 10}, {3, 20}};
  for (const auto& [p, q] : eps_fracs) {
    const long t = (q - p) / (2 * p);
    if (2 * t * q >= (q - p) * (2 * t + 1)) return false;  // need ratio < 1 - eps
  }
  return true;
}

ExperimentReport gadget_values(const json& params, std::uint64_t seed) {
  ExperimentReport rep;
  if (params.contains("k") && params.contains("t") && params.contains("b")) {
    const int k = static_cast<int>(int_param(params, "k", 1));
    const int t = static_cast<int>(int_param(params, "t", 2));
    const int b = static_cast<int>(int_param(params, "b", 0));
    const auto inst = random_bhh_instance(k, t, b, derive_seed(seed, 0));
    double maxcut = 0.0, expected = 0.0;
    const bool ok = gadget_case_ok(inst, &maxcut, &expected);
    rep.metrics["maxcut"] = maxcut;
    rep.metrics["expected"] = expected;
    rep.pass = ok;
    rep.parameters = {{"k", k}, {"t", t}, {"b", b}};
    return rep;
  }

  const long kmax = int_param(params, "kmax", 4);
  long cases = 0, mismatches = 0;
  std::uint64_t stream = 0;
  for (long k = 1; k <= kmax; ++k) {
    for (int t : {2, 3, 4}) {
      for (int b : {0, 1}) {
        const auto inst =
            random_bhh_instance(static_cast<int>(k), t, b, derive_seed(seed, stream++));
        ++cases;
        if (!gadget_case_ok(inst, nullptr, nullptr)) ++mismatches;
      }
    }
  }
  const bool ratio_ok = ratio_threshold_ok();
  rep.metrics["cases"] = static_cast<double>(cases);
  rep.metrics["mismatches"] = static_cast<double>(mismatches);
  rep.metrics["ratio_ok"] = ratio_ok ? 1.0 : 0.0;
  rep.pass = mismatches == 0 && ratio_ok;
  rep.parameters = {{"kmax", kmax}, {"ts", {2, 3, 4}}};
  return rep;
}

// ---- two-party-bound: 2/3 (wA+wB) <= w <= wA+wB on random splits ----

ExperimentReport two_party_bound(const json& params, std::uint64_t seed) {
  ExperimentReport rep;
  const long pairs = int_param(params, "graphs", int_param(params, "pairs", 200));
  const int max_n = static_cast<int>(int_param(params, "n", 10));
  if (pairs < 1 || max_n < 4 || max_n > 24)
    throw UsageError("two-party-bound needs pairs >= 1 and n in [4, 24]");

  long violations = 0;
  for (long i = 0; i < pairs; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const int n = 4 + rng.below_int(std::max(1, max_n - 3));  // [4, max_n]
    const int m = 1 + rng.below_int(2 * n);
    std::vector<Hyperedge> alice, bob, all;
    for (int e = 0; e < m; ++e) {
      const int a = rng.below_int(n);
      int b = rng.below_int(n);
      while (b == a) b = rng.below_int(n);
      Hyperedge edge{{std::min(a, b), std::max(a, b)}, 1.0};
      all.push_back(edge);
      (rng.coin() ? alice : bob).push_back(edge);
    }
    const auto result = two_party_estimate(n, alice, bob);
    const double w = exact_max_cut(Hypergraph(n, all));
    // Exact integral chain: 2(wA+wB) <= 3w and w <= wA+wB.
    if (2.0 * (result.w_alice + result.w_bob) > 3.0 * w || w > result.w_alice + result.w_bob)
      ++violations;
  }

  // With E_B empty the estimate equals exactly 2/3 of the true value.
  Rng rng(derive_seed(seed, 90001));
  std::vector<Hyperedge> alice;
  const int n = 6;
  for (int e = 0; e < 8; ++e) {
    const int a = rng.below_int(n);
    int b = rng.below_int(n);
    while (b == a) b = rng.below_int(n);
    alice.push_back({{std::min(a, b), std::max(a, b)}, 1.0});
  }
  const auto tight = two_party_estimate(n, alice, {});
  const double w_full = exact_max_cut(Hypergraph(n, alice));
  const bool tight_ok = (3.0 * tight.estimate == 2.0 * w_full) && tight.w_bob == 0.0;

  rep.metrics["pairs"] = static_cast<double>(pairs);
  rep.metrics["violations"] = static_cast<double>(violations);
  rep.metrics["tight_ok"] = tight_ok ? 1.0 : 0.0;
  rep.pass = violations == 0 && tight_ok;
  rep.parameters = {{"pairs", pairs}, {"n", max_n}};
  return rep;
}

// ---- sunflower-count: near-minimum cut counts on the lower-bound family ----

ExperimentReport sunflower_count(const json& params, std::uint64_t seed) {
  (void)seed;  // deterministic construction; no randomness used
  ExperimentReport rep;
  const int r = static_cast<int>(int_param(params, "r", 3));
  const double alpha = num_param(params, "alpha", 2.0);

  bool pass = true;
  for (int m : {2, 3}) {
    const auto h = sunflower(r, m, alpha);
    const double w_min = min_cut(h).weight;
    const auto cuts = enumerate_cuts_below(h, alpha * w_min * (1.0 + 1e-12));
    const double required = m * (std::pow(2.0, r - 1) - 1.0);
    rep.metrics["count_m" + std::to_string(m)] = static_cast<double>(cuts.size());
    rep.metrics["required_m" + std::to_string(m)] = required;
    rep.metrics["min_cut_m" + std::to_string(m)] = w_min;
    if (static_cast<double>(cuts.size()) < required) pass = false;
  }
  rep.pass = pass;
  rep.parameters = {{"r", r}, {"alpha", alpha}};
  return rep;
}

}  // namespace

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json j;
  j["experiment"] = experiment;
  j["parameters"] = parameters;
  j["seed"] = seed;
  j["metrics"] = metrics;
  j["pass"] = pass;
  return j;
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{
      "cut-counting",    "contraction-probability", "sparsifier-quality", "sat-quality",
      "gadget-values",   "two-party-bound",         "sunflower-count"};
  return names;
}

ExperimentReport run_experiment(const std::string& name, const nlohmann::json& params,
                                std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport rep;
  if (name == "cut-counting") {
    rep = cut_counting(params, seed);
  } else if (name == "contraction-probability") {
    rep = contraction_probability(params, seed);
  } else if (name == "sparsifier-quality") {
    rep = sparsifier_quality(params, seed);
  } else if (name == "sat-quality") {
    rep = sat_quality(params, seed);
  } else if (name == "gadget-values") {
    rep = gadget_values(params, seed);
  } else if (name == "two-party-bound") {
    rep = two_party_bound(params, seed);
  } else if (name == "sunflower-count") {
    rep = sunflower_count(params, seed);
  } else {
    throw UsageError("unknown experiment '" + name + "'");
  }
  rep.experiment = name;
  rep.seed = seed;
  rep.wall_time_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return rep;
}

}  // namespace hypersketch
