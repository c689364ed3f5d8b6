#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypersketch/contract.hpp"
#include "hypersketch/errors.hpp"
#include "hypersketch/experiments.hpp"
#include "hypersketch/maxcutlab.hpp"
#include "hypersketch/mincut.hpp"
#include "hypersketch/rng.hpp"
#include "hypersketch/satsketch.hpp"
#include "hypersketch/sparsify.hpp"

namespace {

using hypersketch::Cut;
using hypersketch::Hyperedge;
using hypersketch::Hypergraph;
using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

json side_to_json(const Cut& cut) {
  json arr = json::array();
  for (std::size_t v = 0; v < cut.size(); ++v) arr.push_back(cut.in_s(static_cast<int>(v)) ? 1 : 0);
  return arr;
}

// Exit codes: 0 pass, 1 fail/error, 2 usage, 3 resource guard.
struct CommandArgs {
  std::string hypergraph_path;
  std::string out_path;
  std::string cnf_path;
  std::string sketch_path;
  std::string graph_path;
  std::string assignment;
  std::string experiment_name;
  std::vector<std::string> overrides;
  std::uint64_t seed = 0;
  std::uint64_t split_seed = 0;
  double alpha = 1.0;
  double epsilon = 0.5;
  double d = 1.0;
  double log_coeff = -1.0;
  long trials = 1000;
  int r = 3;
  int m = 2;
  int n = 0;
  int k = 1;
  int t = 2;
  int b = 0;
  bool json_output = false;
  bool verify = false;
  bool randomized = false;
};

int run_mincut(const CommandArgs& args) {
  const auto h = hypersketch::parse_hypergraph(slurp(args.hypergraph_path));
  const auto result = args.randomized ? hypersketch::min_cut_randomized(h, args.seed)
                                      : hypersketch::min_cut(h);
  json out;
  out["weight"] = result.weight;
  out["side"] = side_to_json(result.cut);
  std::cout << out.dump() << "\n";
  return 0;
}

int run_strength(const CommandArgs& args) {
  const auto h = hypersketch::parse_hypergraph(slurp(args.hypergraph_path));
  const auto strengths = hypersketch::strong_connectivities(h);
  json out;
  out["k_e"] = strengths.k;
  out["distinct_values"] = strengths.distinct_values();
  std::cout << out.dump() << "\n";
  return 0;
}

int run_contract(const CommandArgs& args) {
  const auto h = hypersketch::parse_hypergraph(slurp(args.hypergraph_path));
  const auto freq = hypersketch::contraction_frequency(h, args.alpha, args.trials, args.seed);
  double min_weight = std::numeric_limits<double>::infinity();
  json table = json::object();
  for (const auto& [cut, count] : freq) {
    min_weight = std::min(min_weight, hypersketch::cut_weight(h, cut));
    table[cut.to_bitstring()] = count;
  }
  if (args.json_output) {
    json out;
    out["distinct_cuts"] = freq.size();
    out["min_weight"] = min_weight;
    out["frequency_table"] = table;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "trials " << args.trials << ", distinct cuts " << freq.size()
              << ", lightest output " << min_weight << "\n";
  }
  return 0;
}

int run_sunflower(const CommandArgs& args) {
  const auto h = hypersketch::sunflower(args.r, args.m, args.alpha);
  const auto text = hypersketch::serialize_hypergraph(h);
  if (args.out_path.empty())
    std::cout << text;
  else
    spill(args.out_path, text);
  return 0;
}

int run_sparsify(const CommandArgs& args) {
  const auto h = hypersketch::parse_hypergraph(slurp(args.hypergraph_path));
  hypersketch::SparsifyParams params;
  params.epsilon = args.epsilon;
  params.d = args.d;
  params.seed = args.seed;
  params.log_coeff = args.log_coeff;
  const auto [sparse, report] = hypersketch::sparsify(h, params);
  if (!args.out_path.empty()) spill(args.out_path, hypersketch::serialize_hypergraph(sparse));
  json out;
  out["edge_count"] = report.edge_count;
  out["expected_edge_count"] = report.expected_edge_count.value();
  if (args.verify) {
    const auto check = hypersketch::verify_sparsifier(h, sparse, args.epsilon);
    out["max_relative_cut_error"] = check.max_relative_cut_error.value();
    out["within_epsilon"] = check.within_epsilon;
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_stream_sparsify(const CommandArgs& args) {
  hypersketch::SparsifyParams params;
  params.epsilon = args.epsilon;
  params.d = args.d;
  params.seed = args.seed;
  hypersketch::StreamingSparsifier builder(args.n, params);
  std::string line;
  int line_no = 0;
  while (std::getline(std::cin, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    double w = 0.0;
    int k = 0;
    if (!(ss >> w))
      throw hypersketch::ParseError(line_no, "edge line needs 'w k v1 ... vk'");
    if (!(ss >> k) || k < 1)
      throw hypersketch::ParseError(line_no, "edge line needs 'w k v1 ... vk'");
    std::vector<int> endpoints(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      if (!(ss >> endpoints[static_cast<std::size_t>(i)]))
        throw hypersketch::ParseError(line_no, "expected " + std::to_string(k) + " endpoints");
    }
    builder.push(std::move(endpoints), w);
  }
  const auto text = hypersketch::serialize_hypergraph(builder.result());
  if (args.out_path.empty())
    std::cout << text;
  else
    spill(args.out_path, text);
  std::cerr << "stream-sparsify: " << builder.working_size() << " edges kept, "
            << builder.compressions() << " compressions\n";
  return 0;
}

int run_sat_sketch(const CommandArgs& args) {
  const auto phi = hypersketch::parse_dimacs(slurp(args.cnf_path));
  const auto sketch = hypersketch::sketch_formula(phi, args.epsilon, args.d, args.seed);
  if (!args.out_path.empty()) spill(args.out_path, hypersketch::serialize_sketch(sketch));
  json out;
  out["num_vars"] = sketch.num_vars;
  out["clauses"] = phi.clause_count();
  out["edge_count"] = sketch.report.edge_count;
  out["expected_edge_count"] = sketch.report.expected_edge_count.value();
  std::cout << out.dump() << "\n";
  return 0;
}

int run_sat_eval(const CommandArgs& args) {
  const auto sketch = hypersketch::parse_sketch(slurp(args.sketch_path));
  std::vector<bool> assignment;
  assignment.reserve(args.assignment.size());
  for (char c : args.assignment) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("assignment must be a bitstring of 0s and 1s");
    assignment.push_back(c == '1');
  }
  json out;
  out["estimate"] = hypersketch::estimate_value(sketch, assignment);
  std::cout << out.dump() << "\n";
  return 0;
}

int run_gadget(const CommandArgs& args) {
  const auto inst = hypersketch::random_bhh_instance(args.k, args.t, args.b, args.seed);
  const auto gadget = hypersketch::build_gadget(inst);
  const double maxcut = hypersketch::exact_max_cut(gadget.graph);
  const double expected = hypersketch::gadget_expected_value(inst.n, inst.t, inst.promise_bit);
  const auto lengths = hypersketch::cycle_lengths(gadget.graph);
  if (args.json_output) {
    json edges = json::array();
    for (std::size_t i = 0; i < gadget.graph.edge_count(); ++i) {
      const auto& e = gadget.graph.edge(i);
      edges.push_back(json::array(
          {e.endpoints[0], e.endpoints[1],
           gadget.owner[i] == hypersketch::EdgeOwner::Alice ? "A" : "B"}));
    }
    json out;
    out["n"] = inst.n;
    out["t"] = inst.t;
    out["b"] = inst.promise_bit;
    out["edges"] = edges;
    out["maxcut"] = maxcut;
    out["expected"] = expected;
    out["cycle_lengths"] = lengths ? json(*lengths) : json();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "n=" << inst.n << " t=" << inst.t << " b=" << inst.promise_bit
              << " maxcut=" << maxcut << " expected=" << expected << "\n";
  }
  return maxcut == expected ? 0 : 1;
}

int run_two_party(const CommandArgs& args) {
  const auto h = hypersketch::parse_hypergraph(slurp(args.graph_path));
  std::vector<Hyperedge> alice, bob;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    (hypersketch::unit_at(args.split_seed, i) < 0.5 ? alice : bob).push_back(h.edge(i));
  }
  const auto result = hypersketch::two_party_estimate(h.vertex_count(), alice, bob);
  const double truth = hypersketch::exact_max_cut(h);
  json out;
  out["wA"] = result.w_alice;
  out["wB"] = result.w_bob;
  out["estimate"] = result.estimate;
  out["true_maxcut"] = truth;
  std::cout << out.dump() << "\n";
  const bool chain = 2.0 * (result.w_alice + result.w_bob) <= 3.0 * truth &&
                     truth <= result.w_alice + result.w_bob;
  return chain ? 0 : 1;
}

int run_experiment_cmd(const CommandArgs& args) {
  json params = json::object();
  for (const auto& kv : args.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw hypersketch::UsageError("--set expects key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    try {
      params[key] = std::stod(value);
    } catch (const std::exception&) {
      throw hypersketch::UsageError("--set value for '" + key + "' must be numeric");
    }
  }
  const auto report = hypersketch::run_experiment(args.experiment_name, params, args.seed);
  std::cout << report.to_json().dump() << "\n";
  std::cerr << "experiment " << report.experiment << ": " << (report.pass ? "pass" : "FAIL")
            << " in " << report.wall_time_ms << " ms\n";
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypersketch: weighted hypergraph cuts, sparsifiers and sketching experiments"};
  app.require_subcommand(1);
  CommandArgs args;

  auto* mincut = app.add_subcommand("mincut", "global minimum cut");
  mincut->add_option("--hypergraph", args.hypergraph_path)->required();
  mincut->add_flag("--randomized", args.randomized, "contraction-based cross-check");
  mincut->add_option("--seed", args.seed);

  auto* strength = app.add_subcommand("strength", "per-edge strong connectivities");
  strength->add_option("--hypergraph", args.hypergraph_path)->required();

  auto* contract = app.add_subcommand("contract", "randomized contraction trials");
  contract->add_option("--hypergraph", args.hypergraph_path)->required();
  contract->add_option("--alpha", args.alpha);
  contract->add_option("--trials", args.trials);
  contract->add_option("--seed", args.seed);
  contract->add_flag("--json", args.json_output);

  auto* sunflower = app.add_subcommand("sunflower", "near-minimum-cut lower-bound family");
  sunflower->add_option("--r", args.r)->required();
  sunflower->add_option("--m", args.m)->required();
  sunflower->add_option("--alpha", args.alpha)->required();
  sunflower->add_option("--out", args.out_path);

  auto* sparsify = app.add_subcommand("sparsify", "importance-sampling cut sparsifier");
  sparsify->add_option("--hypergraph", args.hypergraph_path)->required();
  sparsify->add_option("--epsilon", args.epsilon)->required();
  sparsify->add_option("--d", args.d);
  sparsify->add_option("--seed", args.seed);
  sparsify->add_option("--out", args.out_path);
  sparsify->add_option("--log-coeff", args.log_coeff, "override the (d+2) log coefficient");
  sparsify->add_flag("--verify", args.verify, "exhaustive all-cuts check (n <= 20)");

  auto* stream = app.add_subcommand("stream-sparsify", "insert-only streaming sparsifier (stdin)");
  stream->add_option("--n", args.n)->required();
  stream->add_option("--epsilon", args.epsilon)->required();
  stream->add_option("--d", args.d);
  stream->add_option("--seed", args.seed);
  stream->add_option("--out", args.out_path);

  auto* sat_sketch = app.add_subcommand("sat-sketch", "sketch a DIMACS CNF");
  sat_sketch->add_option("--cnf", args.cnf_path)->required();
  sat_sketch->add_option("--epsilon", args.epsilon)->required();
  sat_sketch->add_option("--d", args.d);
  sat_sketch->add_option("--seed", args.seed);
  sat_sketch->add_option("--out", args.out_path);

  auto* sat_eval = app.add_subcommand("sat-eval", "evaluate an assignment against a sketch");
  sat_eval->add_option("--sketch", args.sketch_path)->required();
  sat_eval->add_option("--assignment", args.assignment)->required();

  auto* gadget = app.add_subcommand("gadget", "two-party Max-Cut reduction graph");
  gadget->add_option("--k", args.k)->required();
  gadget->add_option("--t", args.t)->required();
  gadget->add_option("--b", args.b)->required();
  gadget->add_option("--seed", args.seed);
  gadget->add_flag("--json", args.json_output);

  auto* two_party = app.add_subcommand("two-party", "2/3-approximation protocol on a split graph");
  two_party->add_option("--graph", args.graph_path)->required();
  two_party->add_option("--split-seed", args.split_seed);

  auto* experiment = app.add_subcommand("experiment", "named acceptance experiment");
  experiment->add_option("--name", args.experiment_name)->required();
  experiment->add_option("--seed", args.seed);
  experiment->add_option("--set", args.overrides, "parameter override key=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(mincut)) return run_mincut(args);
    if (app.got_subcommand(strength)) return run_strength(args);
    if (app.got_subcommand(contract)) return run_contract(args);
    if (app.got_subcommand(sunflower)) return run_sunflower(args);
    if (app.got_subcommand(sparsify)) return run_sparsify(args);
    if (app.got_subcommand(stream)) return run_stream_sparsify(args);
    if (app.got_subcommand(sat_sketch)) return run_sat_sketch(args);
    if (app.got_subcommand(sat_eval)) return run_sat_eval(args);
    if (app.got_subcommand(gadget)) return run_gadget(args);
    if (app.got_subcommand(two_party)) return run_two_party(args);
    if (app.got_subcommand(experiment)) return run_experiment_cmd(args);
  } catch (const hypersketch::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const hypersketch::ResourceLimitError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
