#include "hypersketch/satsketch.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "hypersketch/errors.hpp"

namespace hypersketch {

namespace {

// Dedups literals; rejects empty and tautological clauses. `line` < 0 means
// programmatic construction (invalid_argument instead of ParseError).
std::vector<int> normalize_clause(std::vector<int> lits, int num_vars, int line) {
  auto fail = [&](const std::string& msg) -> std::vector<int> {
    if (line >= 0) throw ParseError(line, msg);
    throw std::invalid_argument(msg);
  };
  if (lits.empty()) return fail("empty clause");
  std::sort(lits.begin(), lits.end(), [](int a, int b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return a < b;
  });
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 0; i < lits.size(); ++i) {
    const int lit = lits[i];
    if (lit == 0 || std::abs(lit) > num_vars)
      return fail("literal " + std::to_string(lit) + " out of range for " +
                  std::to_string(num_vars) + " variables");
    if (i + 1 < lits.size() && lits[i + 1] == -lit)
      return fail("tautological clause (variable " + std::to_string(std::abs(lit)) +
                  " appears with both polarities)");
  }
  return lits;
}

}  // namespace

int CnfFormula::max_clause_width() const {
  std::size_t width = 0;
  for (const auto& c : clauses) width = std::max(width, c.size());
  return static_cast<int>(width);
}

CnfFormula make_cnf(int num_vars, std::vector<std::vector<int>> clauses) {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
  CnfFormula phi;
  phi.num_vars = num_vars;
  phi.clauses.reserve(clauses.size());
  for (auto& c : clauses) phi.clauses.push_back(normalize_clause(std::move(c), num_vars, -1));
  return phi;
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula phi;
  bool header_seen = false;
  std::vector<int> pending;
  int pending_line = 0;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }

    if (!tokens.empty() && tokens[0][0] == 'c') tokens.clear();  // comment line

    if (!tokens.empty() && tokens[0] == "p") {
      if (header_seen) throw ParseError(line_no, "duplicate 'p cnf' header");
      if (tokens.size() != 4 || tokens[1] != "cnf")
        throw ParseError(line_no, "header must be 'p cnf <vars> <clauses>'");
      auto parse_int = [&](std::string_view tok) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
          throw ParseError(line_no, "bad header count '" + std::string(tok) + "'");
        return value;
      };
      phi.num_vars = parse_int(tokens[2]);
      parse_int(tokens[3]);  // declared clause count; actual clauses are read to EOF
      header_seen = true;
    } else {
      for (const auto& tok : tokens) {
        if (!header_seen) throw ParseError(line_no, "clause before 'p cnf' header");
        int lit = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
          throw ParseError(line_no, "bad literal '" + std::string(tok) + "'");
        if (lit == 0) {
          const int clause_line = pending.empty() ? line_no : pending_line;
          phi.clauses.push_back(normalize_clause(std::move(pending), phi.num_vars, clause_line));
          pending.clear();
        } else {
          if (pending.empty()) pending_line = line_no;
          pending.push_back(lit);
        }
      }
    }

    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }

  if (!header_seen) throw ParseError(line_no, "missing 'p cnf' header");
  if (!pending.empty()) throw ParseError(pending_line, "unterminated clause (no closing 0)");
  return phi;
}

namespace {

// Literal +i sits at 2(i-1), -i at 2(i-1)+1, F at 2n.
int literal_slot(int lit) {
  const int var = std::abs(lit);
  return 2 * (var - 1) + (lit < 0 ? 1 : 0);
}

}  // namespace

CnfHypergraph cnf_to_hypergraph(const CnfFormula& phi) {
  const int n = phi.num_vars;
  CnfHypergraph out;
  out.f_vertex = 2 * n;
  for (int v = 1; v <= n; ++v) {
    out.literal_vertex[v] = literal_slot(v);
    out.literal_vertex[-v] = literal_slot(-v);
  }
  std::vector<Hyperedge> edges;
  edges.reserve(phi.clauses.size());
  for (const auto& clause : phi.clauses) {
    Hyperedge e;
    e.weight = 1.0;
    for (int lit : clause) e.endpoints.push_back(literal_slot(lit));
    e.endpoints.push_back(out.f_vertex);
    edges.push_back(std::move(e));
  }
  out.hypergraph = Hypergraph(2 * n + 1, std::move(edges));
  return out;
}

Cut assignment_to_cut(const CnfFormula& phi, const std::vector<bool>& assignment) {
  if (assignment.size() != static_cast<std::size_t>(phi.num_vars))
    throw std::invalid_argument("assignment length does not match variable count");
  std::vector<bool> side(static_cast<std::size_t>(2 * phi.num_vars + 1), false);
  for (int v = 1; v <= phi.num_vars; ++v) {
    const bool value = assignment[static_cast<std::size_t>(v - 1)];
    side[static_cast<std::size_t>(literal_slot(v))] = value;
    side[static_cast<std::size_t>(literal_slot(-v))] = !value;
  }
  // F stays on the false side.
  return Cut(std::move(side));
}

SatSketch sketch_formula(const CnfFormula& phi, double epsilon, double d, std::uint64_t seed) {
  auto reduced = cnf_to_hypergraph(phi);
  SparsifyParams params;
  params.epsilon = epsilon;
  params.d = d;
  params.seed = seed;
  auto [sparse, report] = sparsify(reduced.hypergraph, params);
  SatSketch sketch;
  sketch.hypergraph = std::move(sparse);
  sketch.literal_vertex = std::move(reduced.literal_vertex);
  sketch.f_vertex = reduced.f_vertex;
  sketch.num_vars = phi.num_vars;
  sketch.epsilon = epsilon;
  sketch.report = report;
  return sketch;
}

double estimate_value(const SatSketch& sketch, const std::vector<bool>& assignment) {
  if (assignment.size() != static_cast<std::size_t>(sketch.num_vars))
    throw std::invalid_argument("assignment length does not match variable count");
  std::vector<bool> side(static_cast<std::size_t>(sketch.hypergraph.vertex_count()), false);
  for (int v = 1; v <= sketch.num_vars; ++v) {
    const bool value = assignment[static_cast<std::size_t>(v - 1)];
    side[static_cast<std::size_t>(sketch.literal_vertex.at(v))] = value;
    side[static_cast<std::size_t>(sketch.literal_vertex.at(-v))] = !value;
  }
  return cut_weight(sketch.hypergraph, Cut(std::move(side)));
}

int exact_value(const CnfFormula& phi, const std::vector<bool>& assignment) {
  if (assignment.size() != static_cast<std::size_t>(phi.num_vars))
    throw std::invalid_argument("assignment length does not match variable count");
  int satisfied = 0;
  for (const auto& clause : phi.clauses) {
    for (int lit : clause) {
      const bool value = assignment[static_cast<std::size_t>(std::abs(lit) - 1)];
      if ((lit > 0) == value) {
        ++satisfied;
        break;
      }
    }
  }
  return satisfied;
}

std::string serialize_sketch(const SatSketch& sketch) {
  nlohmann::json header;
  header["format"] = "hypersketch-sat-sketch";
  header["num_vars"] = sketch.num_vars;
  header["f_vertex"] = sketch.f_vertex;
  header["epsilon"] = sketch.epsilon;
  nlohmann::json lits = nlohmann::json::object();
  for (const auto& [lit, vertex] : sketch.literal_vertex) lits[std::to_string(lit)] = vertex;
  header["literal_vertex"] = lits;
  return header.dump() + "\n" + serialize_hypergraph(sketch.hypergraph);
}

SatSketch parse_sketch(std::string_view text) {
  const std::size_t nl = text.find('\n');
  if (nl == std::string_view::npos) throw ParseError(1, "missing sketch header line");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(text.substr(0, nl));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("bad sketch header: ") + e.what());
  }
  SatSketch sketch;
  try {
    sketch.num_vars = header.at("num_vars").get<int>();
    sketch.f_vertex = header.at("f_vertex").get<int>();
    sketch.epsilon = header.at("epsilon").get<double>();
    for (const auto& [key, value] : header.at("literal_vertex").items())
      sketch.literal_vertex[std::stoi(key)] = value.get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("bad sketch header: ") + e.what());
  }
  sketch.hypergraph = parse_hypergraph(text.substr(nl + 1));
  if (sketch.hypergraph.vertex_count() != 2 * sketch.num_vars + 1)
    throw ParseError(1, "sketch header and hypergraph vertex counts disagree");
  return sketch;
}

}  // namespace hypersketch
