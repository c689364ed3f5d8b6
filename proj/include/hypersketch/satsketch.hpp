#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hypersketch/hypergraph.hpp"
#include "hypersketch/sparsify.hpp"

namespace hypersketch {

// CNF over variables 1..num_vars; literals are DIMACS-signed ints. Clauses
// are deduplicated and never tautological or empty.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  std::size_t clause_count() const { return clauses.size(); }
  int max_clause_width() const;
};

// Validates and normalizes raw clauses (dedup literals; tautology rejected).
CnfFormula make_cnf(int num_vars, std::vector<std::vector<int>> clauses);

// DIMACS reader: "p cnf n m" header, 0-terminated clauses, 'c' comments.
CnfFormula parse_dimacs(std::string_view text);

struct CnfHypergraph {
  Hypergraph hypergraph;              // 2n+1 vertices, one edge per clause
  std::map<int, int> literal_vertex;  // DIMACS literal -> vertex index
  int f_vertex = 0;
};

// Clause c = (l1 v ... v lk) becomes the unit-weight hyperedge
// {vertex(l1), ..., vertex(lk), F}: a clause is satisfied exactly when its
// edge straddles the assignment's cut.
CnfHypergraph cnf_to_hypergraph(const CnfFormula& phi);

// True literals' vertices on one side; F and false literals on the other.
Cut assignment_to_cut(const CnfFormula& phi, const std::vector<bool>& assignment);

struct SatSketch {
  Hypergraph hypergraph;  // sparsified clause hypergraph on 2n+1 vertices
  std::map<int, int> literal_vertex;
  int f_vertex = 0;
  int num_vars = 0;
  double epsilon = 0.0;
  SparsifierReport report;
};

SatSketch sketch_formula(const CnfFormula& phi, double epsilon, double d, std::uint64_t seed);

// Cut weight of the assignment's image in the sketch.
double estimate_value(const SatSketch& sketch, const std::vector<bool>& assignment);

// Satisfied-clause count by direct evaluation (the oracle the sketch tracks).
int exact_value(const CnfFormula& phi, const std::vector<bool>& assignment);

// Sketch file: one JSON header line (literal map, F vertex, epsilon), then
// the hypergraph text format.
std::string serialize_sketch(const SatSketch& sketch);
SatSketch parse_sketch(std::string_view text);

}  // namespace hypersketch
