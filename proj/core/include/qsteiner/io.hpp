#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qsteiner/candidates.hpp"
#include "qsteiner/cover.hpp"
#include "qsteiner/field.hpp"
#include "qsteiner/steiner.hpp"

namespace qsteiner {

// Field specification file: `key value` lines with keys p, n, poly; poly is
// a comma-separated coefficient list, constant term first. Lines starting
// with '#' are comments.
FieldSpec read_field_spec(std::istream& in);
FieldSpec read_field_spec_file(const std::string& path);
void write_field_spec(std::ostream& out, const FieldSpec& spec);
void write_field_spec_file(const std::string& path, const FieldSpec& spec);

// Structure file: a field header (p, n, k, poly) followed by one
// representative per line in the subspace text format (comma-separated
// exponents of the nonzero elements). '#' lines carry provenance.
struct StructureFile {
    FieldSpec spec;
    std::uint32_t k = 0;
    std::vector<std::vector<std::uint32_t>> reps;
    std::string provenance;
};
StructureFile read_structure(std::istream& in);
StructureFile read_structure_file(const std::string& path);
void write_structure(std::ostream& out, const SteinerStructure& s);
void write_structure_file(const std::string& path, const SteinerStructure& s);

/// Binds the exponent lists of a structure file to built field tables.
SteinerStructure bind_structure(const FieldTables& tables,
                                const StructureFile& file);

// Exact-cover instance file: header `universe <G>`, then one line per set:
// `<id> <g1> <g2> ...` with group indices ascending.
ExactCoverInstance read_instance(std::istream& in);
ExactCoverInstance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const ExactCoverInstance& inst);
void write_instance_file(const std::string& path,
                         const ExactCoverInstance& inst);

// Solution file: chosen ids one per line, then a deterministic stats
// trailer in '#' comments (outcome, nodes, max depth, solutions, seed).
void write_solution(std::ostream& out, const SolveOutcome& outcome,
                    std::uint64_t seed);
void write_solution_file(const std::string& path, const SolveOutcome& outcome,
                         std::uint64_t seed);
std::vector<std::uint32_t> read_solution_ids(std::istream& in);
std::vector<std::uint32_t> read_solution_ids_file(const std::string& path);

// Conflict graph in DIMACS edge-list format: `p edge <V> <E>` then one
// `e <u> <v>` line per pair of candidates with disjoint signatures
// (vertices are 1-based candidate ids + 1).
void write_conflict_graph(std::ostream& out,
                          const std::vector<CandidateOrbit>& candidates);
void write_conflict_graph_file(const std::string& path,
                               const std::vector<CandidateOrbit>& candidates);

// Subspace text format helpers.
std::vector<std::uint32_t> parse_exponent_list(const std::string& text);
std::string format_exponent_list(const std::vector<std::uint32_t>& exps);

} // namespace qsteiner
