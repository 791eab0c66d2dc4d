#pragma once

#include <string>
#include <variant>

#include "irrenum/graph.hpp"
#include "irrenum/hypergraph.hpp"
#include "irrenum/reductions.hpp"

namespace irrenum {

using Instance = std::variant<Graph, Hypergraph>;

// Text formats ('#' starts a comment, blank lines ignored):
//   graph <n>            followed by one "u v" line per edge, 0-based
//   hypergraph <n> <m>   followed by m lines "k v1 ... vk"
// Rejected with a line-numbered ParseError: malformed or unknown header,
// out-of-range ids, self-loops, duplicate graph edges, hyperedge size
// mismatches, empty hyperedges, and trailing content after the m-th edge.
Instance parse_instance(const std::string& text);

// Minimal DIMACS-style CNF: optional 'c' comment lines, one
// "p cnf <vars> <clauses>" header, then one clause per line as nonzero
// signed ints terminated by 0. Duplicate literals collapse; a clause may
// keep at most 3 distinct literals.
reductions::Cnf parse_cnf(const std::string& text);

std::string serialize(const Graph& g);
std::string serialize(const Hypergraph& h);
std::string serialize(const reductions::Cnf& f);

}  // namespace irrenum
