#pragma once

#include <optional>
#include <string>
#include <vector>

#include "irrenum/classes.hpp"
#include "irrenum/core.hpp"
#include "irrenum/oracle.hpp"

namespace irrenum {
namespace reductions {

// 3-CNF as DIMACS-style signed literals (1-based variables; negative =
// negated). At most 3 distinct literals per clause after deduplication.
struct Cnf {
  int variables = 0;
  std::vector<std::vector<int>> clauses;
};

// Throws InputError when the formula breaks the 3-CNF conventions; returns a
// copy with duplicate literals inside each clause collapsed.
Cnf normalize_cnf(const Cnf& f);

// Satisfiability by truth table; guarded to small variable counts.
bool cnf_satisfiable(const Cnf& f, int max_variables = 20);

enum class Kind {
  mirr_cobip,
  mred_cobip,
  mred_split,
  trace_children,
  sat_mred,
  unbounded_red,
};

// What a constructed vertex stands for; `a` (and `b` where two indices are
// needed) point back into the source object. Literal roles store the signed
// literal in `a`.
struct VertexRole {
  std::string role;
  int a = 0;
  int b = -1;
};

struct ReductionOutput {
  Kind kind;
  Graph graph;
  std::vector<VertexRole> roles;
  // trace_children: the insertion order, the level, and the starting set
  // whose children encode the source problem.
  std::optional<EliminationOrder> order;
  std::optional<int> level;
  std::optional<VertexSet> start_set;
  // sat_mred / unbounded_red: distinguished vertices.
  std::optional<int> special_x;
  std::optional<int> special_y;
};

ReductionOutput build_reduction(Kind kind, const Graph& g);
ReductionOutput build_reduction(Kind kind, const Hypergraph& h);
ReductionOutput build_reduction(Kind kind, const Cnf& f);
ReductionOutput build_reduction(Kind kind, int n);

// Both sides of the claimed set identity, computed independently: lhs by
// brute force on the constructed graph, rhs assembled from brute force on
// the source object. holds means exact set equality (for sat_mred it
// additionally requires agreement with the truth-table answer).
struct EqualityReport {
  Kind kind;
  bool holds = false;
  std::vector<VertexSet> lhs;
  std::vector<VertexSet> rhs;
  std::vector<VertexSet> lhs_only;
  std::vector<VertexSet> rhs_only;
  std::vector<std::string> notes;
};

EqualityReport check_equality(Kind kind, const Graph& g, const OracleConfig& cfg = {});
EqualityReport check_equality(Kind kind, const Hypergraph& h, const OracleConfig& cfg = {});
EqualityReport check_equality(Kind kind, const Cnf& f, const OracleConfig& cfg = {});
EqualityReport check_equality(Kind kind, int n, const OracleConfig& cfg = {});

}  // namespace reductions
}  // namespace irrenum
