#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "irrenum/classes.hpp"
#include "irrenum/core.hpp"
#include "irrenum/oracle.hpp"
#include "irrenum/stream.hpp"

namespace irrenum {

// Bundles a graph with an insertion order v_1..v_n and answers questions
// about the labeled traces H_i of its closed-neighborhood hypergraph on the
// prefixes V_i = {v_1..v_i}. Because a set I ⊆ V_i meets a traced edge and
// its original edge identically, irredundance of I is level-independent and
// every level predicate reduces to neighborhood-mask scans; trace_at
// materializes the actual hypergraph for cross-checks.
class TraceContext {
 public:
  TraceContext(Graph g, EliminationOrder order);

  int n() const { return g_.vertex_count(); }
  const Graph& graph() const { return g_; }
  const EliminationOrder& order() const { return order_; }

  // v_i, 1-based.
  int vertex_at(int i) const;
  // 1-based position of vertex v.
  int position_of(int v) const { return pos_[v]; }
  // V_i as bits (i = 0..n).
  const Bits& prefix(int i) const;

  // Labeled trace of N(G) on V_i: edge label x keeps members N[x] ∩ V_i,
  // kept only when non-empty.
  Hypergraph trace_at(int i) const;

  // Level predicates for I ⊆ V_i (labels run over all vertices; edges whose
  // trace misses V_i cannot intersect I and drop out by themselves).
  bool irredundant(const Bits& s) const;
  bool maximal_at(const Bits& s, int i) const;
  // Labels x' with N[x'] ∩ s = {x}, as bits over the label space.
  Bits private_label_bits(const Bits& s, int x) const;

 private:
  Graph g_;
  EliminationOrder order_;
  std::vector<int> pos_;
  std::vector<Bits> prefix_;
};

namespace mirr {

// Members of I* whose private edges at level i+1 all touch v_{i+1} — the
// vertices that adding v_{i+1} makes redundant.
VertexSet r_set(const TraceContext& ctx, const VertexSet& i_star, int i);

// The unique predecessor of I ∈ MaxIrr(H_i): drop v_i if present, then
// repeatedly add the earliest-ordered vertex of V_{i-1} that keeps the set
// irredundant. Result is maximal irredundant at level i-1 (checked).
VertexSet parent(const TraceContext& ctx, const VertexSet& i_set, int i);

// All Z = (I* ∖ X) ∪ {v_{i+1}} that are maximal irredundant at level i+1.
// Candidates branch over which members of r_set survive, the edge each
// survivor keeps private, and the edge v_{i+1} itself keeps private; every
// other member of a chosen edge and every non-surviving r_set member is
// dropped, v_{i+1} is added, and candidates are filtered by maximality at
// level i+1. Members outside r_set keep a private edge avoiding v_{i+1}
// regardless, so each branch pins down exactly one candidate and the branch
// mirroring a maximal set's own private edges reproduces that set.
std::vector<VertexSet> extensions(const TraceContext& ctx, const VertexSet& i_star,
                                  int i, StreamStats* stats = nullptr);

// All I ∈ MaxIrr(H_{i+1}) with parent(I, i+1) = I*.
std::vector<VertexSet> children(const TraceContext& ctx, const VertexSet& i_star,
                                int i, StreamStats* stats = nullptr);

enum class Strategy { automatic, strongly_orderable, split, brute };

struct Options {
  Strategy strategy = Strategy::automatic;
  // Insertion order for the strongly_orderable strategy; computed when absent.
  std::optional<EliminationOrder> order;
  // Run a class-gated strategy even when the class check fails. Emitted sets
  // are still individually verified; completeness is no longer guaranteed and
  // the stream is marked unverified_complete.
  bool force = false;
  OracleConfig oracle;
};

// Maximal irredundant sets of G. strongly_orderable streams leaves of the
// ordered-generation tree in depth-first discovery order; split emits the
// minimal dominating sets (minimal transversals of N(G)), which coincide
// with MaxIrr on split graphs; brute is the oracle. automatic picks the
// first applicable of those three.
SolutionStream enum_maxirr(const Graph& g, const Options& opts = {});

// MaxIrr of the doubled graph C(N(G)): the members of size <= 2 (found by a
// direct singleton/pair scan on C), plus every MaxIrr(G) member of size >= 3
// embedded on the vertex side, plus a copy of each on the clone side.
struct CobipDecomposition {
  Graph cobip;
  VertexSet vertex_side;
  VertexSet clone_side;
  std::vector<VertexSet> small;
  SolutionStream lifted_v;
  SolutionStream lifted_u;
};
CobipDecomposition cobip_maxirr_decomposition(const Graph& g,
                                              const OracleConfig& cfg = {});

}  // namespace mirr
}  // namespace irrenum
