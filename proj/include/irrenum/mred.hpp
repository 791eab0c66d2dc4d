#pragma once

#include <optional>
#include <vector>

#include "irrenum/core.hpp"
#include "irrenum/oracle.hpp"
#include "irrenum/stream.hpp"

namespace irrenum {
namespace mred {

// Dominate the blue vertices using only red ones. Reds and blues must be
// disjoint.
struct RedBlueInstance {
  Graph host;
  VertexSet reds;
  VertexSet blues;

  RedBlueInstance(Graph g, VertexSet r, VertexSet b);
};

// Every inclusion-minimal vertex set meeting all hyperedges, each exactly
// once, streamed from a depth-first search that branches on the first
// uncovered edge, bans already-tried branch vertices to stay duplicate-free,
// and prunes once a chosen vertex loses its last witness edge. An empty
// hyperedge admits no transversal and is an input error; no edges at all
// yields the empty set.
SolutionStream enum_minimal_transversals(const Hypergraph& h);

// Minimal sets of reds dominating all blues: the minimal transversals of
// {N(b) ∩ reds : b ∈ blues}. A blue with no red neighbor makes the instance
// infeasible: empty stream plus a diagnostic.
SolutionStream enum_minimal_redblue(const RedBlueInstance& inst);

// One batch of the single-redundant-vertex search for x: the members kept in
// N(x) together with the derived red-blue instance whose solutions S fill in
// the rest of the set.
struct SingleRedundantCase {
  int x;
  // R ∩ N(x): a single neighbor y, or a set Y of size >= 2.
  VertexSet kept_neighbors;
  // Single-neighbor case: the neighbor of y reserved as y's private vertex.
  std::optional<int> kept_private;
  // Single-neighbor case: neighbors of y whose whole neighborhood lies in
  // N(x); keeping any of them would strand them without a private vertex.
  VertexSet excluded;
  VertexSet reds;
  VertexSet blues;
};

// Y ⊆ N(x) with |Y| >= 2 qualifies when every y ∈ Y keeps a private vertex
// with respect to Y ∪ {x} and the distance-2 vertices outside N(Y) dominate
// N(x) ∖ Y. Such sets extend to a minimal redundant set R with red(R) = {x}
// and R ∩ N(x) = Y.
bool is_extendable(const Graph& g, int x, const VertexSet& y_set);

// All qualifying Y for x, each once, by depth-first growth in increasing
// vertex order; supersets of a failing Y are pruned, which is sound because
// the family is closed under taking subsets of size >= 2.
SolutionStream enum_extendable_sets(const Graph& g, int x);

// The case list driving enum_minred_single_vertex: one entry per neighbor y
// and reserved private z* ∈ N(y) ∖ {x}, and one per extendable Y.
std::vector<SingleRedundantCase> single_redundant_cases(const Graph& g, int x);

enum class Strategy { automatic, cycle_free, brute };

struct Options {
  Strategy strategy = Strategy::automatic;
  // Run the cycle_free construction even when the class check fails; emitted
  // sets are still individually verified, completeness is not.
  bool force = false;
  // Suppress duplicate solutions (same set from different reserved privates)
  // by recomputing each solution's canonical reserved private instead of
  // keeping a seen-set; trades memory for recomputation.
  bool bounded_space = false;
  OracleConfig oracle;
};

// Minimal redundant sets R with red(R) = {x}, each exactly once. Every
// candidate passes an explicit minimal-redundant + red(R) = {x} check before
// emission; rejections are counted in the stream stats and stay at zero on
// graphs with no induced C3 or C5.
SolutionStream enum_minred_single_vertex(const Graph& g, int x,
                                         const Options& opts = {});

// Minimal redundant sets with at least two redundant vertices: on graphs
// with no induced C3, C5 or C6 these are closed neighborhoods or vertex
// triples, so scanning both families and filtering suffices.
SolutionStream enum_minred_few_redundant(const Graph& g, const Options& opts = {});

// All minimal redundant sets. cycle_free combines the few-redundant scan
// with the per-vertex single-redundant streams and suppresses cross-stream
// repeats; brute is the oracle; automatic picks cycle_free when the class
// check passes and falls back to the oracle otherwise.
SolutionStream enum_minred(const Graph& g, const Options& opts = {});

}  // namespace mred
}  // namespace irrenum
