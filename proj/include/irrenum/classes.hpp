#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "irrenum/graph.hpp"

namespace irrenum {

// order[i] is the i-th eliminated/inserted vertex; a permutation of 0..n-1.
using EliminationOrder = std::vector<int>;

// True iff for every i, order[i] is quasi-simple in the subgraph induced by
// order[0..i]: its neighbors there have pairwise comparable neighborhoods
// (N(a)\{b} ⊆ N(b)\{a} or vice versa, within that subgraph).
bool verify_qseo(const Graph& g, const EliminationOrder& order);

// Greedy peeling from the full graph (any quasi-simple vertex goes last),
// with a complete memoized backtracking fallback when the greedy run dead-ends
// and n <= 16. Returns nothing only after the configured search is exhausted;
// for n > 16 a greedy dead-end is reported as not found.
std::optional<EliminationOrder> quasi_simple_elimination_order(const Graph& g);

// First induced k-cycle found (as a vertex sequence), if any. k >= 3.
std::optional<std::vector<int>> find_induced_cycle(const Graph& g, int k);

// (clique, independent) partition when the graph is split; the independent
// side is maximized, so every clique vertex has a neighbor in it.
std::optional<std::pair<VertexSet, VertexSet>> split_partition_of(const Graph& g);

struct ClassReport {
  std::optional<std::pair<VertexSet, VertexSet>> bipartition;
  std::optional<std::pair<VertexSet, VertexSet>> cobipartition;
  // (clique, independent); independent side maximized, so every clique vertex
  // has a neighbor in the independent side.
  std::optional<std::pair<VertexSet, VertexSet>> split_partition;
  std::optional<EliminationOrder> qseo;
  // k in {3,5,6,8} -> induced cycle witness, when one exists.
  std::map<int, std::optional<std::vector<int>>> induced_cycles;

  bool has_induced(int k) const {
    auto it = induced_cycles.find(k);
    return it != induced_cycles.end() && it->second.has_value();
  }
  // The hereditary class the redundance enumerator is proved on.
  bool c3_c5_c6_free() const {
    return !has_induced(3) && !has_induced(5) && !has_induced(6);
  }
};

ClassReport classify(const Graph& g);

enum class GenKind {
  random,
  bipartite,
  cobipartite,
  split,
  strongly_orderable,
  small_cycle_free,  // no induced C3, C5, C6, C8
};

// Seeded random instance in the requested class; the generator re-checks the
// class property before returning and throws GenerationError when a
// rejection-sampling kind exhausts its retry budget.
Graph generate(GenKind kind, int n, double density, uint64_t seed);

}  // namespace irrenum
