#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "irrenum/graph.hpp"
#include "irrenum/hypergraph.hpp"

namespace irrenum {

// ---- structure conversions ------------------------------------------------

// N(G): one hyperedge per vertex x, members N[x], label x.
Hypergraph closed_neighborhood_hypergraph(const Graph& g);

// Restriction of every edge to S, keeping only non-empty intersections.
// Labels are preserved; the vertex universe stays 0..n-1.
Hypergraph trace(const Hypergraph& h, const VertexSet& s);

// Dual hypergraph: vertices are edge indices of h, one edge per vertex x of h
// collecting the indices of edges containing x. Rows for vertices contained
// in no edge would be empty and are dropped; their vertex ids are reported.
struct TransposeResult {
  Hypergraph hypergraph;
  std::vector<int> dropped_vertices;
};
TransposeResult transpose(const Hypergraph& h);

// Incidence-based graphs on V(h) + one vertex per edge. V-side keeps ids
// 0..n-1; the edge-side vertex for edge index j gets id n+j.
//   bipartite          - incidences only
//   cobipartite        - both sides become cliques
//   split_edge_clique  - edge side becomes a clique
//   split_vertex_clique- vertex side becomes a clique
enum class IncidenceMode { bipartite, cobipartite, split_edge_clique, split_vertex_clique };

struct IncidenceResult {
  Graph graph;
  VertexSet vertex_side;
  VertexSet edge_side;
};
IncidenceResult incidence_graph(const Hypergraph& h, IncidenceMode mode);

// ---- privacy and (ir)redundance --------------------------------------------

// Private neighbors of x in I: y in N[x] with N[y] ∩ I = {x}. x itself
// qualifies when no other member of I is adjacent to it.
VertexSet private_set(const Graph& g, const VertexSet& i, int x);

// Private edges of x in I: labels of edges E with E ∩ I = {x}.
std::vector<int> private_set(const Hypergraph& h, const VertexSet& i, int x);

// Members with an empty private set, plus one witness (private neighbor id /
// private edge label) for every member that does have one.
struct RedundancyStatus {
  VertexSet redundant;
  std::map<int, int> witness;
  bool irredundant() const { return redundant.empty(); }
};
RedundancyStatus redundancy_status(const Graph& g, const VertexSet& i);
RedundancyStatus redundancy_status(const Hypergraph& h, const VertexSet& i);

bool is_irredundant(const Graph& g, const VertexSet& i);
bool is_irredundant(const Hypergraph& h, const VertexSet& i);

// Irredundant and no proper superset within the vertex universe is.
bool is_maximal_irredundant(const Graph& g, const VertexSet& i);
bool is_maximal_irredundant(const Hypergraph& h, const VertexSet& i);

// one_level checks that every R \ {y} is irredundant; full_powerset checks
// every proper subset. The two agree on every input because privacy only
// grows when other members are removed, making redundancy upward closed;
// both are kept and cross-tested.
enum class MinimalityMode { one_level, full_powerset };
bool is_minimal_redundant(const Graph& g, const VertexSet& r,
                          MinimalityMode mode = MinimalityMode::one_level);
bool is_minimal_redundant(const Hypergraph& h, const VertexSet& r,
                          MinimalityMode mode = MinimalityMode::one_level);

// ---- metric helpers ---------------------------------------------------------

enum class BallMode { closed, sphere };

// Vertices at distance <= radius (closed) or exactly radius (sphere) from x.
VertexSet ball(const Graph& g, int x, int radius, BallMode mode = BallMode::closed);

// ---- shared bit-level view ---------------------------------------------------

// Uniform edge-mask view: a graph contributes its closed neighborhoods
// (label = vertex id), a hypergraph its member sets. All privacy predicates
// reduce to scans over these rows.
struct EdgeMasks {
  int n = 0;
  std::vector<Bits> rows;
  std::vector<int> labels;

  static EdgeMasks of(const Graph& g);
  static EdgeMasks of(const Hypergraph& h);

  // True when every member of I has some row r with r ∩ I = {member}.
  bool irredundant(const Bits& i) const;
  // Labels of rows r with r ∩ I = {x}.
  std::vector<int> private_labels(const Bits& i, int x) const;
  // Irredundant and adding any vertex of (universe \ I) breaks some member.
  bool maximal_irredundant(const Bits& i, const Bits& universe) const;
};

}  // namespace irrenum
