#pragma once

#include <utility>
#include <vector>

#include "irrenum/bits.hpp"
#include "irrenum/vertex_set.hpp"

namespace irrenum {

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// self-loops and duplicate edges are rejected.
class Graph {
 public:
  explicit Graph(int n, std::vector<std::pair<int, int>> edges = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return int(edges_.size()); }
  // Edges normalized to u < v and sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const std::vector<int>& neighbors(int v) const { return nbr_[v]; }
  int degree(int v) const { return int(nbr_[v].size()); }

  // N(v) / N[v] as bit rows; widths equal vertex_count().
  const Bits& open_row(int v) const { return adj_[v]; }
  const Bits& closed_row(int v) const { return cl_[v]; }

  VertexSet open_neighborhood(int v) const { return VertexSet::from_bits(adj_[v]); }
  VertexSet closed_neighborhood(int v) const { return VertexSet::from_bits(cl_[v]); }

  VertexSet vertices() const;
  Bits full_bits() const;

  Graph complement() const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Bits> adj_;  // open neighborhoods
  std::vector<Bits> cl_;   // closed neighborhoods
  std::vector<std::vector<int>> nbr_;
};

}  // namespace irrenum
