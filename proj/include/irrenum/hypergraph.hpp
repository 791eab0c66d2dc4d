#pragma once

#include <vector>

#include "irrenum/vertex_set.hpp"

namespace irrenum {

// A hyperedge keeps an opaque integer label so that traces and transposes can
// preserve edge identity across restriction; members is never empty.
struct Hyperedge {
  int label;
  VertexSet members;
};

// Hypergraph on vertices 0..n-1 with labeled edges. Labels must be unique.
// Duplicate member sets under distinct labels are allowed.
class Hypergraph {
 public:
  explicit Hypergraph(int n, std::vector<Hyperedge> edges = {});

  // Convenience: labels assigned 0..m-1 in order.
  static Hypergraph from_sets(int n, const std::vector<VertexSet>& sets);

  int vertex_count() const { return n_; }
  int edge_count() const { return int(edges_.size()); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(int i) const { return edges_[i]; }

  // Maximum edge cardinality (0 when edgeless).
  int dimension() const;

  // Labels of edges containing x.
  std::vector<int> incident_labels(int x) const;

 private:
  int n_;
  std::vector<Hyperedge> edges_;
};

}  // namespace irrenum
