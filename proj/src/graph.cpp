#include "irrenum/graph.hpp"

#include <algorithm>
#include <string>

#include "irrenum/errors.hpp"

namespace irrenum {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw InputError("graph vertex count must be non-negative");
  adj_.assign(n_, Bits(n_));
  cl_.assign(n_, Bits(n_));
  nbr_.assign(n_, {});
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw InputError("edge endpoint out of range: " + std::to_string(u) + " " +
                       std::to_string(v));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (adj_[u].test(v)) throw InputError("duplicate edge " + std::to_string(u) + " " +
                                          std::to_string(v));
    adj_[u].set(v);
    adj_[v].set(u);
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
  for (int v = 0; v < n_; ++v) {
    cl_[v] = adj_[v];
    cl_[v].set(v);
    nbr_[v] = adj_[v].to_vector();
  }
}

VertexSet Graph::vertices() const {
  std::vector<int> ids(n_);
  for (int i = 0; i < n_; ++i) ids[i] = i;
  return VertexSet(std::move(ids));
}

Bits Graph::full_bits() const {
  Bits b(n_);
  for (int i = 0; i < n_; ++i) b.set(i);
  return b;
}

Graph Graph::complement() const {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) es.emplace_back(u, v);
  return Graph(n_, std::move(es));
}

}  // namespace irrenum
