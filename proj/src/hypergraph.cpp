#include "irrenum/hypergraph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "irrenum/errors.hpp"

namespace irrenum {

Hypergraph::Hypergraph(int n, std::vector<Hyperedge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InputError("hypergraph vertex count must be non-negative");
  std::unordered_set<int> labels;
  for (const auto& e : edges_) {
    if (e.members.empty())
      throw InputError("empty hyperedge (label " + std::to_string(e.label) + ")");
    if (!labels.insert(e.label).second)
      throw InputError("duplicate hyperedge label " + std::to_string(e.label));
    for (int x : e.members)
      if (x < 0 || x >= n_)
        throw InputError("hyperedge member out of range: " + std::to_string(x));
  }
}

Hypergraph Hypergraph::from_sets(int n, const std::vector<VertexSet>& sets) {
  std::vector<Hyperedge> es;
  es.reserve(sets.size());
  for (size_t j = 0; j < sets.size(); ++j) es.push_back({int(j), sets[j]});
  return Hypergraph(n, std::move(es));
}

int Hypergraph::dimension() const {
  int d = 0;
  for (const auto& e : edges_) d = std::max(d, e.members.size());
  return d;
}

std::vector<int> Hypergraph::incident_labels(int x) const {
  std::vector<int> out;
  for (const auto& e : edges_)
    if (e.members.contains(x)) out.push_back(e.label);
  return out;
}

}  // namespace irrenum
