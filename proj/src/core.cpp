#include "irrenum/core.hpp"

#include <deque>
#include <string>

#include "irrenum/errors.hpp"

namespace irrenum {

Hypergraph closed_neighborhood_hypergraph(const Graph& g) {
  std::vector<Hyperedge> es;
  es.reserve(g.vertex_count());
  for (int x = 0; x < g.vertex_count(); ++x)
    es.push_back({x, g.closed_neighborhood(x)});
  return Hypergraph(g.vertex_count(), std::move(es));
}

Hypergraph trace(const Hypergraph& h, const VertexSet& s) {
  std::vector<Hyperedge> es;
  for (const auto& e : h.edges()) {
    VertexSet t = set_intersection(e.members, s);
    if (!t.empty()) es.push_back({e.label, std::move(t)});
  }
  return Hypergraph(h.vertex_count(), std::move(es));
}

TransposeResult transpose(const Hypergraph& h) {
  std::vector<Hyperedge> rows;
  std::vector<int> dropped;
  for (int x = 0; x < h.vertex_count(); ++x) {
    std::vector<int> idx;
    for (int j = 0; j < h.edge_count(); ++j)
      if (h.edge(j).members.contains(x)) idx.push_back(j);
    if (idx.empty())
      dropped.push_back(x);
    else
      rows.push_back({x, VertexSet(std::move(idx))});
  }
  return {Hypergraph(h.edge_count(), std::move(rows)), std::move(dropped)};
}

IncidenceResult incidence_graph(const Hypergraph& h, IncidenceMode mode) {
  const int n = h.vertex_count();
  const int m = h.edge_count();
  std::vector<std::pair<int, int>> es;
  for (int j = 0; j < m; ++j)
    for (int x : h.edge(j).members) es.emplace_back(x, n + j);
  const bool vertex_clique =
      mode == IncidenceMode::cobipartite || mode == IncidenceMode::split_vertex_clique;
  const bool edge_clique =
      mode == IncidenceMode::cobipartite || mode == IncidenceMode::split_edge_clique;
  if (vertex_clique)
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  if (edge_clique)
    for (int j = 0; j < m; ++j)
      for (int k = j + 1; k < m; ++k) es.emplace_back(n + j, n + k);
  std::vector<int> vside(n), eside(m);
  for (int i = 0; i < n; ++i) vside[i] = i;
  for (int j = 0; j < m; ++j) eside[j] = n + j;
  return {Graph(n + m, std::move(es)), VertexSet(std::move(vside)),
          VertexSet(std::move(eside))};
}

// ---- EdgeMasks ---------------------------------------------------------------

EdgeMasks EdgeMasks::of(const Graph& g) {
  EdgeMasks em;
  em.n = g.vertex_count();
  em.rows.reserve(em.n);
  em.labels.reserve(em.n);
  for (int x = 0; x < em.n; ++x) {
    em.rows.push_back(g.closed_row(x));
    em.labels.push_back(x);
  }
  return em;
}

EdgeMasks EdgeMasks::of(const Hypergraph& h) {
  EdgeMasks em;
  em.n = h.vertex_count();
  for (const auto& e : h.edges()) {
    em.rows.push_back(e.members.to_bits(em.n));
    em.labels.push_back(e.label);
  }
  return em;
}

bool EdgeMasks::irredundant(const Bits& i) const {
  Bits witnessed(n);
  for (const auto& r : rows) {
    Bits t = r & i;
    int c = t.count();
    if (c == 1) witnessed |= t;
  }
  return i.subset_of(witnessed);
}

std::vector<int> EdgeMasks::private_labels(const Bits& i, int x) const {
  std::vector<int> out;
  for (size_t k = 0; k < rows.size(); ++k) {
    Bits t = rows[k] & i;
    if (t.is_singleton(x)) out.push_back(labels[k]);
  }
  return out;
}

bool EdgeMasks::maximal_irredundant(const Bits& i, const Bits& universe) const {
  if (!irredundant(i)) return false;
  Bits rest = minus(universe, i);
  bool ok = true;
  rest.for_each([&](int v) {
    if (!ok) return;
    Bits j = i;
    j.set(v);
    if (irredundant(j)) ok = false;
  });
  return ok;
}

// ---- privacy ops --------------------------------------------------------------

namespace {

void check_members(int n, const VertexSet& i, const char* what) {
  for (int x : i)
    if (x < 0 || x >= n)
      throw InputError(std::string(what) + ": member out of range: " + std::to_string(x));
}

RedundancyStatus status_from_masks(const EdgeMasks& em, const VertexSet& i) {
  RedundancyStatus st;
  Bits ib = i.to_bits(em.n);
  std::vector<int> reds;
  for (int x : i) {
    auto privs = em.private_labels(ib, x);
    if (privs.empty())
      reds.push_back(x);
    else
      st.witness[x] = privs.front();
  }
  st.redundant = VertexSet(std::move(reds));
  return st;
}

template <class Structure>
bool minimal_redundant_impl(const Structure& s, const EdgeMasks& em, const VertexSet& r,
                            MinimalityMode mode) {
  Bits rb = r.to_bits(em.n);
  if (em.irredundant(rb)) return false;
  if (mode == MinimalityMode::one_level) {
    for (int y : r) {
      Bits sub = rb;
      sub.reset(y);
      if (!em.irredundant(sub)) return false;
    }
    return true;
  }
  // full powerset: walk all proper subsets of r
  const auto& ids = r.ids();
  const int k = int(ids.size());
  for (uint64_t m = 0; m + 1 < (uint64_t(1) << k); ++m) {
    Bits sub(em.n);
    for (int b = 0; b < k; ++b)
      if ((m >> b) & 1) sub.set(ids[b]);
    if (!em.irredundant(sub)) return false;
  }
  (void)s;
  return true;
}

}  // namespace

VertexSet private_set(const Graph& g, const VertexSet& i, int x) {
  check_members(g.vertex_count(), i, "private_set");
  if (!i.contains(x)) throw InputError("private_set: x must be a member of I");
  Bits ib = i.to_bits(g.vertex_count());
  std::vector<int> out;
  g.closed_row(x).for_each([&](int y) {
    if ((g.closed_row(y) & ib).is_singleton(x)) out.push_back(y);
  });
  return VertexSet(std::move(out));
}

std::vector<int> private_set(const Hypergraph& h, const VertexSet& i, int x) {
  check_members(h.vertex_count(), i, "private_set");
  if (!i.contains(x)) throw InputError("private_set: x must be a member of I");
  return EdgeMasks::of(h).private_labels(i.to_bits(h.vertex_count()), x);
}

RedundancyStatus redundancy_status(const Graph& g, const VertexSet& i) {
  check_members(g.vertex_count(), i, "redundancy_status");
  return status_from_masks(EdgeMasks::of(g), i);
}
RedundancyStatus redundancy_status(const Hypergraph& h, const VertexSet& i) {
  check_members(h.vertex_count(), i, "redundancy_status");
  return status_from_masks(EdgeMasks::of(h), i);
}

bool is_irredundant(const Graph& g, const VertexSet& i) {
  check_members(g.vertex_count(), i, "is_irredundant");
  return EdgeMasks::of(g).irredundant(i.to_bits(g.vertex_count()));
}
bool is_irredundant(const Hypergraph& h, const VertexSet& i) {
  check_members(h.vertex_count(), i, "is_irredundant");
  return EdgeMasks::of(h).irredundant(i.to_bits(h.vertex_count()));
}

bool is_maximal_irredundant(const Graph& g, const VertexSet& i) {
  check_members(g.vertex_count(), i, "is_maximal_irredundant");
  return EdgeMasks::of(g).maximal_irredundant(i.to_bits(g.vertex_count()), g.full_bits());
}
bool is_maximal_irredundant(const Hypergraph& h, const VertexSet& i) {
  check_members(h.vertex_count(), i, "is_maximal_irredundant");
  Bits universe(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v) universe.set(v);
  return EdgeMasks::of(h).maximal_irredundant(i.to_bits(h.vertex_count()), universe);
}

bool is_minimal_redundant(const Graph& g, const VertexSet& r, MinimalityMode mode) {
  check_members(g.vertex_count(), r, "is_minimal_redundant");
  return minimal_redundant_impl(g, EdgeMasks::of(g), r, mode);
}
bool is_minimal_redundant(const Hypergraph& h, const VertexSet& r, MinimalityMode mode) {
  check_members(h.vertex_count(), r, "is_minimal_redundant");
  return minimal_redundant_impl(h, EdgeMasks::of(h), r, mode);
}

VertexSet ball(const Graph& g, int x, int radius, BallMode mode) {
  if (x < 0 || x >= g.vertex_count()) throw InputError("ball: vertex out of range");
  if (radius < 0) throw InputError("ball: radius must be non-negative");
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> q{x};
  dist[x] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (dist[u] == radius) continue;
    for (int w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
  }
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] < 0) continue;
    if (mode == BallMode::closed ? dist[v] <= radius : dist[v] == radius)
      out.push_back(v);
  }
  return VertexSet(std::move(out));
}

}  // namespace irrenum
