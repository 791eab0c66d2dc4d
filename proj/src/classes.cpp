#include "irrenum/classes.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

#include "irrenum/errors.hpp"

namespace irrenum {

namespace {

// v must be inside `mask`; the induced subgraph includes v itself.
bool quasi_simple_in(const Graph& g, int v, const Bits& mask) {
  std::vector<int> nb = (g.open_row(v) & mask).to_vector();
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j) {
      Bits na = g.open_row(nb[i]) & mask;
      na.reset(nb[j]);
      Bits nbj = g.open_row(nb[j]) & mask;
      nbj.reset(nb[i]);
      if (!na.subset_of(nbj) && !nbj.subset_of(na)) return false;
    }
  return true;
}

Bits bits_of_mask(int n, uint32_t m) {
  Bits b(n);
  for (int i = 0; i < n; ++i)
    if ((m >> i) & 1) b.set(i);
  return b;
}

}  // namespace

bool verify_qseo(const Graph& g, const EliminationOrder& order) {
  const int n = g.vertex_count();
  if (int(order.size()) != n) throw InputError("order must be a permutation of 0..n-1");
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v])
      throw InputError("order must be a permutation of 0..n-1");
    seen[v] = 1;
  }
  Bits prefix(n);
  for (int v : order) {
    prefix.set(v);
    if (!quasi_simple_in(g, v, prefix)) return false;
  }
  return true;
}

std::optional<EliminationOrder> quasi_simple_elimination_order(const Graph& g) {
  const int n = g.vertex_count();
  Bits mask = g.full_bits();
  std::vector<int> reversed;
  bool dead = false;
  while (mask.any()) {
    int pick = -1;
    mask.for_each([&](int v) {
      if (pick < 0 && quasi_simple_in(g, v, mask)) pick = v;
    });
    if (pick < 0) {
      dead = true;
      break;
    }
    reversed.push_back(pick);
    mask.reset(pick);
  }
  if (!dead) {
    EliminationOrder order(reversed.rbegin(), reversed.rend());
    return order;
  }
  if (n > 16) return std::nullopt;

  // Complete memoized search over induced-subgraph masks.
  std::unordered_set<uint32_t> failed;
  std::vector<int> rev;
  std::function<bool(uint32_t)> go = [&](uint32_t m) -> bool {
    if (!m) return true;
    if (failed.count(m)) return false;
    Bits mb = bits_of_mask(n, m);
    for (int v = 0; v < n; ++v) {
      if (!((m >> v) & 1)) continue;
      if (!quasi_simple_in(g, v, mb)) continue;
      rev.push_back(v);
      if (go(m & ~(uint32_t(1) << v))) return true;
      rev.pop_back();
    }
    failed.insert(m);
    return false;
  };
  if (go(n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1)) {
    EliminationOrder order(rev.rbegin(), rev.rend());
    return order;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_induced_cycle(const Graph& g, int k) {
  if (k < 3) throw InputError("induced cycle length must be at least 3");
  const int n = g.vertex_count();
  std::vector<int> path;
  // Extends an induced path whose minimum vertex is path[0]; closing edge is
  // the only chord allowed, onto path[0] from the final vertex.
  std::function<bool()> extend = [&]() -> bool {
    const int t = int(path.size());
    const int a = path[0];
    const int last = path.back();
    const bool closing = (t == k - 1);
    for (int u = a + 1; u < n; ++u) {
      if (!g.adjacent(last, u)) continue;
      if (std::find(path.begin(), path.end(), u) != path.end()) continue;
      if (closing && !g.adjacent(u, a)) continue;
      bool chord = false;
      for (int j = closing ? 1 : 0; j + 1 < t; ++j)
        if (g.adjacent(path[j], u)) {
          chord = true;
          break;
        }
      if (chord) continue;
      path.push_back(u);
      if (closing) return true;
      if (extend()) return true;
      path.pop_back();
    }
    return false;
  };
  for (int a = 0; a < n; ++a) {
    path = {a};
    if (extend()) return path;
  }
  return std::nullopt;
}

namespace {

std::optional<std::pair<VertexSet, VertexSet>> two_coloring(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<int> a, b;
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          q.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) (color[v] == 0 ? a : b).push_back(v);
  return std::make_pair(VertexSet(std::move(a)), VertexSet(std::move(b)));
}

}  // namespace

std::optional<std::pair<VertexSet, VertexSet>> split_partition_of(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int u, int v) { return g.degree(u) > g.degree(v); });
  // Degree-sequence splittance test; clique = top-m degrees when it is zero.
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (g.degree(by_degree[i]) >= i) m = i + 1;
  long long lhs = 0, rhs = (long long)m * (m - 1);
  for (int i = 0; i < n; ++i)
    (i < m ? lhs : rhs) += g.degree(by_degree[i]);
  if (lhs != rhs) return std::nullopt;

  std::vector<int> cv(by_degree.begin(), by_degree.begin() + m);
  std::vector<int> sv(by_degree.begin() + m, by_degree.end());
  for (size_t i = 0; i < cv.size(); ++i)
    for (size_t j = i + 1; j < cv.size(); ++j)
      if (!g.adjacent(cv[i], cv[j]))
        throw std::logic_error("degree-sequence split partition was not a clique");
  for (size_t i = 0; i < sv.size(); ++i)
    for (size_t j = i + 1; j < sv.size(); ++j)
      if (g.adjacent(sv[i], sv[j]))
        throw std::logic_error("degree-sequence split partition was not independent");

  // Grow the independent side until every clique vertex has a neighbor in it.
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i < cv.size(); ++i) {
      bool has = false;
      for (int s : sv)
        if (g.adjacent(cv[i], s)) {
          has = true;
          break;
        }
      if (!has) {
        sv.push_back(cv[i]);
        cv.erase(cv.begin() + i);
        moved = true;
        break;
      }
    }
  }
  return std::make_pair(VertexSet(std::move(cv)), VertexSet(std::move(sv)));
}

ClassReport classify(const Graph& g) {
  ClassReport r;
  r.bipartition = two_coloring(g);
  r.cobipartition = two_coloring(g.complement());
  r.split_partition = split_partition_of(g);
  r.qseo = quasi_simple_elimination_order(g);
  for (int k : {3, 5, 6, 8}) r.induced_cycles[k] = find_induced_cycle(g, k);
  return r;
}

// ---- generators -----------------------------------------------------------------

namespace {

uint64_t mix_seed(GenKind kind, uint64_t seed) {
  return seed * 0x9e3779b97f4a7c15ull + uint64_t(kind) + 1;
}

Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return Graph(n, std::move(es));
}

Graph random_bipartite(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution side(0.5), coin(density);
  std::vector<char> in_a(n);
  for (int v = 0; v < n; ++v) in_a[v] = side(rng);
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (in_a[u] != in_a[v] && coin(rng)) es.emplace_back(u, v);
  return Graph(n, std::move(es));
}

Graph random_split(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution side(0.5), coin(density);
  std::vector<char> in_c(n);
  for (int v = 0; v < n; ++v) in_c[v] = side(rng);
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (in_c[u] && in_c[v])
        es.emplace_back(u, v);
      else if (in_c[u] != in_c[v] && coin(rng))
        es.emplace_back(u, v);
    }
  return Graph(n, std::move(es));
}

bool comparable_in(const std::vector<Bits>& adj, int a, int b) {
  Bits na = adj[a];
  na.reset(b);
  Bits nb = adj[b];
  nb.reset(a);
  return na.subset_of(nb) || nb.subset_of(na);
}

// Insert vertices one at a time; each new neighborhood is a chain in the
// neighborhood-inclusion preorder of the current graph, which keeps the
// insertion order a quasi-simple elimination order. Labels are shuffled at
// the end so the order is not just 0..n-1.
Graph random_strongly_orderable(int n, double density, std::mt19937_64& rng) {
  std::vector<Bits> adj(n, Bits(n));
  std::bernoulli_distribution coin(density);
  for (int v = 1; v < n; ++v) {
    std::vector<int> cand(v);
    std::iota(cand.begin(), cand.end(), 0);
    std::shuffle(cand.begin(), cand.end(), rng);
    std::vector<int> chain;
    for (int c : cand) {
      if (!coin(rng)) continue;
      bool ok = true;
      for (int x : chain)
        if (!comparable_in(adj, c, x)) {
          ok = false;
          break;
        }
      if (ok) chain.push_back(c);
    }
    for (int c : chain) {
      adj[v].set(c);
      adj[c].set(v);
    }
  }
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj[u].test(v)) es.emplace_back(relabel[u], relabel[v]);
  Graph g(n, std::move(es));
  EliminationOrder order(n);
  for (int i = 0; i < n; ++i) order[i] = relabel[i];
  if (!verify_qseo(g, order))
    throw std::logic_error("strongly orderable construction broke its own order");
  return g;
}

}  // namespace

Graph generate(GenKind kind, int n, double density, uint64_t seed) {
  if (n < 1) throw InputError("generate: need at least one vertex");
  if (density < 0.0 || density > 1.0)
    throw InputError("generate: density must lie in [0,1]");
  std::mt19937_64 rng(mix_seed(kind, seed));
  switch (kind) {
    case GenKind::random:
      return random_graph(n, density, rng);
    case GenKind::bipartite: {
      Graph g = random_bipartite(n, density, rng);
      if (!classify(g).bipartition) throw std::logic_error("bipartite generator failed");
      return g;
    }
    case GenKind::cobipartite: {
      Graph g = random_bipartite(n, density, rng).complement();
      if (!classify(g).cobipartition)
        throw std::logic_error("cobipartite generator failed");
      return g;
    }
    case GenKind::split: {
      Graph g = random_split(n, density, rng);
      if (!classify(g).split_partition) throw std::logic_error("split generator failed");
      return g;
    }
    case GenKind::strongly_orderable:
      return random_strongly_orderable(n, density, rng);
    case GenKind::small_cycle_free:
    default: {
      // Bipartite rules out C3 and C5; reject until C6 and C8 are absent too.
      for (int round = 0; round < 300; ++round) {
        Graph g = random_bipartite(n, density, rng);
        if (!find_induced_cycle(g, 6) && !find_induced_cycle(g, 8)) return g;
      }
      throw GenerationError(
          "small_cycle_free: retry budget exhausted; lower the density");
    }
  }
}

}  // namespace irrenum
