#include "irrenum/mred.hpp"

#include <algorithm>
#include <memory>
#include <unordered_set>
#include <utility>

#include "irrenum/classes.hpp"
#include "irrenum/errors.hpp"
#include "irrenum/generator.hpp"

namespace irrenum {
namespace mred {
namespace {

Generator<VertexSet> transversal_walk(std::vector<Bits> edges, int n,
                                      std::shared_ptr<StreamStats> stats) {
  auto first_uncovered = [&edges](const Bits& t) -> int {
    for (size_t j = 0; j < edges.size(); ++j)
      if (!edges[j].intersects(t)) return static_cast<int>(j);
    return -1;
  };
  // A chosen vertex must keep some witness edge it covers alone; growing the
  // set only shrinks witnesses, so a vertex without one prunes the branch.
  auto all_witnessed = [&edges](const Bits& t) {
    bool ok = true;
    t.for_each([&](int v) {
      if (!ok) return;
      bool found = false;
      for (const Bits& e : edges) {
        Bits m = e & t;
        if (m.is_singleton(v)) {
          found = true;
          break;
        }
      }
      if (!found) ok = false;
    });
    return ok;
  };

  Bits empty(n);
  int root_edge = first_uncovered(empty);
  if (root_edge < 0) {
    co_yield VertexSet{};
    co_return;
  }

  struct Frame {
    Bits t;
    Bits banned;
    std::vector<int> cands;
    size_t next = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({empty, empty, edges[root_edge].to_vector(), 0});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next >= top.cands.size()) {
      stack.pop_back();
      continue;
    }
    int v = top.cands[top.next++];
    if (top.banned.test(v)) continue;
    Bits t = top.t;
    t.set(v);
    Bits banned = top.banned;
    top.banned.set(v);
    if (stats) ++stats->work;
    if (!all_witnessed(t)) continue;
    int e = first_uncovered(t);
    if (e < 0) {
      co_yield VertexSet::from_bits(t);
      continue;
    }
    std::vector<int> cands;
    edges[e].for_each([&](int u) {
      if (!banned.test(u)) cands.push_back(u);
    });
    stack.push_back({t, banned, std::move(cands), 0});
  }
}

VertexSet red_set(const Graph& g, const VertexSet& r) {
  return redundancy_status(g, r).redundant;
}

void require_class(const Graph& g, const Options& opts, StreamStats* stats) {
  for (int k : {3, 5, 6}) {
    if (auto cyc = find_induced_cycle(g, k)) {
      if (!opts.force)
        throw ClassError("graph has an induced cycle of length " + std::to_string(k));
      if (stats) {
        stats->unverified_complete = true;
        stats->note("forced past an induced cycle of length " + std::to_string(k) +
                    "; enumeration may be incomplete");
      }
      return;
    }
  }
}

std::vector<VertexSet> few_redundant_list(const Graph& g,
                                          std::shared_ptr<StreamStats> stats) {
  const int n = g.vertex_count();
  std::vector<VertexSet> candidates;
  for (int x = 0; x < n; ++x)
    candidates.push_back(VertexSet::from_bits(g.closed_row(x)));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) candidates.push_back(VertexSet{a, b, c});

  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<VertexSet> out;
  for (const VertexSet& r : candidates) {
    if (stats) ++stats->work;
    if (!seen.insert(r).second) continue;
    if (!is_minimal_redundant(g, r)) continue;
    if (red_set(g, r).size() < 2) continue;
    out.push_back(r);
  }
  return out;
}

Generator<VertexSet> single_vertex_walk(Graph g, int x, Options opts,
                                        std::shared_ptr<StreamStats> stats) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  for (const SingleRedundantCase& c : single_redundant_cases(g, x)) {
    SolutionStream inner = enum_minimal_redblue(RedBlueInstance(g, c.reds, c.blues));
    while (auto s = inner.next()) {
      if (stats) ++stats->work;
      VertexSet r = set_union(set_union(*s, c.kept_neighbors), VertexSet{x});
      if (c.kept_private) {
        if (opts.bounded_space) {
          // Re-derive the smallest private vertex this solution reserves for
          // y; emitting only at that reservation avoids keeping a seen-set.
          int y = c.kept_neighbors.ids().front();
          VertexSet priv = private_set(g, r, y);
          if (priv.empty() || priv.ids().front() != *c.kept_private) continue;
        } else {
          if (!seen.insert(r).second) continue;
        }
      }
      if (!is_minimal_redundant(g, r) || red_set(g, r) != VertexSet{x}) {
        if (stats) ++stats->verification_rejections;
        continue;
      }
      co_yield r;
    }
  }
}

Generator<VertexSet> minred_walk(Graph g, Options opts,
                                 std::shared_ptr<StreamStats> stats) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  for (const VertexSet& r : few_redundant_list(g, stats)) {
    if (seen.insert(r).second) co_yield r;
  }
  for (int x = 0; x < g.vertex_count(); ++x) {
    auto inner = single_vertex_walk(g, x, opts, stats);
    while (auto r = inner.next()) {
      if (seen.insert(*r).second) co_yield *r;
    }
  }
}

}  // namespace

RedBlueInstance::RedBlueInstance(Graph g, VertexSet r, VertexSet b)
    : host(std::move(g)), reds(std::move(r)), blues(std::move(b)) {
  for (int v : reds.ids())
    if (v < 0 || v >= host.vertex_count())
      throw InputError("red vertex " + std::to_string(v) + " out of range");
  for (int v : blues.ids())
    if (v < 0 || v >= host.vertex_count())
      throw InputError("blue vertex " + std::to_string(v) + " out of range");
  if (reds.intersects(blues))
    throw InputError("red and blue sets overlap");
}

SolutionStream enum_minimal_transversals(const Hypergraph& h) {
  auto stats = std::make_shared<StreamStats>();
  std::vector<Bits> edges;
  edges.reserve(h.edges().size());
  for (const Hyperedge& e : h.edges()) {
    Bits b = e.members.to_bits(h.vertex_count());
    if (b.none()) throw InputError("hypergraph has an empty hyperedge");
    edges.push_back(b);
  }
  return SolutionStream::of_generator(
      transversal_walk(std::move(edges), h.vertex_count(), stats), stats);
}

SolutionStream enum_minimal_redblue(const RedBlueInstance& inst) {
  const int n = inst.host.vertex_count();
  Bits reds = inst.reds.to_bits(n);
  std::vector<Bits> edges;
  for (int b : inst.blues.ids()) {
    Bits e = inst.host.open_row(b) & reds;
    if (e.none()) {
      auto stats = std::make_shared<StreamStats>();
      stats->note("blue vertex " + std::to_string(b) +
                  " has no red neighbor; no dominating set exists");
      return SolutionStream([]() -> std::optional<VertexSet> { return std::nullopt; },
                            stats);
    }
    edges.push_back(e);
  }
  auto stats = std::make_shared<StreamStats>();
  return SolutionStream::of_generator(transversal_walk(std::move(edges), n, stats),
                                      stats);
}

bool is_extendable(const Graph& g, int x, const VertexSet& y_set) {
  const int n = g.vertex_count();
  if (x < 0 || x >= n) throw InputError("vertex out of range");
  Bits y = y_set.to_bits(n);
  if (!y.subset_of(g.open_row(x)))
    throw InputError("candidate set is not inside the neighborhood of " +
                     std::to_string(x));
  if (y.count() < 2) throw InputError("candidate set needs at least 2 vertices");

  Bits anchor = y;
  anchor.set(x);
  bool privates_ok = true;
  y.for_each([&](int yy) {
    if (!privates_ok) return;
    bool found = false;
    g.closed_row(yy).for_each([&](int w) {
      if (found) return;
      Bits m = g.closed_row(w) & anchor;
      if (m.is_singleton(yy)) found = true;
    });
    if (!found) privates_ok = false;
  });
  if (!privates_ok) return false;

  Bits n_of_y(n);
  y.for_each([&](int yy) { n_of_y |= g.open_row(yy); });
  Bits reds = ball(g, x, 2, BallMode::sphere).to_bits(n);
  reds.subtract(n_of_y);
  Bits blues = minus(g.open_row(x), y);
  Bits dominated(n);
  reds.for_each([&](int r) { dominated |= g.closed_row(r); });
  return blues.subset_of(dominated);
}

namespace {

Generator<VertexSet> extendable_walk(Graph g, int x,
                                     std::shared_ptr<StreamStats> stats) {
  std::vector<int> nbrs = g.open_neighborhood(x).ids();
  struct Frame {
    VertexSet y;
    size_t next_idx;
  };
  std::vector<Frame> stack;
  for (size_t i = 0; i < nbrs.size(); ++i)
    for (size_t j = i + 1; j < nbrs.size(); ++j) {
      VertexSet pair{nbrs[i], nbrs[j]};
      if (stats) ++stats->work;
      if (!is_extendable(g, x, pair)) continue;
      co_yield pair;
      stack.push_back({pair, j + 1});
      while (!stack.empty()) {
        Frame top = stack.back();
        stack.pop_back();
        for (size_t k = top.next_idx; k < nbrs.size(); ++k) {
          VertexSet grown = top.y.with(nbrs[k]);
          if (stats) ++stats->work;
          if (!is_extendable(g, x, grown)) continue;
          co_yield grown;
          stack.push_back({grown, k + 1});
        }
      }
    }
}

}  // namespace

SolutionStream enum_extendable_sets(const Graph& g, int x) {
  if (x < 0 || x >= g.vertex_count()) throw InputError("vertex out of range");
  auto stats = std::make_shared<StreamStats>();
  return SolutionStream::of_generator(extendable_walk(g, x, stats), stats);
}

std::vector<SingleRedundantCase> single_redundant_cases(const Graph& g, int x) {
  if (x < 0 || x >= g.vertex_count()) throw InputError("vertex out of range");
  const int n = g.vertex_count();
  const VertexSet sphere2 = ball(g, x, 2, BallMode::sphere);
  std::vector<SingleRedundantCase> out;

  for (int y : g.open_neighborhood(x)) {
    Bits stranded(n);
    g.open_row(y).for_each([&](int z) {
      if (g.open_row(z).subset_of(g.open_row(x))) stranded.set(z);
    });
    VertexSet excluded = VertexSet::from_bits(stranded);
    VertexSet blues = g.open_neighborhood(x).without(y);
    for (int z : g.open_neighborhood(y)) {
      if (z == x) continue;
      VertexSet reds = set_difference(sphere2, excluded.with(z));
      out.push_back({x, VertexSet{y}, z, excluded, std::move(reds), blues});
    }
  }

  SolutionStream ys = enum_extendable_sets(g, x);
  while (auto y_set = ys.next()) {
    Bits n_of_y(n);
    for (int yy : y_set->ids()) n_of_y |= g.open_row(yy);
    VertexSet reds = set_difference(sphere2, VertexSet::from_bits(n_of_y));
    VertexSet blues = set_difference(g.open_neighborhood(x), *y_set);
    out.push_back({x, *y_set, std::nullopt, VertexSet{}, std::move(reds),
                   std::move(blues)});
  }
  return out;
}

SolutionStream enum_minred_single_vertex(const Graph& g, int x, const Options& opts) {
  if (x < 0 || x >= g.vertex_count()) throw InputError("vertex out of range");
  auto stats = std::make_shared<StreamStats>();
  require_class(g, opts, stats.get());
  return SolutionStream::of_generator(single_vertex_walk(g, x, opts, stats), stats);
}

SolutionStream enum_minred_few_redundant(const Graph& g, const Options& opts) {
  auto stats = std::make_shared<StreamStats>();
  require_class(g, opts, stats.get());
  return SolutionStream(
      [list = few_redundant_list(g, stats), i = size_t{0}]() mutable
      -> std::optional<VertexSet> {
        if (i >= list.size()) return std::nullopt;
        return list[i++];
      },
      stats);
}

SolutionStream enum_minred(const Graph& g, const Options& opts) {
  switch (opts.strategy) {
    case Strategy::automatic: {
      bool clean = true;
      for (int k : {3, 5, 6})
        if (find_induced_cycle(g, k)) clean = false;
      if (!clean) return brute_enum(g, Problem::minred, opts.oracle);
      auto stats = std::make_shared<StreamStats>();
      return SolutionStream::of_generator(minred_walk(g, opts, stats), stats);
    }
    case Strategy::cycle_free: {
      auto stats = std::make_shared<StreamStats>();
      require_class(g, opts, stats.get());
      return SolutionStream::of_generator(minred_walk(g, opts, stats), stats);
    }
    case Strategy::brute:
      return brute_enum(g, Problem::minred, opts.oracle);
  }
  throw InputError("unknown strategy");
}

}  // namespace mred
}  // namespace irrenum
