#include "irrenum/mirr.hpp"

#include <algorithm>
#include <memory>
#include <unordered_set>
#include <utility>

#include "irrenum/errors.hpp"
#include "irrenum/generator.hpp"
#include "irrenum/mred.hpp"

namespace irrenum {

TraceContext::TraceContext(Graph g, EliminationOrder order)
    : g_(std::move(g)), order_(std::move(order)) {
  const int n = g_.vertex_count();
  if (static_cast<int>(order_.size()) != n)
    throw InputError("order has " + std::to_string(order_.size()) +
                     " entries for " + std::to_string(n) + " vertices");
  pos_.assign(n, 0);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    int v = order_[i];
    if (v < 0 || v >= n || seen[v])
      throw InputError("order is not a permutation of the vertices");
    seen[v] = true;
    pos_[v] = i + 1;
  }
  prefix_.reserve(n + 1);
  Bits acc(n);
  prefix_.push_back(acc);
  for (int i = 0; i < n; ++i) {
    acc.set(order_[i]);
    prefix_.push_back(acc);
  }
}

int TraceContext::vertex_at(int i) const {
  if (i < 1 || i > n()) throw InputError("level out of range");
  return order_[i - 1];
}

const Bits& TraceContext::prefix(int i) const {
  if (i < 0 || i > n()) throw InputError("level out of range");
  return prefix_[i];
}

Hypergraph TraceContext::trace_at(int i) const {
  return trace(closed_neighborhood_hypergraph(g_), VertexSet::from_bits(prefix(i)));
}

bool TraceContext::irredundant(const Bits& s) const {
  const int n = g_.vertex_count();
  Bits witnessed(n);
  for (int l = 0; l < n; ++l) {
    Bits t = g_.closed_row(l) & s;
    if (t.count() == 1) witnessed |= t;
  }
  return s.subset_of(witnessed);
}

bool TraceContext::maximal_at(const Bits& s, int i) const {
  if (!s.subset_of(prefix(i))) throw InputError("set is not inside the prefix");
  if (!irredundant(s)) return false;
  Bits rest = minus(prefix(i), s);
  bool maximal = true;
  rest.for_each([&](int u) {
    if (!maximal) return;
    Bits t = s;
    t.set(u);
    if (irredundant(t)) maximal = false;
  });
  return maximal;
}

Bits TraceContext::private_label_bits(const Bits& s, int x) const {
  const int n = g_.vertex_count();
  Bits out(n);
  for (int l = 0; l < n; ++l) {
    Bits t = g_.closed_row(l) & s;
    if (t.is_singleton(x)) out.set(l);
  }
  return out;
}

namespace mirr {
namespace {

Bits require_member(const TraceContext& ctx, const VertexSet& s, int i,
                    const char* op) {
  if (i < 1 || i > ctx.n())
    throw InputError(std::string(op) + ": level out of range");
  Bits b = s.to_bits(ctx.n());
  if (!b.subset_of(ctx.prefix(i)))
    throw InputError(std::string(op) + ": set is not inside the prefix");
  if (!ctx.maximal_at(b, i))
    throw InputError(std::string(op) + ": set is not maximal irredundant at this level");
  return b;
}

Bits r_set_bits(const TraceContext& ctx, const Bits& i_star, int i) {
  const int v = ctx.vertex_at(i + 1);
  const Bits& v_inc = ctx.graph().closed_row(v);
  Bits r(ctx.n());
  Bits members = i_star;
  members.for_each([&](int x) {
    if (ctx.private_label_bits(i_star, x).subset_of(v_inc)) r.set(x);
  });
  return r;
}

Bits parent_bits(const TraceContext& ctx, Bits b, int i) {
  b.reset(ctx.vertex_at(i));
  for (;;) {
    int add = -1;
    for (int j = 1; j < i && add < 0; ++j) {
      int x = ctx.vertex_at(j);
      if (b.test(x)) continue;
      Bits t = b;
      t.set(x);
      if (ctx.irredundant(t)) add = x;
    }
    if (add < 0) break;
    b.set(add);
  }
  return b;
}

std::vector<Bits> extensions_bits(const TraceContext& ctx, const Bits& i_star,
                                  int i, StreamStats* stats) {
  const Graph& g = ctx.graph();
  const int n = ctx.n();
  const int v = ctx.vertex_at(i + 1);
  const Bits& next_prefix = ctx.prefix(i + 1);

  const Bits r = r_set_bits(ctx, i_star, i);
  const Bits near = g.open_row(v) & next_prefix;
  Bits sphere(n);
  near.for_each([&](int w) { sphere |= g.open_row(w); });
  sphere &= next_prefix;
  sphere.subtract(g.closed_row(v));
  if (stats && (r & sphere).count() > 1)
    stats->note("more than one redundant member two steps from the incoming vertex");

  // Once v joins the set, every edge through v is blocked for everyone else.
  // Members of I* ∖ R keep a private edge avoiding v no matter which subset
  // survives, so a produced set is pinned down by the choices made for the
  // others: which members of R stay, which edge each of them keeps private,
  // and which edge v itself keeps private. Removing the other members of
  // every chosen edge and the non-kept part of R leaves exactly one
  // candidate per choice, and a maximal set always matches the branch that
  // mirrors its own private edges. |R ∩ Z| is not bounded by a constant
  // (edges labelled by vertices outside the prefix can hide arbitrarily many
  // self-private survivors), hence the backtracking over all of R.
  const Bits w_part = minus(i_star, r);
  const std::vector<int> r_members = r.to_vector();
  std::vector<Bits> option_rows(r_members.size());
  for (size_t t = 0; t < r_members.size(); ++t)
    option_rows[t] = minus(g.closed_row(r_members[t]), g.closed_row(v));

  std::unordered_set<Bits, BitsHash> seen;
  std::vector<Bits> candidates;
  auto branch = [&](auto&& self, size_t t, const Bits& kept,
                    const Bits& forb) -> void {
    if (t == r_members.size()) {
      Bits c = minus(w_part, forb);
      c |= kept;
      c.set(v);
      if (seen.insert(c).second) candidates.push_back(c);
      return;
    }
    self(self, t + 1, kept, forb);
    const int k = r_members[t];
    if (forb.test(k)) return;  // a previously chosen edge already kills k
    option_rows[t].for_each([&](int e) {
      const Bits& row = g.closed_row(e);
      if (row.intersects(kept)) return;  // row must be private to k alone
      Bits kept2 = kept;
      kept2.set(k);
      Bits forb2 = forb | row;
      forb2.reset(k);
      self(self, t + 1, kept2, forb2);
    });
  };
  g.closed_row(v).for_each([&](int ev) {
    Bits base_forb = g.closed_row(ev);
    base_forb.reset(v);
    branch(branch, 0, Bits(n), base_forb);
  });

  if (stats) {
    stats->work += candidates.size();
    stats->max_candidates_per_call =
        std::max(stats->max_candidates_per_call, candidates.size());
  }

  std::vector<Bits> out;
  for (const Bits& c : candidates)
    if (ctx.maximal_at(c, i + 1)) out.push_back(c);
  if (stats) {
    for (const Bits& z : out)
      if ((r & near & z).count() > 1) {
        stats->note("a produced set keeps more than one redundant neighbor of the incoming vertex");
        break;
      }
  }
  std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) {
    return VertexSet::from_bits(a) < VertexSet::from_bits(b);
  });
  return out;
}

std::vector<Bits> children_bits(const TraceContext& ctx, const Bits& i_star,
                                int i, StreamStats* stats) {
  if (stats) {
    ++stats->children_calls;
    ++stats->work;
  }
  const int v = ctx.vertex_at(i + 1);
  Bits with_v = i_star;
  with_v.set(v);
  // Redundancy is preserved by adding vertices, so when I* ∪ {v} stays
  // irredundant it is maximal at level i+1 and is the only set whose parent
  // is I*; otherwise I* itself stays maximal and the remaining children all
  // contain v.
  if (ctx.irredundant(with_v)) return {with_v};
  std::vector<Bits> out{i_star};
  for (const Bits& z : extensions_bits(ctx, i_star, i, stats))
    if (parent_bits(ctx, z, i + 1) == i_star) out.push_back(z);
  return out;
}

Generator<VertexSet> ordered_walk(std::shared_ptr<TraceContext> ctx,
                                  std::shared_ptr<StreamStats> stats) {
  const int n = ctx->n();
  if (n == 0) {
    co_yield VertexSet{};
    co_return;
  }
  Bits root(n);
  root.set(ctx->vertex_at(1));
  if (n == 1) {
    co_yield VertexSet::from_bits(root);
    co_return;
  }
  struct Frame {
    std::vector<Bits> kids;
    size_t next = 0;
    int level = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({children_bits(*ctx, root, 1, stats.get()), 0, 2});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next >= top.kids.size()) {
      stack.pop_back();
      continue;
    }
    Bits node = top.kids[top.next++];
    int level = top.level;
    if (level == n) {
      co_yield VertexSet::from_bits(node);
    } else {
      stack.push_back({children_bits(*ctx, node, level, stats.get()), 0, level + 1});
    }
  }
}

SolutionStream ordered_stream(const Graph& g, EliminationOrder order, bool verified) {
  auto stats = std::make_shared<StreamStats>();
  stats->children_gap_bound = 2 * g.vertex_count();
  if (!verified) {
    stats->unverified_complete = true;
    stats->note("order not verified quasi-simple; enumeration may be incomplete");
  }
  auto ctx = std::make_shared<TraceContext>(g, std::move(order));
  return SolutionStream::of_generator(ordered_walk(ctx, stats), stats);
}

SolutionStream split_stream(const Graph& g, bool verified) {
  SolutionStream inner = mred::enum_minimal_transversals(closed_neighborhood_hypergraph(g));
  auto stats = inner.stats_handle();
  if (!verified) {
    stats->unverified_complete = true;
    stats->note("graph not split; emitting verified maximal irredundant "
                "minimal dominating sets only");
    Graph copy = g;
    auto src = std::make_shared<SolutionStream>(std::move(inner));
    return SolutionStream(
        [copy, src]() -> std::optional<VertexSet> {
          while (auto s = src->next()) {
            if (is_maximal_irredundant(copy, *s)) return s;
          }
          return std::nullopt;
        },
        stats);
  }
  return inner;
}

}  // namespace

VertexSet r_set(const TraceContext& ctx, const VertexSet& i_star, int i) {
  if (i >= ctx.n()) throw InputError("r_set: no vertex follows this level");
  Bits b = require_member(ctx, i_star, i, "r_set");
  return VertexSet::from_bits(r_set_bits(ctx, b, i));
}

VertexSet parent(const TraceContext& ctx, const VertexSet& i_set, int i) {
  if (i < 2) throw InputError("parent: needs a level of at least 2");
  Bits b = require_member(ctx, i_set, i, "parent");
  Bits p = parent_bits(ctx, b, i);
  if (!ctx.maximal_at(p, i - 1))
    throw std::logic_error("parent is not maximal irredundant one level down");
  return VertexSet::from_bits(p);
}

std::vector<VertexSet> extensions(const TraceContext& ctx, const VertexSet& i_star,
                                  int i, StreamStats* stats) {
  if (i >= ctx.n()) throw InputError("extensions: no vertex follows this level");
  Bits b = require_member(ctx, i_star, i, "extensions");
  Bits with_v = b;
  with_v.set(ctx.vertex_at(i + 1));
  if (ctx.irredundant(with_v))
    throw InputError("extensions: adding the next vertex keeps the set irredundant");
  std::vector<VertexSet> out;
  for (const Bits& z : extensions_bits(ctx, b, i, stats))
    out.push_back(VertexSet::from_bits(z));
  return out;
}

std::vector<VertexSet> children(const TraceContext& ctx, const VertexSet& i_star,
                                int i, StreamStats* stats) {
  if (i >= ctx.n()) throw InputError("children: no vertex follows this level");
  Bits b = require_member(ctx, i_star, i, "children");
  std::vector<VertexSet> out;
  for (const Bits& c : children_bits(ctx, b, i, stats))
    out.push_back(VertexSet::from_bits(c));
  return out;
}

SolutionStream enum_maxirr(const Graph& g, const Options& opts) {
  switch (opts.strategy) {
    case Strategy::automatic: {
      auto order = quasi_simple_elimination_order(g);
      if (order) return ordered_stream(g, *order, true);
      if (split_partition_of(g)) return split_stream(g, true);
      return brute_enum(g, Problem::maxirr, opts.oracle);
    }
    case Strategy::strongly_orderable: {
      if (opts.order) {
        bool ok = verify_qseo(g, *opts.order);
        if (!ok && !opts.force)
          throw ClassError("supplied order is not a quasi-simple elimination order");
        return ordered_stream(g, *opts.order, ok);
      }
      auto order = quasi_simple_elimination_order(g);
      if (order) return ordered_stream(g, *order, true);
      if (!opts.force)
        throw ClassError("graph has no quasi-simple elimination order");
      EliminationOrder fallback(g.vertex_count());
      for (int v = 0; v < g.vertex_count(); ++v) fallback[v] = v;
      return ordered_stream(g, std::move(fallback), false);
    }
    case Strategy::split: {
      bool ok = split_partition_of(g).has_value();
      if (!ok && !opts.force) throw ClassError("graph is not split");
      return split_stream(g, ok);
    }
    case Strategy::brute:
      return brute_enum(g, Problem::maxirr, opts.oracle);
  }
  throw InputError("unknown strategy");
}

CobipDecomposition cobip_maxirr_decomposition(const Graph& g, const OracleConfig& cfg) {
  const int n = g.vertex_count();
  IncidenceResult inc =
      incidence_graph(closed_neighborhood_hypergraph(g), IncidenceMode::cobipartite);

  std::vector<VertexSet> small;
  const int total = inc.graph.vertex_count();
  for (int a = 0; a < total; ++a) {
    VertexSet s{a};
    if (is_maximal_irredundant(inc.graph, s)) small.push_back(s);
  }
  for (int a = 0; a < total; ++a)
    for (int b = a + 1; b < total; ++b) {
      VertexSet s{a, b};
      if (is_maximal_irredundant(inc.graph, s)) small.push_back(s);
    }

  auto base = std::make_shared<SolutionStream>(brute_enum(g, Problem::maxirr, cfg));
  auto big = [base]() -> std::optional<VertexSet> {
    while (auto s = base->next()) {
      if (s->size() >= 3) return s;
    }
    return std::nullopt;
  };
  SolutionStream lifted_v(big, base->stats_handle());

  auto base_u = std::make_shared<SolutionStream>(brute_enum(g, Problem::maxirr, cfg));
  auto big_u = [base_u, n]() -> std::optional<VertexSet> {
    while (auto s = base_u->next()) {
      if (s->size() < 3) continue;
      std::vector<int> shifted;
      for (int v : s->ids()) shifted.push_back(v + n);
      return VertexSet(shifted);
    }
    return std::nullopt;
  };
  SolutionStream lifted_u(big_u, base_u->stats_handle());

  return CobipDecomposition{std::move(inc.graph), inc.vertex_side, inc.edge_side,
                            std::move(small), std::move(lifted_v), std::move(lifted_u)};
}

}  // namespace mirr
}  // namespace irrenum
