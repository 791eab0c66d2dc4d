#include "irrenum/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "irrenum/errors.hpp"
#include "irrenum/mirr.hpp"

namespace irrenum {
namespace reductions {
namespace {

void sort_canonical(std::vector<VertexSet>& v) { std::sort(v.begin(), v.end()); }

void fill_difference(EqualityReport& rep) {
  sort_canonical(rep.lhs);
  sort_canonical(rep.rhs);
  std::set_difference(rep.lhs.begin(), rep.lhs.end(), rep.rhs.begin(), rep.rhs.end(),
                      std::back_inserter(rep.lhs_only));
  std::set_difference(rep.rhs.begin(), rep.rhs.end(), rep.lhs.begin(), rep.lhs.end(),
                      std::back_inserter(rep.rhs_only));
  rep.holds = rep.lhs_only.empty() && rep.rhs_only.empty();
}

void require_kind(Kind got, Kind want, const char* input_kind) {
  if (got != want)
    throw InputError(std::string("this reduction does not take a ") + input_kind);
}

ReductionOutput cobip_of_graph(const Graph& g) {
  if (g.vertex_count() == 0)
    throw InputError("construction needs a non-empty graph");
  const int n = g.vertex_count();
  IncidenceResult inc =
      incidence_graph(closed_neighborhood_hypergraph(g), IncidenceMode::cobipartite);
  // The doubled graph must be symmetric: side-crossing adjacency i->n+j has to
  // match j->n+i, since both mirror the adjacency of i and j in g.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j &&
          inc.graph.adjacent(i, n + j) != inc.graph.adjacent(j, n + i))
        throw std::logic_error("doubled graph lost its symmetry");
  ReductionOutput out{Kind::mirr_cobip, std::move(inc.graph), {}, std::nullopt,
                      std::nullopt,     std::nullopt,         std::nullopt,
                      std::nullopt};
  for (int i = 0; i < n; ++i) out.roles.push_back({"vertex", i, -1});
  for (int i = 0; i < n; ++i) out.roles.push_back({"clone", i, -1});
  return out;
}

ReductionOutput incidence_of_hypergraph(Kind kind, const Hypergraph& h,
                                        IncidenceMode mode) {
  IncidenceResult inc = incidence_graph(h, mode);
  ReductionOutput out{kind,         std::move(inc.graph), {}, std::nullopt,
                      std::nullopt, std::nullopt,         std::nullopt,
                      std::nullopt};
  for (int i = 0; i < h.vertex_count(); ++i) out.roles.push_back({"vertex", i, -1});
  for (const Hyperedge& e : h.edges()) out.roles.push_back({"edge", e.label, -1});
  return out;
}

ReductionOutput trace_children_of(const Hypergraph& h) {
  const int n = h.vertex_count();
  const int m = static_cast<int>(h.edges().size());
  for (int v = 0; v < n; ++v)
    if (h.incident_labels(v).empty())
      throw InputError("vertex " + std::to_string(v) +
                       " lies in no hyperedge; every vertex must be covered");
  std::vector<int> everything(n);
  for (int v = 0; v < n; ++v) everything[v] = v;
  if (is_irredundant(h, VertexSet(everything)))
    throw InputError("the full vertex set is irredundant; the instance is trivial");

  IncidenceResult inc = incidence_graph(h, IncidenceMode::bipartite);
  std::vector<std::pair<int, int>> edges = inc.graph.edges();
  const int y = n + m;
  const int z = n + m + 1;
  for (int v = 0; v < n; ++v) edges.push_back({v, y});
  edges.push_back({y, z});

  ReductionOutput out{Kind::trace_children,
                      Graph(n + m + 2, edges),
                      {},
                      EliminationOrder{},
                      n + m,
                      VertexSet(everything),
                      std::nullopt,
                      y};
  for (int i = 0; i < n; ++i) out.roles.push_back({"vertex", i, -1});
  for (const Hyperedge& e : h.edges()) out.roles.push_back({"edge", e.label, -1});
  out.roles.push_back({"hub", 0, -1});
  out.roles.push_back({"pendant", 0, -1});
  // Edge-side vertices come first in the insertion order, then the vertex
  // side, then the hub and the pendant.
  for (int j = 0; j < m; ++j) out.order->push_back(n + j);
  for (int v = 0; v < n; ++v) out.order->push_back(v);
  out.order->push_back(y);
  out.order->push_back(z);
  return out;
}

ReductionOutput sat_graph_of(const Cnf& raw) {
  Cnf f = normalize_cnf(raw);
  const int n = f.variables;
  const int m = static_cast<int>(f.clauses.size());
  auto lit_id = [n](int lit) {
    int var = lit > 0 ? lit : -lit;
    return 2 * (var - 1) + (lit > 0 ? 0 : 1);
  };
  const int x = 2 * n + m;
  const int y = x + 1;
  const int u = y + 1;
  auto selector_id = [u](int var) { return u + var; };  // var is 1-based

  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < m; ++j)
    for (int lit : f.clauses[j]) edges.push_back({lit_id(lit), 2 * n + j});
  edges.push_back({x, y});
  for (int j = 0; j < m; ++j) edges.push_back({x, 2 * n + j});
  for (int l = 0; l < 2 * n; ++l) edges.push_back({y, l});
  edges.push_back({u, y});
  for (int var = 1; var <= n; ++var) {
    edges.push_back({selector_id(var), lit_id(var)});
    edges.push_back({selector_id(var), lit_id(-var)});
  }

  ReductionOutput out{Kind::sat_mred,
                      Graph(u + n + 1, edges),
                      {},
                      std::nullopt,
                      std::nullopt,
                      std::nullopt,
                      x,
                      y};
  for (int var = 1; var <= n; ++var) {
    out.roles.push_back({"literal", var, -1});
    out.roles.push_back({"literal", -var, -1});
  }
  for (int j = 0; j < m; ++j) out.roles.push_back({"clause", j + 1, -1});
  out.roles.push_back({"x", 0, -1});
  out.roles.push_back({"y", 0, -1});
  out.roles.push_back({"u", 0, -1});
  for (int var = 1; var <= n; ++var) out.roles.push_back({"selector", var, -1});
  return out;
}

ReductionOutput pairwise_hub_graph(int n) {
  if (n < 2) throw InputError("construction needs at least 2 base vertices");
  std::vector<std::pair<int, int>> edges;
  std::vector<VertexRole> roles;
  for (int i = 1; i <= n; ++i) roles.push_back({"base", i, -1});
  int next = n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      edges.push_back({i - 1, next});
      edges.push_back({j - 1, next});
      roles.push_back({"pair", i, j});
      ++next;
    }
  const int y = next;
  const int z = next + 1;
  roles.push_back({"hub", 0, -1});
  roles.push_back({"pendant", 0, -1});
  for (int i = 0; i < n; ++i) edges.push_back({i, y});
  edges.push_back({y, z});

  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = i;
  r.push_back(y);
  ReductionOutput out{Kind::unbounded_red,
                      Graph(z + 1, edges),
                      std::move(roles),
                      std::nullopt,
                      std::nullopt,
                      VertexSet(r),
                      std::nullopt,
                      y};
  return out;
}

std::vector<VertexSet> small_minred_scan(const Graph& g, int max_size) {
  const int n = g.vertex_count();
  std::vector<VertexSet> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    if (!pick.empty()) {
      VertexSet s(pick);
      if (is_minimal_redundant(g, s)) out.push_back(s);
    }
    if (remaining == 0) return;
    for (int v = start; v < n; ++v) {
      pick.push_back(v);
      self(self, v + 1, remaining - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, max_size);
  return out;
}

}  // namespace

Cnf normalize_cnf(const Cnf& f) {
  if (f.variables < 0) throw InputError("negative variable count");
  Cnf out;
  out.variables = f.variables;
  for (const auto& clause : f.clauses) {
    std::set<int> lits;
    for (int lit : clause) {
      if (lit == 0) throw InputError("literal 0 is not allowed");
      int var = lit > 0 ? lit : -lit;
      if (var > f.variables)
        throw InputError("literal " + std::to_string(lit) +
                         " exceeds the declared variable count");
      lits.insert(lit);
    }
    if (lits.size() > 3)
      throw InputError("clause has more than 3 distinct literals");
    out.clauses.emplace_back(lits.begin(), lits.end());
  }
  return out;
}

bool cnf_satisfiable(const Cnf& raw, int max_variables) {
  Cnf f = normalize_cnf(raw);
  if (f.variables > max_variables)
    throw CapError("truth table over " + std::to_string(f.variables) +
                   " variables exceeds the cap of " + std::to_string(max_variables));
  const uint64_t total = uint64_t{1} << f.variables;
  for (uint64_t mask = 0; mask < total; ++mask) {
    bool all = true;
    for (const auto& clause : f.clauses) {
      bool sat = false;
      for (int lit : clause) {
        int var = lit > 0 ? lit : -lit;
        bool value = (mask >> (var - 1)) & 1;
        if ((lit > 0) == value) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

ReductionOutput build_reduction(Kind kind, const Graph& g) {
  require_kind(kind, Kind::mirr_cobip, "graph");
  return cobip_of_graph(g);
}

ReductionOutput build_reduction(Kind kind, const Hypergraph& h) {
  switch (kind) {
    case Kind::mred_cobip:
      if (h.dimension() > 3)
        throw InputError("hypergraph dimension exceeds 3");
      return incidence_of_hypergraph(kind, h, IncidenceMode::cobipartite);
    case Kind::mred_split:
      return incidence_of_hypergraph(kind, h, IncidenceMode::split_vertex_clique);
    case Kind::trace_children:
      return trace_children_of(h);
    default:
      throw InputError("this reduction does not take a hypergraph");
  }
}

ReductionOutput build_reduction(Kind kind, const Cnf& f) {
  require_kind(kind, Kind::sat_mred, "formula");
  return sat_graph_of(f);
}

ReductionOutput build_reduction(Kind kind, int n) {
  require_kind(kind, Kind::unbounded_red, "size parameter");
  return pairwise_hub_graph(n);
}

EqualityReport check_equality(Kind kind, const Graph& g, const OracleConfig& cfg) {
  require_kind(kind, Kind::mirr_cobip, "graph");
  ReductionOutput red = build_reduction(kind, g);
  EqualityReport rep;
  rep.kind = kind;
  rep.lhs = brute_enum(red.graph, Problem::maxirr, cfg).drain();

  mirr::CobipDecomposition dec = mirr::cobip_maxirr_decomposition(g, cfg);
  rep.rhs = dec.small;
  for (const VertexSet& s : dec.lifted_v.drain()) rep.rhs.push_back(s);
  for (const VertexSet& s : dec.lifted_u.drain()) rep.rhs.push_back(s);
  rep.notes.push_back("small side solutions: " + std::to_string(dec.small.size()));
  fill_difference(rep);
  return rep;
}

EqualityReport check_equality(Kind kind, const Hypergraph& h, const OracleConfig& cfg) {
  EqualityReport rep;
  rep.kind = kind;
  switch (kind) {
    case Kind::mred_cobip:
    case Kind::mred_split: {
      ReductionOutput red = build_reduction(kind, h);
      rep.lhs = brute_enum(red.graph, Problem::minred, cfg).drain();
      const int small_cap = kind == Kind::mred_cobip ? 4 : 2;
      const int big_floor = small_cap + 1;
      rep.rhs = small_minred_scan(red.graph, small_cap);
      size_t small_count = rep.rhs.size();
      for (const VertexSet& r : brute_enum(h, Problem::minred, cfg).drain())
        if (r.size() >= big_floor) rep.rhs.push_back(r);
      rep.notes.push_back("size-bounded solutions on the construction: " +
                          std::to_string(small_count));
      fill_difference(rep);
      return rep;
    }
    case Kind::trace_children: {
      rep.rhs = brute_enum(h, Problem::maxirr, cfg).drain();

      ReductionOutput red = build_reduction(kind, h);
      TraceContext ctx(red.graph, *red.order);
      const int i = *red.level;
      const int hub = *red.special_y;
      const int n = h.vertex_count();
      const int gn = red.graph.vertex_count();

      // Extensions of the start set that keep the hub: among the irredundant
      // subsets of start ∪ {hub} containing the hub, the ones no further
      // start vertex can join. Stripping the hub lists the candidate family
      // compared against the hypergraph's maximal irredundant sets.
      for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
        Bits z(gn);
        z.set(hub);
        for (int v = 0; v < n; ++v)
          if ((mask >> v) & 1) z.set(v);
        if (!ctx.irredundant(z)) continue;
        bool extendable = false;
        for (int v = 0; v < n && !extendable; ++v) {
          if ((mask >> v) & 1) continue;
          Bits grown = z;
          grown.set(v);
          if (ctx.irredundant(grown)) extendable = true;
        }
        if (extendable) continue;
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
          if ((mask >> v) & 1) members.push_back(v);
        rep.lhs.push_back(VertexSet(members));
      }

      Bits start_bits = red.start_set->to_bits(gn);
      rep.notes.push_back(std::string("start set reappears as its own child: ") +
                          (ctx.maximal_at(start_bits, i + 1) ? "yes" : "no"));
      fill_difference(rep);
      return rep;
    }
    default:
      throw InputError("this reduction does not take a hypergraph");
  }
}

EqualityReport check_equality(Kind kind, const Cnf& f, const OracleConfig& cfg) {
  require_kind(kind, Kind::sat_mred, "formula");
  ReductionOutput red = build_reduction(kind, f);
  const int x = *red.special_x;
  const int y = *red.special_y;
  EqualityReport rep;
  rep.kind = kind;

  for (const VertexSet& r : brute_enum(red.graph, Problem::minred, cfg).drain()) {
    if (redundancy_status(red.graph, r).redundant != VertexSet{x}) continue;
    if (set_intersection(r, VertexSet::from_bits(red.graph.open_row(x))) !=
        VertexSet{y})
      continue;
    rep.lhs.push_back(r);
  }

  Cnf norm = normalize_cnf(f);
  const int n = norm.variables;
  auto lit_id = [n](int lit) {
    int var = lit > 0 ? lit : -lit;
    return 2 * (var - 1) + (lit > 0 ? 0 : 1);
  };
  auto covers = [&](uint32_t pick) {
    for (const auto& clause : norm.clauses) {
      bool covered = false;
      for (int lit : clause)
        if ((pick >> lit_id(lit)) & 1) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
    return true;
  };
  // Consistent literal selections that cover every clause, minimally so:
  // exactly the sets the construction turns into qualifying solutions.
  const uint32_t space = uint32_t{1} << (2 * n);
  for (uint32_t pick = 0; pick < space; ++pick) {
    bool consistent = true;
    for (int var = 1; var <= n; ++var)
      if (((pick >> lit_id(var)) & 1) && ((pick >> lit_id(-var)) & 1))
        consistent = false;
    if (!consistent || !covers(pick)) continue;
    bool minimal = true;
    for (int l = 0; l < 2 * n && minimal; ++l)
      if ((pick >> l) & 1 && covers(pick & ~(uint32_t{1} << l))) minimal = false;
    if (!minimal) continue;
    std::vector<int> members{x, y};
    for (int l = 0; l < 2 * n; ++l)
      if ((pick >> l) & 1) members.push_back(l);
    rep.rhs.push_back(VertexSet(members));
  }

  bool sat = cnf_satisfiable(norm);
  rep.notes.push_back(std::string("formula satisfiable: ") + (sat ? "yes" : "no"));
  fill_difference(rep);
  if (rep.holds && (sat != !rep.lhs.empty())) rep.holds = false;
  return rep;
}

EqualityReport check_equality(Kind kind, int n, const OracleConfig& cfg) {
  require_kind(kind, Kind::unbounded_red, "size parameter");
  (void)cfg;
  ReductionOutput red = build_reduction(kind, n);
  const VertexSet r = *red.start_set;
  EqualityReport rep;
  rep.kind = kind;
  rep.lhs.push_back(r);

  std::vector<int> bases(n);
  for (int i = 0; i < n; ++i) bases[i] = i;
  bool red_ok = redundancy_status(red.graph, r).redundant == VertexSet(bases);
  MinimalityMode mode =
      n <= 4 ? MinimalityMode::full_powerset : MinimalityMode::one_level;
  bool min_ok = is_minimal_redundant(red.graph, r, mode);
  rep.notes.push_back(std::string("all base vertices redundant: ") +
                      (red_ok ? "yes" : "no"));
  rep.notes.push_back(std::string("minimality (") +
                      (mode == MinimalityMode::full_powerset ? "full powerset"
                                                             : "one level") +
                      "): " + (min_ok ? "yes" : "no"));
  if (red_ok && min_ok) rep.rhs.push_back(r);
  fill_difference(rep);
  return rep;
}

}  // namespace reductions
}  // namespace irrenum
