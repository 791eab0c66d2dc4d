#include "irrenum/oracle.hpp"

#include <bit>
#include <functional>
#include <memory>
#include <string>

#include "irrenum/errors.hpp"

namespace irrenum {

// ---- mask kernels --------------------------------------------------------------

MaskRows MaskRows::of(const Graph& g) {
  if (g.vertex_count() > 64) throw InputError("mask kernels support at most 64 vertices");
  MaskRows mr;
  mr.n = g.vertex_count();
  mr.rows.reserve(mr.n);
  for (int x = 0; x < mr.n; ++x) {
    uint64_t row = 0;
    for (int y : g.neighbors(x)) row |= uint64_t(1) << y;
    row |= uint64_t(1) << x;
    mr.rows.push_back(row);
  }
  return mr;
}

MaskRows MaskRows::of(const Hypergraph& h) {
  if (h.vertex_count() > 64) throw InputError("mask kernels support at most 64 vertices");
  MaskRows mr;
  mr.n = h.vertex_count();
  for (const auto& e : h.edges()) {
    uint64_t row = 0;
    for (int x : e.members) row |= uint64_t(1) << x;
    mr.rows.push_back(row);
  }
  return mr;
}

bool irredundant_mask(const MaskRows& mr, uint64_t i) {
  uint64_t witnessed = 0;
  for (uint64_t row : mr.rows) {
    uint64_t t = row & i;
    if (t && !(t & (t - 1))) witnessed |= t;
  }
  return (i & ~witnessed) == 0;
}

std::vector<uint8_t> irredundance_table_serial(const MaskRows& mr) {
  const uint64_t size = uint64_t(1) << mr.n;
  std::vector<uint8_t> t(size);
  for (uint64_t m = 0; m < size; ++m) t[m] = irredundant_mask(mr, m);
  return t;
}

std::vector<uint8_t> irredundance_table_parallel(const MaskRows& mr) {
  const uint64_t size = uint64_t(1) << mr.n;
  std::vector<uint8_t> t(size);
#pragma omp parallel for schedule(static)
  for (int64_t m = 0; m < int64_t(size); ++m) t[m] = irredundant_mask(mr, uint64_t(m));
  return t;
}

namespace {

inline uint8_t red_subset_at(uint64_t m, const std::vector<uint8_t>& irr,
                             const std::vector<uint8_t>& t) {
  if (!irr[m]) return 1;
  uint64_t rem = m;
  while (rem) {
    uint64_t b = rem & (~rem + 1);
    if (t[m ^ b]) return 1;
    rem ^= b;
  }
  return 0;
}

// next larger integer with the same popcount
inline uint64_t next_combination(uint64_t v) {
  uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace

std::vector<uint8_t> redundant_subset_table_serial(const MaskRows& mr,
                                                   const std::vector<uint8_t>& irr) {
  const uint64_t size = uint64_t(1) << mr.n;
  std::vector<uint8_t> t(size);
  t[0] = !irr[0];
  for (uint64_t m = 1; m < size; ++m) t[m] = red_subset_at(m, irr, t);
  return t;
}

std::vector<uint8_t> redundant_subset_table_parallel(const MaskRows& mr,
                                                     const std::vector<uint8_t>& irr) {
  const int n = mr.n;
  const uint64_t size = uint64_t(1) << n;
  std::vector<uint8_t> t(size);
  t[0] = !irr[0];
  // Level-synchronous: masks of popcount L depend only on popcount L-1.
  std::vector<uint64_t> level;
  level.reserve(size / 2 + 1);
  for (int pc = 1; pc <= n; ++pc) {
    level.clear();
    uint64_t m = (uint64_t(1) << pc) - 1;
    while (m < size) {
      level.push_back(m);
      if (m == size - 1 || pc == 0) break;
      uint64_t nx = next_combination(m);
      if (nx >= size || nx <= m) break;
      m = nx;
    }
#pragma omp parallel for schedule(static)
    for (int64_t k = 0; k < int64_t(level.size()); ++k)
      t[level[k]] = red_subset_at(level[k], irr, t);
  }
  return t;
}

// ---- lexicographic subset walk ---------------------------------------------------

namespace {

// Depth-first pre-order walk of the subset tree of `universe` (children extend
// by larger positions), which is exactly the canonical lexicographic order.
// prune(m) skips every strict superset reachable below m.
Generator<VertexSet> lex_walk(std::vector<int> universe,
                              std::function<bool(uint64_t)> emit,
                              std::function<bool(uint64_t)> prune,
                              std::shared_ptr<StreamStats> stats) {
  const int k = int(universe.size());
  auto to_set = [universe](uint64_t m) {
    std::vector<int> ids;
    for (int b = 0; b < int(universe.size()); ++b)
      if ((m >> b) & 1) ids.push_back(universe[b]);
    return VertexSet(std::move(ids));
  };
  stats->work += 1;
  if (emit(0)) co_yield to_set(0);
  if (prune(0)) co_return;
  std::vector<int> stack;
  uint64_t m = 0;
  int e = 0;
  while (true) {
    if (e < k) {
      const uint64_t m2 = m | (uint64_t(1) << e);
      stats->work += 1;
      if (emit(m2)) co_yield to_set(m2);
      if (!prune(m2)) {
        stack.push_back(e);
        m = m2;
      }
      ++e;
    } else {
      if (stack.empty()) break;
      int last = stack.back();
      stack.pop_back();
      m &= ~(uint64_t(1) << last);
      e = last + 1;
    }
  }
}

void check_cap(int n, const OracleConfig& cfg, const char* what) {
  if (cfg.max_vertices > 24)
    throw InputError("oracle cap above 24 not supported (2^n tables)");
  if (n > cfg.max_vertices)
    throw CapError(std::string(what) + " refused: " + std::to_string(n) +
                   " vertices exceeds the oracle cap of " +
                   std::to_string(cfg.max_vertices));
}

struct Tables {
  std::vector<uint8_t> irr;
  std::vector<uint8_t> redsub;
};

// Build tables once; table construction is charged to stats as one work unit
// per table entry so that pre-first-output cost is visible in delay reports.
std::shared_ptr<Tables> build_tables(const MaskRows& mr, bool need_redsub,
                                     std::shared_ptr<StreamStats> stats) {
  auto t = std::make_shared<Tables>();
  t->irr = irredundance_table_parallel(mr);
  stats->work += t->irr.size();
  if (need_redsub) {
    t->redsub = redundant_subset_table_parallel(mr, t->irr);
    stats->work += t->redsub.size();
  }
  return t;
}

SolutionStream enum_from_masks(MaskRows mr, Problem problem,
                               std::shared_ptr<StreamStats> stats) {
  const int n = mr.n;
  std::vector<int> universe(n);
  for (int i = 0; i < n; ++i) universe[i] = i;

  switch (problem) {
    case Problem::maxirr: {
      auto t = build_tables(mr, false, stats);
      const uint64_t full = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
      auto emit = [t, full, n](uint64_t m) {
        if (!t->irr[m]) return false;
        uint64_t rest = full & ~m;
        while (rest) {
          uint64_t b = rest & (~rest + 1);
          if (t->irr[m | b]) return false;
          rest ^= b;
        }
        (void)n;
        return true;
      };
      auto prune = [t](uint64_t m) { return !t->irr[m]; };
      return SolutionStream::of_generator(lex_walk(universe, emit, prune, stats), stats);
    }
    case Problem::minred: {
      auto t = build_tables(mr, true, stats);
      auto emit = [t](uint64_t m) {
        if (t->irr[m]) return false;
        uint64_t rem = m;
        while (rem) {
          uint64_t b = rem & (~rem + 1);
          if (t->redsub[m ^ b]) return false;
          rem ^= b;
        }
        return true;
      };
      auto prune = [t](uint64_t m) { return bool(t->redsub[m]); };
      return SolutionStream::of_generator(lex_walk(universe, emit, prune, stats), stats);
    }
    case Problem::mds:
    default: {
      auto t = build_tables(mr, false, stats);
      // Closed rows again, for domination; minimal dominating = dominating and
      // irredundant.
      auto rows = std::make_shared<std::vector<uint64_t>>(mr.rows);
      const uint64_t full = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
      auto dominated = [rows](uint64_t m) {
        uint64_t d = 0;
        uint64_t rem = m;
        while (rem) {
          int b = std::countr_zero(rem);
          d |= (*rows)[b];
          rem &= rem - 1;
        }
        return d;
      };
      auto emit = [t, dominated, full](uint64_t m) {
        return dominated(m) == full && t->irr[m];
      };
      auto prune = [dominated, full](uint64_t m) { return dominated(m) == full; };
      return SolutionStream::of_generator(lex_walk(universe, emit, prune, stats), stats);
    }
  }
}

}  // namespace

SolutionStream brute_enum(const Graph& g, Problem problem, const OracleConfig& cfg) {
  check_cap(g.vertex_count(), cfg, "brute_enum(graph)");
  auto stats = std::make_shared<StreamStats>();
  return enum_from_masks(MaskRows::of(g), problem, stats);
}

SolutionStream brute_enum(const Hypergraph& h, Problem problem, const OracleConfig& cfg) {
  if (problem == Problem::mds)
    throw InputError("mds is defined on graphs; pass a graph instance");
  check_cap(h.vertex_count(), cfg, "brute_enum(hypergraph)");
  auto stats = std::make_shared<StreamStats>();
  return enum_from_masks(MaskRows::of(h), problem, stats);
}

SolutionStream brute_redblue(const Graph& g, const VertexSet& reds,
                             const VertexSet& blues, const OracleConfig& cfg) {
  check_cap(g.vertex_count(), cfg, "brute_redblue");
  for (int v : reds)
    if (v < 0 || v >= g.vertex_count()) throw InputError("red vertex out of range");
  for (int v : blues)
    if (v < 0 || v >= g.vertex_count()) throw InputError("blue vertex out of range");
  if (reds.intersects(blues)) throw InputError("reds and blues must be disjoint");

  auto stats = std::make_shared<StreamStats>();
  // Requirement masks over red positions.
  std::vector<int> universe = reds.ids();
  std::vector<int> pos(g.vertex_count(), -1);
  for (size_t i = 0; i < universe.size(); ++i) pos[universe[i]] = int(i);
  auto needs = std::make_shared<std::vector<uint64_t>>();
  for (int b : blues) {
    uint64_t need = 0;
    for (int w : g.neighbors(b))
      if (pos[w] >= 0) need |= uint64_t(1) << pos[w];
    if (need == 0) {
      stats->note("blue vertex " + std::to_string(b) +
                  " has no red neighbor; no solutions");
      return SolutionStream([]() -> std::optional<VertexSet> { return std::nullopt; },
                            stats);
    }
    needs->push_back(need);
  }
  auto hits = [needs](uint64_t m) {
    for (uint64_t need : *needs)
      if (!(need & m)) return false;
    return true;
  };
  auto emit = [hits, needs](uint64_t m) {
    if (!hits(m)) return false;
    uint64_t rem = m;
    while (rem) {
      uint64_t b = rem & (~rem + 1);
      bool still = true;
      for (uint64_t need : *needs)
        if (!(need & (m ^ b))) {
          still = false;
          break;
        }
      if (still) return false;
      rem ^= b;
    }
    return true;
  };
  auto prune = [hits](uint64_t m) { return hits(m); };
  return SolutionStream::of_generator(lex_walk(universe, emit, prune, stats), stats);
}

}  // namespace irrenum
