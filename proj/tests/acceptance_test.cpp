// Acceptance suite: ten independent checks, one [PASS]/[FAIL] line each,
// nonzero exit when any check fails. Corpus sizes and bounds are pinned here.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <vector>

#include "irrenum/classes.hpp"
#include "irrenum/core.hpp"
#include "irrenum/delay.hpp"
#include "irrenum/errors.hpp"
#include "irrenum/mirr.hpp"
#include "irrenum/mred.hpp"
#include "irrenum/oracle.hpp"
#include "irrenum/reductions.hpp"
#include "test_util.hpp"

using namespace irrenum;
using namespace testutil;

namespace {

int failures = 0;

void report(int number, bool ok, const std::string& text) {
  std::printf("[%s] %2d %s\n", ok ? "PASS" : "FAIL", number, text.c_str());
  if (!ok) ++failures;
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<Graph> fixtures() {
  return {k1(), k2(), p3(), path(4), c4(), star3()};
}

bool two_colorable_induced(const Graph& g, const VertexSet& verts) {
  std::vector<int> color(g.vertex_count(), -2);
  for (int v : verts.ids()) color[v] = -1;
  for (int s : verts.ids()) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int u : g.neighbors(v)) {
        if (color[u] == -2) continue;
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

struct OrderedRun {
  Graph g;
  std::vector<VertexSet> emitted;
  DelayReport rep;
  bool gap_throw = false;
  bool ok_vs_oracle = false;
};

// Criteria 1, 8 and 9 share one corpus of strongly orderable graphs.
void criteria_1_8_9() {
  std::vector<Graph> corpus = fixtures();
  const int generated = 204;  // >= 200 generated members
  for (int idx = 0; idx < generated; ++idx) {
    int n = 4 + idx % 9;  // sizes 4..12
    double density = 0.25 + 0.15 * (idx % 3);
    corpus.push_back(
        generate(GenKind::strongly_orderable, n, density, 1000 + idx));
  }

  bool c1_ok = true, c8_ok = true, c9_ok = true;
  std::string c1_note, c8_note, c9_note;
  double enumerate_seconds = 0.0;
  int level_checks = 0;

  for (const Graph& g : corpus) {
    const int n = g.vertex_count();
    auto t0 = std::chrono::steady_clock::now();

    mirr::Options o;
    o.strategy = mirr::Strategy::strongly_orderable;
    std::vector<VertexSet> emitted;
    DelayReport rep;
    bool gap_throw = false;
    try {
      SolutionStream s = mirr::enum_maxirr(g, o);
      rep = delay_report(s, [&](const VertexSet& v) { emitted.push_back(v); });
    } catch (const std::logic_error& e) {
      gap_throw = true;
      if (c8_note.empty()) c8_note = e.what();
    }

    std::vector<VertexSet> oracle = brute_enum(g, Problem::maxirr).drain();
    enumerate_seconds += seconds_since(t0);

    if (has_duplicates(emitted) || sorted(emitted) != oracle) {
      c1_ok = false;
      if (c1_note.empty())
        c1_note = "mismatch on n=" + std::to_string(n) + " graph";
    }
    if (gap_throw) {
      c8_ok = false;
    } else {
      bool bound_pinned =
          rep.children_gap_bound && *rep.children_gap_bound == uint64_t(2 * n);
      bool candidates_ok =
          rep.max_candidates_per_call <= uint64_t(2 * (n + 1) * (n + 1));
      if (!bound_pinned || !rep.children_gap_ok || !candidates_ok) {
        c8_ok = false;
        if (c8_note.empty())
          c8_note = "gap or candidate bound violated on n=" + std::to_string(n);
      }
    }

    // Criterion 9: children of level-i solutions partition level i+1.
    if (n <= 8) {
      auto order = quasi_simple_elimination_order(g);
      if (!order) {
        c9_ok = false;
        if (c9_note.empty()) c9_note = "missing elimination order";
        continue;
      }
      TraceContext ctx(g, *order);
      for (int i = 1; i < n; ++i) {
        std::vector<VertexSet> parents =
            brute_enum(ctx.trace_at(i), Problem::maxirr).drain();
        std::vector<VertexSet> all_children;
        for (const VertexSet& parent : parents)
          for (VertexSet& ch : mirr::children(ctx, parent, i))
            all_children.push_back(std::move(ch));
        std::vector<VertexSet> next =
            brute_enum(ctx.trace_at(i + 1), Problem::maxirr).drain();
        ++level_checks;
        if (sorted(all_children) != next) {
          c9_ok = false;
          if (c9_note.empty())
            c9_note = "level " + std::to_string(i) + " of an n=" +
                      std::to_string(n) + " graph";
        }
      }
    }
  }

  if (enumerate_seconds >= 60.0) {
    c1_ok = false;
    c1_note = "time budget exceeded";
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "strongly-orderable enumeration equals oracle on %zu graphs "
                "(%.1fs < 60s)%s%s",
                corpus.size(), enumerate_seconds, c1_note.empty() ? "" : ": ",
                c1_note.c_str());
  report(1, c1_ok, buf);
  std::snprintf(buf, sizeof(buf),
                "children-call gaps <= 2n and candidates <= 2(n+1)^2 on every "
                "run%s%s",
                c8_note.empty() ? "" : ": ", c8_note.c_str());
  report(8, c8_ok, buf);
  std::snprintf(buf, sizeof(buf),
                "children partition each next level (%d level checks)%s%s",
                level_checks, c9_note.empty() ? "" : ": ", c9_note.c_str());
  report(9, c9_ok, buf);
}

void criterion_2() {
  bool ok = true;
  std::string note;
  const int count = 204;  // >= 200 split graphs
  for (int idx = 0; idx < count; ++idx) {
    int n = 6 + idx % 9;  // sizes 6..14
    double density = 0.3 + 0.2 * (idx % 3);
    Graph g = generate(GenKind::split, n, density, 2000 + idx);
    std::vector<VertexSet> maxirr = brute_enum(g, Problem::maxirr).drain();
    std::vector<VertexSet> mds = brute_enum(g, Problem::mds).drain();
    mirr::Options o;
    o.strategy = mirr::Strategy::split;
    std::vector<VertexSet> algo = mirr::enum_maxirr(g, o).drain();
    if (maxirr != mds || sorted(algo) != maxirr || has_duplicates(algo)) {
      ok = false;
      if (note.empty()) note = ": mismatch at n=" + std::to_string(n);
    }
  }
  report(2, ok,
         "split graphs: MaxIrr = MDS = split-strategy output on 204 graphs" +
             note);
}

void criteria_3_4_5() {
  std::mt19937_64 rng(4242);
  std::vector<Graph> corpus;
  const int generated = 204;  // >= 200 generated members
  for (int idx = 0; idx < generated; ++idx) {
    int n = 4 + idx % 9;  // sizes 4..12
    double density = 0.2 + 0.1 * (idx % 3);
    corpus.push_back(
        generate(GenKind::small_cycle_free, n, density, 3000 + idx));
  }
  for (int n = 2; n <= 12; ++n)
    for (int t = 0; t < 2; ++t) corpus.push_back(random_tree(n, rng));
  corpus.push_back(spider());

  bool c3_ok = true, c4_ok = true;
  std::string c3_note, c4_note;
  uint64_t rejections = 0;

  for (const Graph& g : corpus) {
    std::vector<VertexSet> oracle = brute_enum(g, Problem::minred).drain();

    mred::Options o;
    o.strategy = mred::Strategy::cycle_free;
    SolutionStream s = mred::enum_minred(g, o);
    std::vector<VertexSet> got = s.drain();
    rejections += s.stats().verification_rejections;
    if (has_duplicates(got) || sorted(got) != oracle) {
      c3_ok = false;
      if (c3_note.empty())
        c3_note = ": mismatch on n=" + std::to_string(g.vertex_count());
    }

    for (const VertexSet& r : oracle) {
      VertexSet red = redundancy_status(g, r).redundant;
      if (red.size() > 3) c4_ok = false;
      for (int x : red.ids()) {
        if (!r.subset_of(ball(g, x, 2))) c4_ok = false;
        if (set_intersection(red, g.open_neighborhood(x)).size() > 2)
          c4_ok = false;
        if (set_intersection(red, ball(g, x, 2, BallMode::sphere)).size() > 1)
          c4_ok = false;
        for (int y : red.ids())
          if (y > x && g.adjacent(x, y) && r != g.closed_neighborhood(x) &&
              r != g.closed_neighborhood(y))
            c4_ok = false;
      }
      if (!c4_ok && c4_note.empty())
        c4_note = ": structure bound violated on n=" +
                  std::to_string(g.vertex_count());
    }
    for (int x = 0; x < g.vertex_count(); ++x)
      if (!two_colorable_induced(g, ball(g, x, 2))) {
        c4_ok = false;
        if (c4_note.empty()) c4_note = ": odd cycle inside a 2-ball";
      }
  }

  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "cycle-free minred equals oracle on %zu graphs (%llu "
                "verification rejections)%s",
                corpus.size(), static_cast<unsigned long long>(rejections),
                c3_note.c_str());
  report(3, c3_ok, buf);
  report(4, c4_ok,
         "redundant-core bounds hold for every oracle solution" + c4_note);

  std::vector<VertexSet> c4_minred = brute_enum(c4(), Problem::minred).drain();
  std::vector<VertexSet> want{VertexSet{0, 1, 2}, VertexSet{0, 1, 3},
                              VertexSet{0, 2, 3}, VertexSet{1, 2, 3}};
  bool c5_ok = c4_minred == want;
  for (const VertexSet& r : c4_minred)
    if (redundancy_status(c4(), r).redundant.size() != 3) c5_ok = false;
  report(5, c5_ok,
         "four-cycle minimal redundant sets are the four triples, three "
         "redundant vertices each");
}

void criterion_6() {
  using reductions::Kind;
  int checked = 0, failed = 0;
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : labeled_graphs(n)) {
      ++checked;
      if (!reductions::check_equality(Kind::mirr_cobip, g).holds) ++failed;
    }
  std::mt19937_64 rng(6001);
  for (int i = 0; i < 100; ++i) {
    Graph g = generate(GenKind::random, 5, 0.2 + 0.06 * (i % 10), 6000 + i);
    ++checked;
    if (!reductions::check_equality(Kind::mirr_cobip, g).holds) ++failed;
  }
  for (int i = 0; i < 100; ++i) {
    int n = 1 + int(rng() % 5), m = 1 + int(rng() % 5);
    Hypergraph h = random_hypergraph(n, m, n, rng);
    ++checked;
    if (!reductions::check_equality(Kind::mred_split, h).holds) ++failed;
  }
  for (int i = 0; i < 100; ++i) {
    int n = 1 + int(rng() % 5), m = 1 + int(rng() % 4);
    Hypergraph h = random_hypergraph(n, m, std::min(3, n), rng);
    ++checked;
    if (!reductions::check_equality(Kind::mred_cobip, h).holds) ++failed;
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "decomposition equalities hold on %d instances (%d failures)",
                checked, failed);
  report(6, failed == 0 && checked == 375, buf);
}

void criterion_7() {
  using reductions::Kind;
  bool ok = true;
  std::string note;

  // Part 1: trace-children equality on sampled qualifying hypergraphs.
  std::mt19937_64 rng(7001);
  int qualifying = 0, attempts = 0;
  while (qualifying < 100 && attempts < 4000) {
    ++attempts;
    int n = 2 + int(rng() % 3), m = 1 + int(rng() % 4);
    Hypergraph h = random_hypergraph(n, m, n, rng);
    try {
      if (!reductions::check_equality(Kind::trace_children, h).holds) {
        ok = false;
        if (note.empty()) note = ": trace-children mismatch";
      }
      ++qualifying;
    } catch (const InputError&) {
      // uncovered vertex or irredundant full set; not a qualifying instance
    }
  }
  if (qualifying < 100) {
    ok = false;
    if (note.empty()) note = ": too few qualifying trace instances";
  }

  // Part 2: satisfiability construction, exhaustive over formulas with
  // clauses of 1..3 distinct literals, up to 3 variables and 3 clauses.
  int formulas = 0;
  for (int vars = 0; vars <= 3; ++vars) {
    std::vector<std::vector<int>> clauses;
    std::vector<int> lits;
    for (int v = 1; v <= vars; ++v) {
      lits.push_back(v);
      lits.push_back(-v);
    }
    const int L = int(lits.size());
    for (int a = 0; a < L; ++a) {
      clauses.push_back({lits[a]});
      for (int b = a + 1; b < L; ++b) {
        clauses.push_back({lits[a], lits[b]});
        for (int c = b + 1; c < L; ++c)
          clauses.push_back({lits[a], lits[b], lits[c]});
      }
    }
    const int C = int(clauses.size());
    auto run = [&](const std::vector<int>& picks) {
      reductions::Cnf f;
      f.variables = vars;
      for (int p : picks) f.clauses.push_back(clauses[p]);
      ++formulas;
      if (!reductions::check_equality(Kind::sat_mred, f).holds) {
        ok = false;
        if (note.empty())
          note = ": sat construction failed at " + std::to_string(vars) +
                 " variables";
      }
    };
    run({});
    for (int a = 0; a < C; ++a) {
      run({a});
      for (int b = a + 1; b < C; ++b) {
        run({a, b});
        for (int c = b + 1; c < C; ++c) run({a, b, c});
      }
    }
  }

  // Part 3: the pairwise-hub family keeps every base vertex redundant.
  for (int n = 2; n <= 5; ++n) {
    reductions::ReductionOutput out =
        reductions::build_reduction(Kind::unbounded_red, n);
    VertexSet r = *out.start_set;
    std::vector<int> bases;
    for (int v = 0; v < n; ++v) bases.push_back(v);
    bool red_ok =
        redundancy_status(out.graph, r).redundant == VertexSet(bases);
    MinimalityMode mode =
        n <= 4 ? MinimalityMode::full_powerset : MinimalityMode::one_level;
    if (!red_ok || !is_minimal_redundant(out.graph, r, mode)) {
      ok = false;
      if (note.empty()) note = ": hub family failed at n=" + std::to_string(n);
    }
  }

  char buf[160];
  std::snprintf(
      buf, sizeof(buf),
      "constructions verified: %d trace instances, %d formulas, hub sizes "
      "2..5%s",
      qualifying, formulas, note.c_str());
  report(7, ok, buf);
}

void criterion_10() {
  bool ok = true;
  std::string note;

  bool refused = false;
  try {
    mirr::Options o;
    o.strategy = mirr::Strategy::strongly_orderable;
    mirr::enum_maxirr(cycle(6), o).drain();
  } catch (const ClassError&) {
    refused = true;
  }
  if (!refused) {
    ok = false;
    note = ": six-cycle was not refused";
  }

  int found = 0, attempts = 0;
  while (found < 50 && attempts < 4000) {
    ++attempts;
    Graph g = generate(GenKind::random, 6 + attempts % 2, 0.5, 10000 + attempts);
    if (quasi_simple_elimination_order(g)) continue;
    ++found;
    mirr::Options o;
    o.strategy = mirr::Strategy::strongly_orderable;
    o.force = true;
    SolutionStream s = mirr::enum_maxirr(g, o);
    for (const VertexSet& z : s.drain())
      if (!is_maximal_irredundant(g, z)) {
        ok = false;
        if (note.empty()) note = ": unsound forced emission";
      }
  }
  if (found < 50) {
    ok = false;
    if (note.empty()) note = ": too few out-of-class graphs";
  }

  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "class refusal plus %d forced runs emitting only verified "
                "solutions%s",
                found, note.c_str());
  report(10, ok, buf);
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  try {
    criteria_1_8_9();
    criterion_2();
    criteria_3_4_5();
    criterion_6();
    criterion_7();
    criterion_10();
  } catch (const std::exception& e) {
    std::printf("[FAIL] -- suite aborted: %s\n", e.what());
    return 99;
  }
  std::printf("%d failing criteria (%.1fs)\n", failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
