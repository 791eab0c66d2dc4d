#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "irrenum/classes.hpp"
#include "irrenum/errors.hpp"
#include "irrenum/mred.hpp"
#include "irrenum/oracle.hpp"
#include "test_util.hpp"

using namespace irrenum;
using namespace testutil;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

std::vector<VertexSet> oracle_minred(const Graph& g) {
  return brute_enum(g, Problem::minred).drain();
}

std::vector<VertexSet> oracle_minred_with_red(const Graph& g,
                                              const VertexSet& red) {
  std::vector<VertexSet> out;
  for (const VertexSet& r : oracle_minred(g))
    if (redundancy_status(g, r).redundant == red) out.push_back(r);
  return out;
}

std::vector<VertexSet> oracle_minred_many_red(const Graph& g) {
  std::vector<VertexSet> out;
  for (const VertexSet& r : oracle_minred(g))
    if (redundancy_status(g, r).redundant.size() >= 2) out.push_back(r);
  return out;
}

bool hits_all(const Hypergraph& h, const VertexSet& t) {
  for (const Hyperedge& e : h.edges())
    if (!e.members.intersects(t)) return false;
  return true;
}

}  // namespace

TEST_CASE("minimal transversals") {
  Hypergraph two = Hypergraph::from_sets(3, {VertexSet{0, 1}, VertexSet{1, 2}});
  auto got = drain_sorted(mred::enum_minimal_transversals(two));
  REQUIRE(got.size() == 2);
  CHECK(got[0] == VertexSet{0, 2});
  CHECK(got[1] == VertexSet{1});

  Hypergraph one = Hypergraph::from_sets(1, {VertexSet{0}});
  CHECK(mred::enum_minimal_transversals(one).drain() ==
        std::vector<VertexSet>{VertexSet{0}});

  Hypergraph none = Hypergraph::from_sets(2, {});
  auto empty_family = mred::enum_minimal_transversals(none).drain();
  REQUIRE(empty_family.size() == 1);
  CHECK(empty_family[0].empty());

  SUBCASE("empty hyperedges cannot even be represented") {
    CHECK_THROWS_AS(Hypergraph(2, {{0, VertexSet{}}}), InputError);
  }

  SUBCASE("exactly the minimal hitting sets, each once") {
    std::mt19937_64 rng(71);
    for (int round = 0; round < 25; ++round) {
      int n = 3 + int(rng() % 4);
      Hypergraph h = random_hypergraph(n, 2 + int(rng() % 5), 3, rng);
      auto ts = mred::enum_minimal_transversals(h).drain();
      CHECK(!has_duplicates(ts));
      std::sort(ts.begin(), ts.end());
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> ids;
        for (int v = 0; v < n; ++v)
          if (mask >> v & 1) ids.push_back(v);
        VertexSet t(std::move(ids));
        bool qualifies = hits_all(h, t);
        if (qualifies)
          for (int v : t)
            if (hits_all(h, t.without(v))) qualifies = false;
        CHECK(std::binary_search(ts.begin(), ts.end(), t) == qualifies);
      }
    }
  }
}

TEST_CASE("red-blue enumeration") {
  auto star = drain_sorted(mred::enum_minimal_redblue(
      mred::RedBlueInstance(star3(), VertexSet{1, 2}, VertexSet{0})));
  REQUIRE(star.size() == 2);
  CHECK(star[0] == VertexSet{1});
  CHECK(star[1] == VertexSet{2});

  auto tip = mred::enum_minimal_redblue(
                 mred::RedBlueInstance(spider(), VertexSet{6}, VertexSet{3}))
                 .drain();
  REQUIRE(tip.size() == 1);
  CHECK(tip[0] == VertexSet{6});

  SUBCASE("an unreachable blue yields nothing plus a diagnostic") {
    SolutionStream s = mred::enum_minimal_redblue(
        mred::RedBlueInstance(p4(), VertexSet{0}, VertexSet{3}));
    CHECK(s.drain().empty());
    CHECK(!s.stats().diagnostics.empty());
  }

  SUBCASE("overlapping sides are rejected") {
    CHECK_THROWS_AS(mred::RedBlueInstance(p4(), VertexSet{0, 1}, VertexSet{1}),
                    InputError);
  }

  SUBCASE("agreement with the brute oracle") {
    std::mt19937_64 rng(73);
    for (int round = 0; round < 20; ++round) {
      int n = 4 + int(rng() % 4);
      std::bernoulli_distribution coin(0.5);
      std::vector<std::pair<int, int>> e;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (coin(rng)) e.push_back({u, v});
      Graph g(n, e);
      unsigned reds_mask = unsigned(rng()) & ((1u << n) - 1);
      unsigned blues_mask = unsigned(rng()) & ((1u << n) - 1) & ~reds_mask;
      std::vector<int> reds, blues;
      for (int v = 0; v < n; ++v) {
        if (reds_mask >> v & 1) reds.push_back(v);
        if (blues_mask >> v & 1) blues.push_back(v);
      }
      mred::RedBlueInstance inst(g, VertexSet(reds), VertexSet(blues));
      CHECK(drain_sorted(mred::enum_minimal_redblue(inst)) ==
            drain_sorted(brute_redblue(g, VertexSet(reds), VertexSet(blues))));
    }
  }
}

TEST_CASE("extendability of neighbor sets") {
  CHECK(mred::is_extendable(spider(), 0, VertexSet{1, 2}));
  CHECK(!mred::is_extendable(c4(), 0, VertexSet{1, 3}));
  CHECK(!mred::is_extendable(star3(), 0, VertexSet{1, 2}));

  CHECK_THROWS_AS(mred::is_extendable(spider(), 0, VertexSet{1, 4}), InputError);
  CHECK_THROWS_AS(mred::is_extendable(spider(), 0, VertexSet{1}), InputError);
}

TEST_CASE("extendable set enumeration") {
  auto sp = drain_sorted(mred::enum_extendable_sets(spider(), 0));
  REQUIRE(sp.size() == 4);
  CHECK(sp[0] == VertexSet{1, 2});
  CHECK(sp[1] == VertexSet{1, 2, 3});
  CHECK(sp[2] == VertexSet{1, 3});
  CHECK(sp[3] == VertexSet{2, 3});

  CHECK(mred::enum_extendable_sets(c4(), 0).drain().empty());
  CHECK(mred::enum_extendable_sets(k2(), 0).drain().empty());

  SUBCASE("exhaustive agreement and downward closure in class") {
    std::vector<Graph> corpus{p3(), p4(), c4(), star3(), spider()};
    for (uint64_t seed = 1; seed <= 8; ++seed)
      corpus.push_back(generate(GenKind::small_cycle_free, 8, 0.25, seed));
    for (const Graph& g : corpus) {
      for (int x = 0; x < g.vertex_count(); ++x) {
        auto found = drain_sorted(mred::enum_extendable_sets(g, x));
        CHECK(!has_duplicates(found));
        std::vector<int> nb = g.neighbors(x);
        std::vector<VertexSet> want;
        for (unsigned mask = 1; mask < (1u << nb.size()); ++mask) {
          std::vector<int> ids;
          for (size_t j = 0; j < nb.size(); ++j)
            if (mask >> j & 1) ids.push_back(nb[j]);
          if (ids.size() < 2) continue;
          VertexSet y(std::move(ids));
          if (mred::is_extendable(g, x, y)) want.push_back(y);
        }
        CHECK(found == sorted(want));
        for (const VertexSet& y : found) {
          for (int a : y)
            for (int b : y)
              if (a < b) CHECK(mred::is_extendable(g, x, VertexSet{a, b}));
        }
      }
    }
  }
}

TEST_CASE("single redundant case lists are well formed") {
  std::vector<Graph> corpus{p4(), star3(), spider()};
  for (uint64_t seed = 1; seed <= 5; ++seed)
    corpus.push_back(generate(GenKind::small_cycle_free, 8, 0.25, seed));
  for (const Graph& g : corpus) {
    for (int x = 0; x < g.vertex_count(); ++x) {
      VertexSet nx = g.open_neighborhood(x);
      VertexSet sphere2 = ball(g, x, 2, BallMode::sphere);
      for (const mred::SingleRedundantCase& c : mred::single_redundant_cases(g, x)) {
        CHECK(c.x == x);
        CHECK(c.kept_neighbors.subset_of(nx));
        CHECK(!c.reds.intersects(c.blues));
        CHECK(c.blues == set_difference(nx, c.kept_neighbors));
        CHECK(c.reds.subset_of(sphere2));
        if (c.kept_neighbors.size() == 1) {
          REQUIRE(c.kept_private.has_value());
          int y = c.kept_neighbors[0];
          CHECK(g.adjacent(y, *c.kept_private));
          CHECK(*c.kept_private != x);
          CHECK(!c.reds.contains(*c.kept_private));
          for (int z : c.excluded) {
            CHECK(g.adjacent(y, z));
            CHECK(g.open_neighborhood(z).subset_of(g.open_neighborhood(x)));
          }
        } else {
          CHECK(c.kept_neighbors.size() >= 2);
          CHECK(mred::is_extendable(g, x, c.kept_neighbors));
          CHECK(!c.kept_private.has_value());
        }
      }
    }
  }
}

TEST_CASE("single redundant vertex enumeration") {
  auto p4x0 = mred::enum_minred_single_vertex(p4(), 0).drain();
  REQUIRE(p4x0.size() == 1);
  CHECK(p4x0[0] == VertexSet{0, 1});

  auto star_leaf = mred::enum_minred_single_vertex(star3(), 1).drain();
  REQUIRE(star_leaf.size() == 1);
  CHECK(star_leaf[0] == VertexSet{0, 1});

  auto sp = drain_sorted(mred::enum_minred_single_vertex(spider(), 0));
  CHECK(std::binary_search(sp.begin(), sp.end(), VertexSet{0, 1, 2, 6}));

  SUBCASE("exactly the oracle family with red(R) = {x}, zero rejections") {
    std::vector<Graph> corpus{p3(), p4(), c4(), star3(), spider()};
    for (uint64_t seed = 1; seed <= 8; ++seed)
      corpus.push_back(generate(GenKind::small_cycle_free, 9, 0.25, seed));
    for (const Graph& g : corpus) {
      for (int x = 0; x < g.vertex_count(); ++x) {
        SolutionStream s = mred::enum_minred_single_vertex(g, x);
        auto got = s.drain();
        CHECK(!has_duplicates(got));
        CHECK(sorted(got) == oracle_minred_with_red(g, VertexSet{x}));
        CHECK(s.stats().verification_rejections == 0);
      }
    }
  }
}

TEST_CASE("few redundant vertices enumeration") {
  auto c4f = drain_sorted(mred::enum_minred_few_redundant(c4()));
  REQUIRE(c4f.size() == 4);
  CHECK(c4f[0] == VertexSet{0, 1, 2});
  CHECK(c4f[1] == VertexSet{0, 1, 3});
  CHECK(c4f[2] == VertexSet{0, 2, 3});
  CHECK(c4f[3] == VertexSet{1, 2, 3});
  for (const VertexSet& r : c4f)
    CHECK(redundancy_status(c4(), r).redundant.size() == 3);

  auto pair = mred::enum_minred_few_redundant(k2()).drain();
  REQUIRE(pair.size() == 1);
  CHECK(pair[0] == VertexSet{0, 1});

  CHECK(mred::enum_minred_few_redundant(p4()).drain().empty());

  SUBCASE("matches the oracle family with two or more redundant members") {
    std::vector<Graph> corpus{p3(), p4(), c4(), star3(), spider(), k2()};
    for (uint64_t seed = 1; seed <= 8; ++seed)
      corpus.push_back(generate(GenKind::small_cycle_free, 9, 0.25, seed));
    for (const Graph& g : corpus) {
      auto got = mred::enum_minred_few_redundant(g).drain();
      CHECK(!has_duplicates(got));
      CHECK(sorted(got) == oracle_minred_many_red(g));
    }
  }
}

TEST_CASE("enum_minred equals the oracle") {
  mred::Options cf;
  cf.strategy = mred::Strategy::cycle_free;

  CHECK(drain_sorted(mred::enum_minred(p3(), cf)) == oracle_minred(p3()));
  CHECK(drain_sorted(mred::enum_minred(c4(), cf)) == oracle_minred(c4()));
  CHECK(drain_sorted(mred::enum_minred(spider(), cf)) == oracle_minred(spider()));

  for (uint64_t seed = 1; seed <= 12; ++seed) {
    Graph g = generate(GenKind::small_cycle_free, 10, 0.25, seed);
    SolutionStream s = mred::enum_minred(g, cf);
    auto got = s.drain();
    CHECK(!has_duplicates(got));
    CHECK(sorted(got) == oracle_minred(g));
    CHECK(s.stats().verification_rejections == 0);
  }
}

TEST_CASE("bounded space mode produces the identical family") {
  mred::Options plain;
  plain.strategy = mred::Strategy::cycle_free;
  mred::Options bounded = plain;
  bounded.bounded_space = true;
  std::vector<Graph> corpus{p3(), p4(), c4(), star3(), spider()};
  for (uint64_t seed = 1; seed <= 8; ++seed)
    corpus.push_back(generate(GenKind::small_cycle_free, 9, 0.3, seed));
  for (const Graph& g : corpus) {
    auto a = mred::enum_minred(g, plain).drain();
    auto b = mred::enum_minred(g, bounded).drain();
    CHECK(a.size() == b.size());
    CHECK(sorted(a) == sorted(b));
  }
}

TEST_CASE("class gating and forcing") {
  mred::Options cf;
  cf.strategy = mred::Strategy::cycle_free;
  CHECK_THROWS_AS(mred::enum_minred(triangle(), cf), ClassError);

  // automatic falls back to the oracle out of class.
  CHECK(drain_sorted(mred::enum_minred(triangle())) == oracle_minred(triangle()));

  cf.force = true;
  SolutionStream s = mred::enum_minred(triangle(), cf);
  auto got = s.drain();
  CHECK(s.stats().unverified_complete);
  CHECK(!has_duplicates(got));
  auto truth = oracle_minred(triangle());
  for (const VertexSet& r : got)
    CHECK(std::binary_search(truth.begin(), truth.end(), r));
}

TEST_CASE("shared private vertices exist in every minimal redundant set") {
  std::mt19937_64 rng(79);
  for (int round = 0; round < 15; ++round) {
    int n = 4 + int(rng() % 4);
    std::bernoulli_distribution coin(0.45);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) e.push_back({u, v});
    Graph g(n, e);
    for (const VertexSet& r : oracle_minred(g)) {
      VertexSet red = redundancy_status(g, r).redundant;
      for (int x : red)
        for (int y : r) {
          if (y == x) continue;
          VertexSet px = private_set(g, r.without(y), x);
          VertexSet py = private_set(g, r.without(x), y);
          CHECK(px.intersects(py));
        }
    }
  }
}

TEST_CASE("solutions stay inside the second neighborhood of each redundant member") {
  std::vector<Graph> corpus{p3(), p4(), c4(), star3(), spider()};
  for (uint64_t seed = 1; seed <= 8; ++seed)
    corpus.push_back(generate(GenKind::small_cycle_free, 9, 0.25, seed));
  for (const Graph& g : corpus) {
    mred::Options cf;
    cf.strategy = mred::Strategy::cycle_free;
    for (const VertexSet& r : mred::enum_minred(g, cf).drain()) {
      VertexSet red = redundancy_status(g, r).redundant;
      for (int x : red) {
        VertexSet reach = ball(g, x, 2);
        CHECK(r.subset_of(reach));
      }
    }
  }
}
