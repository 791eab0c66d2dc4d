#include <chrono>
#include <cstdint>
#include <iostream>

#include "CLI11.hpp"
#include "irrenum/classes.hpp"
#include "irrenum/oracle.hpp"

namespace {

template <typename F>
double seconds_of(F&& f, int reps) {
  using clock = std::chrono::steady_clock;
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = clock::now();
    f();
    auto t1 = clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Times the serial vs parallel mask-table builders"};
  int n = 20;
  double density = 0.5;
  uint64_t seed = 1;
  int reps = 3;
  app.add_option("--n", n, "vertex count (table size is 2^n)");
  app.add_option("--density", density, "edge probability");
  app.add_option("--seed", seed, "generator seed");
  app.add_option("--reps", reps, "repetitions, best-of timing");
  CLI11_PARSE(app, argc, argv);

  using namespace irrenum;
  Graph g = generate(GenKind::random, n, density, seed);
  MaskRows mr = MaskRows::of(g);
  std::cout << "graph n=" << n << " m=" << g.edge_count() << " table=2^" << n
            << "\n";

  std::vector<uint8_t> irr_s, irr_p;
  double ts = seconds_of([&] { irr_s = irredundance_table_serial(mr); }, reps);
  double tp = seconds_of([&] { irr_p = irredundance_table_parallel(mr); }, reps);
  bool ok = irr_s == irr_p;
  std::cout << "irredundance table  serial " << ts << "s  parallel " << tp
            << "s  speedup " << (tp > 0 ? ts / tp : 0.0)
            << (ok ? "" : "  MISMATCH") << "\n";
  if (!ok) return 1;

  std::vector<uint8_t> red_s, red_p;
  ts = seconds_of([&] { red_s = redundant_subset_table_serial(mr, irr_s); }, reps);
  tp = seconds_of([&] { red_p = redundant_subset_table_parallel(mr, irr_s); }, reps);
  ok = red_s == red_p;
  std::cout << "redundant-subset table  serial " << ts << "s  parallel " << tp
            << "s  speedup " << (tp > 0 ? ts / tp : 0.0)
            << (ok ? "" : "  MISMATCH") << "\n";
  return ok ? 0 : 1;
}
