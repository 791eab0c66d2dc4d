#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "irrenum/generator.hpp"
#include "irrenum/vertex_set.hpp"

namespace irrenum {

// Deterministic counters updated by enumerators as they run; read between
// next() calls to measure per-output delay. `work` counts structure probes
// (edge-row scans, candidate constructions), not wall time.
struct StreamStats {
  uint64_t work = 0;
  uint64_t children_calls = 0;
  uint64_t max_candidates_per_call = 0;
  uint64_t verification_rejections = 0;
  // Set when completeness is not guaranteed (forced strategy off its class);
  // every emitted set is still individually verified.
  bool unverified_complete = false;
  // Expected ceiling on children calls between consecutive outputs (2n for
  // the ordered-generation enumerator), when the strategy defines one.
  std::optional<uint64_t> children_gap_bound;
  std::vector<std::string> diagnostics;

  void note(const std::string& msg) { diagnostics.push_back(msg); }
};

// Pull-based enumerator handle. Emits each solution exactly once; stats()
// stays readable after exhaustion.
class SolutionStream {
 public:
  using Puller = std::function<std::optional<VertexSet>()>;

  SolutionStream(Puller pull, std::shared_ptr<StreamStats> stats)
      : pull_(std::move(pull)), stats_(std::move(stats)) {}

  static SolutionStream of_vector(std::vector<VertexSet> sets);
  static SolutionStream of_generator(Generator<VertexSet> gen,
                                     std::shared_ptr<StreamStats> stats);

  std::optional<VertexSet> next() { return pull_(); }
  const StreamStats& stats() const { return *stats_; }
  std::shared_ptr<StreamStats> stats_handle() const { return stats_; }

  // Pull everything that remains.
  std::vector<VertexSet> drain();

 private:
  Puller pull_;
  std::shared_ptr<StreamStats> stats_;
};

}  // namespace irrenum
