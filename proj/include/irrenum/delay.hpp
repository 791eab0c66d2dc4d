#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "irrenum/stream.hpp"
#include "irrenum/vertex_set.hpp"

namespace irrenum {

// Per-interval delay measurements for one fully consumed stream. Intervals
// cover before the first output, between consecutive outputs, and after the
// last; there are always solutions + 1 of them. Deterministic work counters
// are the primary metric, wall time is informational.
struct DelayReport {
  uint64_t solutions = 0;
  std::vector<uint64_t> work_units;      // length = solutions + 1
  std::vector<double> wall_seconds;      // same length
  std::vector<uint64_t> children_gaps;   // same length; all zero for streams
                                         // that do not count children calls
  std::optional<uint64_t> children_gap_bound;
  bool children_gap_ok = true;

  uint64_t max_work_gap = 0;
  uint64_t median_work_gap = 0;
  double max_wall_gap = 0.0;
  uint64_t max_children_gap = 0;

  // Copied from the stream's final stats.
  uint64_t total_work = 0;
  uint64_t max_candidates_per_call = 0;
  uint64_t verification_rejections = 0;
  bool unverified_complete = false;
  std::vector<std::string> diagnostics;
};

// Consumes the stream, passing each solution to `sink` when provided. When
// the stream advertises a children-gap bound, every gap is checked against
// it; a violation throws std::logic_error (the bound is a proved guarantee,
// so exceeding it means the enumerator is broken).
DelayReport delay_report(SolutionStream& stream,
                         const std::function<void(const VertexSet&)>& sink = {});

std::string to_string(const DelayReport& r);

}  // namespace irrenum
