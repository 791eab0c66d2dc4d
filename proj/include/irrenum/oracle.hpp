#pragma once

#include <cstdint>
#include <vector>

#include "irrenum/core.hpp"
#include "irrenum/stream.hpp"

namespace irrenum {

enum class Problem { maxirr, minred, mds };

// Brute-force reference enumeration. Exact and exhaustive but exponential:
// refuses every input above max_vertices. The implementation precomputes
// 2^n-byte tables, so caps above 24 are rejected outright.
struct OracleConfig {
  int max_vertices = 20;
};

// Emits all solutions exactly once, in canonical lexicographic order of
// vertex sets. minred uses the full-powerset minimality semantics (realized
// through a has-redundant-subset table); mds is graph-only.
SolutionStream brute_enum(const Graph& g, Problem problem, const OracleConfig& cfg = {});
SolutionStream brute_enum(const Hypergraph& h, Problem problem,
                          const OracleConfig& cfg = {});

// All minimal D ⊆ reds with blues ⊆ N(D), canonical order. reds and blues
// must be disjoint. A blue vertex without red neighbors makes the stream
// empty (diagnostic recorded).
SolutionStream brute_redblue(const Graph& g, const VertexSet& reds,
                             const VertexSet& blues, const OracleConfig& cfg = {});

// ---- mask-table kernels ------------------------------------------------------
// The only data-parallel hot spot of the oracle. Serial builders are the
// reference; the parallel builders use OpenMP when available and must agree
// bit-for-bit (tested; compared by the bench_oracle tool).

// Edge rows as 64-bit masks; usable while n <= 64.
struct MaskRows {
  int n = 0;
  std::vector<uint64_t> rows;

  static MaskRows of(const Graph& g);
  static MaskRows of(const Hypergraph& h);
};

// True iff every member of i has a row r with r ∩ i = {member}.
bool irredundant_mask(const MaskRows& mr, uint64_t i);

// t[m] = 1 iff m is irredundant. Size 2^n.
std::vector<uint8_t> irredundance_table_serial(const MaskRows& mr);
std::vector<uint8_t> irredundance_table_parallel(const MaskRows& mr);

// t[m] = 1 iff some subset of m (possibly m itself) is redundant. Relies on
// redundancy being upward closed. Size 2^n.
std::vector<uint8_t> redundant_subset_table_serial(const MaskRows& mr,
                                                   const std::vector<uint8_t>& irr);
std::vector<uint8_t> redundant_subset_table_parallel(const MaskRows& mr,
                                                     const std::vector<uint8_t>& irr);

}  // namespace irrenum
