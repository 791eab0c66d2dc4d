#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "irrenum/stream.hpp"

namespace irrenum {
namespace cli {

// Set-level comparison of two fully drained streams; counts keep the raw
// emission totals so duplicate emissions remain visible.
struct CompareResult {
  bool equal = false;
  uint64_t a_count = 0;
  uint64_t b_count = 0;
  std::vector<VertexSet> only_a;
  std::vector<VertexSet> only_b;
};

CompareResult compare_streams(SolutionStream& a, SolutionStream& b);

// Full command-line front end; args exclude the program name. Exit codes:
// 0 success / equality, 1 mismatch or failed equality check, 2 usage, parse
// or class errors, 3 oracle cap refusal.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cli
}  // namespace irrenum
