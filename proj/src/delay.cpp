#include "irrenum/delay.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace irrenum {

DelayReport delay_report(SolutionStream& stream,
                         const std::function<void(const VertexSet&)>& sink) {
  using clock = std::chrono::steady_clock;
  DelayReport r;
  const StreamStats& stats = stream.stats();
  uint64_t last_work = stats.work;
  uint64_t last_children = stats.children_calls;
  auto last_time = clock::now();

  auto close_interval = [&]() {
    r.work_units.push_back(stats.work - last_work);
    r.children_gaps.push_back(stats.children_calls - last_children);
    auto now = clock::now();
    r.wall_seconds.push_back(std::chrono::duration<double>(now - last_time).count());
    last_work = stats.work;
    last_children = stats.children_calls;
    last_time = now;
  };

  while (auto s = stream.next()) {
    close_interval();
    ++r.solutions;
    if (sink) sink(*s);
  }
  close_interval();

  r.children_gap_bound = stats.children_gap_bound;
  r.total_work = stats.work;
  r.max_candidates_per_call = stats.max_candidates_per_call;
  r.verification_rejections = stats.verification_rejections;
  r.unverified_complete = stats.unverified_complete;
  r.diagnostics = stats.diagnostics;

  r.max_work_gap = *std::max_element(r.work_units.begin(), r.work_units.end());
  std::vector<uint64_t> sorted = r.work_units;
  std::sort(sorted.begin(), sorted.end());
  r.median_work_gap = sorted[sorted.size() / 2];
  r.max_wall_gap = *std::max_element(r.wall_seconds.begin(), r.wall_seconds.end());
  r.max_children_gap =
      *std::max_element(r.children_gaps.begin(), r.children_gaps.end());

  if (r.children_gap_bound) {
    r.children_gap_ok = r.max_children_gap <= *r.children_gap_bound;
    if (!r.children_gap_ok)
      throw std::logic_error("children-call gap " +
                             std::to_string(r.max_children_gap) +
                             " exceeds the guaranteed bound " +
                             std::to_string(*r.children_gap_bound));
  }
  return r;
}

std::string to_string(const DelayReport& r) {
  std::ostringstream out;
  out << "solutions " << r.solutions << "\n";
  out << "intervals " << r.work_units.size() << "\n";
  out << "work total " << r.total_work << " max-gap " << r.max_work_gap
      << " median-gap " << r.median_work_gap << "\n";
  out << "wall max-gap-seconds " << r.max_wall_gap << "\n";
  if (r.children_gap_bound)
    out << "children max-gap " << r.max_children_gap << " bound "
        << *r.children_gap_bound << (r.children_gap_ok ? " ok" : " VIOLATED")
        << "\n";
  else if (r.max_children_gap > 0)
    out << "children max-gap " << r.max_children_gap << "\n";
  if (r.max_candidates_per_call > 0)
    out << "max-candidates-per-call " << r.max_candidates_per_call << "\n";
  if (r.verification_rejections > 0)
    out << "verification-rejections " << r.verification_rejections << "\n";
  if (r.unverified_complete) out << "completeness unverified\n";
  for (const auto& d : r.diagnostics) out << "note " << d << "\n";
  return out.str();
}

}  // namespace irrenum
