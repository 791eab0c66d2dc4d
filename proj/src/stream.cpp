#include "irrenum/stream.hpp"

namespace irrenum {

SolutionStream SolutionStream::of_vector(std::vector<VertexSet> sets) {
  auto stats = std::make_shared<StreamStats>();
  auto state = std::make_shared<std::pair<std::vector<VertexSet>, size_t>>(
      std::move(sets), 0);
  return SolutionStream(
      [state]() -> std::optional<VertexSet> {
        if (state->second >= state->first.size()) return std::nullopt;
        return state->first[state->second++];
      },
      std::move(stats));
}

SolutionStream SolutionStream::of_generator(Generator<VertexSet> gen,
                                            std::shared_ptr<StreamStats> stats) {
  auto g = std::make_shared<Generator<VertexSet>>(std::move(gen));
  return SolutionStream([g]() { return g->next(); }, std::move(stats));
}

std::vector<VertexSet> SolutionStream::drain() {
  std::vector<VertexSet> out;
  while (auto v = next()) out.push_back(std::move(*v));
  return out;
}

}  // namespace irrenum
