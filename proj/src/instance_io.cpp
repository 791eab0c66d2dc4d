#include "irrenum/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "irrenum/errors.hpp"

namespace irrenum {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text, char comment) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (comment == '#') {
      auto pos = raw.find('#');
      if (pos != std::string::npos) raw.erase(pos);
    }
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (comment == 'c' && tokens.front().front() == 'c') continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

int parse_int(const std::string& tok, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(std::string("expected ") + what + ", got '" + tok + "'", line);
  return value;
}

Graph parse_graph(const std::vector<Line>& lines) {
  const Line& head = lines.front();
  if (head.tokens.size() != 2)
    throw ParseError("header must be 'graph <n>'", head.number);
  int n = parse_int(head.tokens[1], head.number, "vertex count");
  if (n < 0) throw ParseError("negative vertex count", head.number);
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    if (ln.tokens.size() != 2)
      throw ParseError("edge line must be 'u v'", ln.number);
    int u = parse_int(ln.tokens[0], ln.number, "vertex id");
    int v = parse_int(ln.tokens[1], ln.number, "vertex id");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("vertex id out of range", ln.number);
    if (u == v) throw ParseError("self-loop", ln.number);
    auto e = std::minmax(u, v);
    if (!seen.insert(e).second) throw ParseError("duplicate edge", ln.number);
    edges.push_back(e);
  }
  return Graph(n, std::move(edges));
}

Hypergraph parse_hypergraph(const std::vector<Line>& lines) {
  const Line& head = lines.front();
  if (head.tokens.size() != 3)
    throw ParseError("header must be 'hypergraph <n> <m>'", head.number);
  int n = parse_int(head.tokens[1], head.number, "vertex count");
  int m = parse_int(head.tokens[2], head.number, "edge count");
  if (n < 0) throw ParseError("negative vertex count", head.number);
  if (m < 0) throw ParseError("negative edge count", head.number);
  if (int(lines.size()) - 1 > m)
    throw ParseError("more hyperedge lines than the declared " + std::to_string(m),
                     lines[size_t(m) + 1].number);
  if (int(lines.size()) - 1 < m)
    throw ParseError("expected " + std::to_string(m) + " hyperedge lines, got " +
                         std::to_string(lines.size() - 1),
                     lines.back().number);
  std::vector<VertexSet> sets;
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    int k = parse_int(ln.tokens[0], ln.number, "hyperedge size");
    if (k <= 0) throw ParseError("empty hyperedge", ln.number);
    if (int(ln.tokens.size()) != k + 1)
      throw ParseError("hyperedge line must be 'k v1 ... vk'", ln.number);
    std::vector<int> members;
    for (int j = 1; j <= k; ++j) {
      int v = parse_int(ln.tokens[j], ln.number, "vertex id");
      if (v < 0 || v >= n) throw ParseError("vertex id out of range", ln.number);
      members.push_back(v);
    }
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
      throw ParseError("repeated vertex in hyperedge", ln.number);
    sets.emplace_back(std::move(members));
  }
  return Hypergraph::from_sets(n, sets);
}

}  // namespace

Instance parse_instance(const std::string& text) {
  auto lines = tokenize(text, '#');
  if (lines.empty()) throw ParseError("missing header", 1);
  const std::string& kind = lines.front().tokens.front();
  if (kind == "graph") return parse_graph(lines);
  if (kind == "hypergraph") return parse_hypergraph(lines);
  throw ParseError("unknown header '" + kind + "'", lines.front().number);
}

reductions::Cnf parse_cnf(const std::string& text) {
  auto lines = tokenize(text, 'c');
  if (lines.empty()) throw ParseError("missing 'p cnf' header", 1);
  const Line& head = lines.front();
  if (head.tokens.size() != 4 || head.tokens[0] != "p" || head.tokens[1] != "cnf")
    throw ParseError("header must be 'p cnf <vars> <clauses>'", head.number);
  int vars = parse_int(head.tokens[2], head.number, "variable count");
  int m = parse_int(head.tokens[3], head.number, "clause count");
  if (vars < 0) throw ParseError("negative variable count", head.number);
  if (m < 0) throw ParseError("negative clause count", head.number);
  if (int(lines.size()) - 1 > m)
    throw ParseError("more clause lines than the declared " + std::to_string(m),
                     lines[size_t(m) + 1].number);
  if (int(lines.size()) - 1 < m)
    throw ParseError("expected " + std::to_string(m) + " clause lines, got " +
                         std::to_string(lines.size() - 1),
                     lines.back().number);
  reductions::Cnf f;
  f.variables = vars;
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    std::set<int> lits;
    for (size_t j = 0; j < ln.tokens.size(); ++j) {
      int lit = parse_int(ln.tokens[j], ln.number, "literal");
      if (lit == 0) {
        if (j + 1 != ln.tokens.size())
          throw ParseError("literals after the terminating 0", ln.number);
        break;
      }
      if (j + 1 == ln.tokens.size())
        throw ParseError("clause line must end with 0", ln.number);
      int var = lit > 0 ? lit : -lit;
      if (var > vars)
        throw ParseError("literal " + std::to_string(lit) +
                             " exceeds the declared variable count",
                         ln.number);
      lits.insert(lit);
    }
    if (ln.tokens.back() != "0")
      throw ParseError("clause line must end with 0", ln.number);
    if (lits.size() > 3)
      throw ParseError("clause has more than 3 distinct literals", ln.number);
    f.clauses.emplace_back(lits.begin(), lits.end());
  }
  return f;
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string serialize(const Hypergraph& h) {
  std::ostringstream out;
  out << "hypergraph " << h.vertex_count() << " " << h.edge_count() << "\n";
  for (const auto& e : h.edges()) {
    out << e.members.size();
    for (int v : e.members) out << " " << v;
    out << "\n";
  }
  return out.str();
}

std::string serialize(const reductions::Cnf& f) {
  std::ostringstream out;
  out << "p cnf " << f.variables << " " << f.clauses.size() << "\n";
  for (const auto& clause : f.clauses) {
    for (int lit : clause) out << lit << " ";
    out << "0\n";
  }
  return out.str();
}

}  // namespace irrenum
