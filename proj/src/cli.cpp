#include "irrenum/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "irrenum/classes.hpp"
#include "irrenum/core.hpp"
#include "irrenum/delay.hpp"
#include "irrenum/errors.hpp"
#include "irrenum/instance_io.hpp"
#include "irrenum/mirr.hpp"
#include "irrenum/mred.hpp"
#include "irrenum/oracle.hpp"
#include "irrenum/reductions.hpp"

namespace irrenum {
namespace cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

VertexSet parse_id_list(const std::string& text, const char* what) {
  std::vector<int> ids;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw InputError(std::string(what) + ": bad vertex id '" + tok + "'");
    ids.push_back(v);
  }
  return VertexSet(std::move(ids));
}

struct EnumerateArgs {
  std::string file;
  std::string problem = "mirr";
  std::string strategy = "auto";
  bool canonical = false;
  bool measure = false;
  bool force = false;
  bool bounded_space = false;
  int cap = 20;
  std::string reds;
  std::string blues;
};

mirr::Strategy mirr_strategy(const std::string& s) {
  if (s == "auto") return mirr::Strategy::automatic;
  if (s == "strongly-orderable") return mirr::Strategy::strongly_orderable;
  if (s == "split") return mirr::Strategy::split;
  if (s == "brute") return mirr::Strategy::brute;
  throw InputError("strategy '" + s + "' does not apply to mirr");
}

mred::Strategy mred_strategy(const std::string& s) {
  if (s == "auto") return mred::Strategy::automatic;
  if (s == "cycle-free") return mred::Strategy::cycle_free;
  if (s == "brute") return mred::Strategy::brute;
  throw InputError("strategy '" + s + "' does not apply to mred");
}

SolutionStream make_stream(const Instance& inst, const EnumerateArgs& a,
                           bool oracle_side) {
  OracleConfig cfg;
  cfg.max_vertices = a.cap;
  if (a.problem == "redblue") {
    const Graph* g = std::get_if<Graph>(&inst);
    if (!g) throw InputError("redblue expects a graph instance");
    if (a.reds.empty() && a.blues.empty())
      throw InputError("redblue needs --reds and --blues");
    VertexSet reds = parse_id_list(a.reds, "--reds");
    VertexSet blues = parse_id_list(a.blues, "--blues");
    if (oracle_side || a.strategy == "brute")
      return brute_redblue(*g, reds, blues, cfg);
    if (a.strategy != "auto")
      throw InputError("strategy '" + a.strategy + "' does not apply to redblue");
    return mred::enum_minimal_redblue(mred::RedBlueInstance(*g, reds, blues));
  }
  if (a.problem == "mirr") {
    if (const Graph* g = std::get_if<Graph>(&inst)) {
      if (oracle_side) return brute_enum(*g, Problem::maxirr, cfg);
      mirr::Options o;
      o.strategy = mirr_strategy(a.strategy);
      o.force = a.force;
      o.oracle = cfg;
      return mirr::enum_maxirr(*g, o);
    }
    if (!oracle_side && a.strategy != "auto" && a.strategy != "brute")
      throw InputError("strategy '" + a.strategy + "' needs a graph instance");
    return brute_enum(std::get<Hypergraph>(inst), Problem::maxirr, cfg);
  }
  if (a.problem == "mred") {
    if (const Graph* g = std::get_if<Graph>(&inst)) {
      if (oracle_side) return brute_enum(*g, Problem::minred, cfg);
      mred::Options o;
      o.strategy = mred_strategy(a.strategy);
      o.force = a.force;
      o.bounded_space = a.bounded_space;
      o.oracle = cfg;
      return mred::enum_minred(*g, o);
    }
    if (!oracle_side && a.strategy != "auto" && a.strategy != "brute")
      throw InputError("strategy '" + a.strategy + "' needs a graph instance");
    return brute_enum(std::get<Hypergraph>(inst), Problem::minred, cfg);
  }
  // mds
  const Graph* g = std::get_if<Graph>(&inst);
  if (!g) throw InputError("mds expects a graph instance");
  if (oracle_side || a.strategy == "brute")
    return brute_enum(*g, Problem::mds, cfg);
  if (a.strategy != "auto")
    throw InputError("strategy '" + a.strategy + "' does not apply to mds");
  return mred::enum_minimal_transversals(closed_neighborhood_hypergraph(*g));
}

int do_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  Instance inst = parse_instance(read_file(a.file));
  SolutionStream s = make_stream(inst, a, false);
  std::vector<VertexSet> buffered;
  auto emit = [&](const VertexSet& v) {
    if (a.canonical)
      buffered.push_back(v);
    else
      out << v.to_string() << "\n";
  };
  if (a.measure) {
    DelayReport r = delay_report(s, emit);
    err << to_string(r);
  } else {
    while (auto v = s.next()) emit(*v);
  }
  if (a.canonical) {
    std::sort(buffered.begin(), buffered.end());
    for (const auto& v : buffered) out << v.to_string() << "\n";
  }
  return 0;
}

void print_witnesses(std::ostream& out, const char* tag,
                     const std::vector<VertexSet>& sets) {
  const size_t limit = 20;
  for (size_t i = 0; i < sets.size() && i < limit; ++i)
    out << tag << " {" << sets[i].to_string() << "}\n";
  if (sets.size() > limit)
    out << tag << " ... " << (sets.size() - limit) << " more\n";
}

int do_compare(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  Instance inst = parse_instance(read_file(a.file));
  SolutionStream algorithm = make_stream(inst, a, false);
  SolutionStream oracle = make_stream(inst, a, true);
  CompareResult r = compare_streams(algorithm, oracle);
  out << "algorithm " << r.a_count << " solutions\n";
  out << "oracle " << r.b_count << " solutions\n";
  print_witnesses(out, "only-algorithm", r.only_a);
  print_witnesses(out, "only-oracle", r.only_b);
  for (const auto& d : algorithm.stats().diagnostics) err << "note " << d << "\n";
  out << (r.equal ? "equal" : "different") << "\n";
  return r.equal ? 0 : 1;
}

GenKind parse_kind(const std::string& s) {
  if (s == "random") return GenKind::random;
  if (s == "bipartite") return GenKind::bipartite;
  if (s == "cobipartite") return GenKind::cobipartite;
  if (s == "split") return GenKind::split;
  if (s == "strongly-orderable") return GenKind::strongly_orderable;
  if (s == "small-cycle-free") return GenKind::small_cycle_free;
  throw InputError("unknown generator kind '" + s + "'");
}

reductions::Kind parse_reduction(const std::string& s) {
  if (s == "mirr-cobip") return reductions::Kind::mirr_cobip;
  if (s == "mred-cobip") return reductions::Kind::mred_cobip;
  if (s == "mred-split") return reductions::Kind::mred_split;
  if (s == "trace-children") return reductions::Kind::trace_children;
  if (s == "sat-mred") return reductions::Kind::sat_mred;
  if (s == "unbounded-red") return reductions::Kind::unbounded_red;
  throw InputError("unknown reduction '" + s + "'");
}

int do_check(const std::string& reduction, const std::string& file, int n,
             int cap, std::ostream& out) {
  OracleConfig cfg;
  cfg.max_vertices = cap;
  reductions::Kind kind = parse_reduction(reduction);
  reductions::EqualityReport rep;
  if (kind == reductions::Kind::unbounded_red) {
    if (n <= 0) throw InputError("unbounded-red needs --n");
    rep = reductions::check_equality(kind, n, cfg);
  } else if (kind == reductions::Kind::sat_mred) {
    if (file.empty()) throw InputError("check needs a CNF file");
    rep = reductions::check_equality(kind, parse_cnf(read_file(file)), cfg);
  } else {
    if (file.empty()) throw InputError("check needs an instance file");
    Instance inst = parse_instance(read_file(file));
    rep = std::visit(
        [&](const auto& x) { return reductions::check_equality(kind, x, cfg); },
        inst);
  }
  out << "reduction " << reduction << "\n";
  out << "lhs " << rep.lhs.size() << " rhs " << rep.rhs.size() << "\n";
  if (kind == reductions::Kind::sat_mred && rep.lhs.empty())
    out << "no qualifying R\n";
  for (const auto& note : rep.notes) out << "note " << note << "\n";
  print_witnesses(out, "lhs-only", rep.lhs_only);
  print_witnesses(out, "rhs-only", rep.rhs_only);
  out << (rep.holds ? "holds" : "FAILS") << "\n";
  return rep.holds ? 0 : 1;
}

void print_side_pair(std::ostream& out, const char* name,
                     const std::optional<std::pair<VertexSet, VertexSet>>& p,
                     const char* left, const char* right) {
  out << name << " " << (p ? "yes" : "no");
  if (p)
    out << " (" << left << " {" << p->first.to_string() << "} " << right << " {"
        << p->second.to_string() << "})";
  out << "\n";
}

int do_classify(const std::string& file, std::ostream& out) {
  Instance inst = parse_instance(read_file(file));
  if (const Hypergraph* h = std::get_if<Hypergraph>(&inst)) {
    out << "hypergraph " << h->vertex_count() << " vertices "
        << h->edge_count() << " edges dimension " << h->dimension() << "\n";
    return 0;
  }
  const Graph& g = std::get<Graph>(inst);
  out << "graph " << g.vertex_count() << " vertices " << g.edge_count()
      << " edges\n";
  ClassReport c = classify(g);
  print_side_pair(out, "bipartite", c.bipartition, "sides", "and");
  print_side_pair(out, "cobipartite", c.cobipartition, "cliques", "and");
  print_side_pair(out, "split", c.split_partition, "clique", "independent");
  out << "strongly-orderable " << (c.qseo ? "yes" : "no");
  if (c.qseo) {
    out << " (order";
    for (int v : *c.qseo) out << " " << v;
    out << ")";
  }
  out << "\n";
  for (int k : {3, 5, 6, 8})
    out << "induced-c" << k << " " << (c.has_induced(k) ? "yes" : "no") << "\n";
  out << "no-c3-c5-c6 " << (c.c3_c5_c6_free() ? "yes" : "no") << "\n";
  return 0;
}

}  // namespace

CompareResult compare_streams(SolutionStream& a, SolutionStream& b) {
  CompareResult r;
  std::vector<VertexSet> av = a.drain();
  std::vector<VertexSet> bv = b.drain();
  r.a_count = av.size();
  r.b_count = bv.size();
  std::sort(av.begin(), av.end());
  av.erase(std::unique(av.begin(), av.end()), av.end());
  std::sort(bv.begin(), bv.end());
  bv.erase(std::unique(bv.begin(), bv.end()), bv.end());
  std::set_difference(av.begin(), av.end(), bv.begin(), bv.end(),
                      std::back_inserter(r.only_a));
  std::set_difference(bv.begin(), bv.end(), av.begin(), av.end(),
                      std::back_inserter(r.only_b));
  r.equal = r.only_a.empty() && r.only_b.empty();
  return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Enumerates maximal irredundant and minimal redundant sets"};
  app.require_subcommand(1);

  EnumerateArgs ea;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", ea.file, "instance file")->required();
    sub->add_option("--problem", ea.problem, "mirr | mred | mds | redblue")
        ->check(CLI::IsMember({"mirr", "mred", "mds", "redblue"}));
    sub->add_option("--strategy", ea.strategy,
                    "auto | strongly-orderable | split | cycle-free | brute")
        ->check(CLI::IsMember(
            {"auto", "strongly-orderable", "split", "cycle-free", "brute"}));
    sub->add_flag("--force", ea.force,
                  "run a class-gated strategy off its class (verified output, "
                  "completeness unchecked)");
    sub->add_flag("--bounded-space", ea.bounded_space,
                  "suppress mred duplicates by recomputation instead of a seen-set");
    sub->add_option("--cap", ea.cap, "oracle vertex cap");
    sub->add_option("--reds", ea.reds, "redblue: comma-separated red vertices");
    sub->add_option("--blues", ea.blues, "redblue: comma-separated blue vertices");
  };

  CLI::App* en = app.add_subcommand("enumerate", "stream all solutions");
  add_common(en);
  en->add_flag("--canonical", ea.canonical, "buffer and sort the output lines");
  en->add_flag("--measure-delay", ea.measure, "print a delay report to stderr");

  CLI::App* cm = app.add_subcommand("compare", "algorithm vs oracle set equality");
  add_common(cm);

  CLI::App* gn = app.add_subcommand("gen", "generate a random instance");
  std::string kind = "random";
  int gen_n = 0;
  double density = 0.5;
  uint64_t seed = 0;
  std::string outfile;
  gn->add_option("--kind", kind,
                 "random | bipartite | cobipartite | split | "
                 "strongly-orderable | small-cycle-free")
      ->check(CLI::IsMember({"random", "bipartite", "cobipartite", "split",
                             "strongly-orderable", "small-cycle-free"}));
  gn->add_option("--n", gen_n, "vertex count")->required();
  gn->add_option("--density", density, "edge probability in [0,1]");
  gn->add_option("--seed", seed, "unsigned 64-bit seed");
  gn->add_option("-o,--output", outfile, "write to file instead of stdout");

  CLI::App* ck = app.add_subcommand("check", "verify a construction's set identity");
  std::string reduction;
  std::string ck_file;
  int ck_n = 0;
  int ck_cap = 20;
  ck->add_option("--reduction", reduction,
                 "mirr-cobip | mred-cobip | mred-split | trace-children | "
                 "sat-mred | unbounded-red")
      ->required()
      ->check(CLI::IsMember({"mirr-cobip", "mred-cobip", "mred-split",
                             "trace-children", "sat-mred", "unbounded-red"}));
  ck->add_option("file", ck_file, "instance or CNF file");
  ck->add_option("--n", ck_n, "size for unbounded-red");
  ck->add_option("--cap", ck_cap, "oracle vertex cap");

  CLI::App* cl = app.add_subcommand("classify", "report structural classes");
  std::string cl_file;
  cl->add_option("file", cl_file, "instance file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream sink;
    int code = app.exit(e, out, sink);
    if (code == 0) return 0;
    err << sink.str();
    if (sink.str().empty()) err << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(en)) return do_enumerate(ea, out, err);
    if (app.got_subcommand(cm)) return do_compare(ea, out, err);
    if (app.got_subcommand(gn)) {
      Graph g = generate(parse_kind(kind), gen_n, density, seed);
      std::string text = serialize(g);
      if (outfile.empty()) {
        out << text;
      } else {
        std::ofstream f(outfile, std::ios::binary);
        if (!f) throw InputError("cannot write '" + outfile + "'");
        f << text;
      }
      return 0;
    }
    if (app.got_subcommand(ck)) return do_check(reduction, ck_file, ck_n, ck_cap, out);
    return do_classify(cl_file, out);
  } catch (const CapError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ClassError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cli
}  // namespace irrenum
