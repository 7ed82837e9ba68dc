// mck: command-line front end. Every subcommand prints one JSON document on
// stdout. Exit codes: 0 ok, 1 verification or assertion failure, 2 input or
// usage error, 3 budget exceeded.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "mck/coloring.hpp"
#include "mck/connectivity.hpp"
#include "mck/constructions.hpp"
#include "mck/error.hpp"
#include "mck/generators.hpp"
#include "mck/graph_io.hpp"
#include "mck/harness.hpp"
#include "mck/kecss.hpp"
#include "mck/report.hpp"
#include "mck/search.hpp"
#include "mck/tree_packing.hpp"

using namespace mck;

namespace {

enum Exit { ok = 0, failed = 1, bad_input = 2, over_budget = 3 };

struct Options {
  std::string out;  // JSONL file to append to
  HarnessBudget budget;
  std::string graph;
  std::string coloring;
  std::string corpus;
  std::string csv;
  std::string mode = "mc";
  int k = 2;
  int jobs = 1;
  bool exact = false;
  bool minimal = false;
  bool pairs = false;
  int max_order = 12;
  // construct
  std::string kind;
  int n = 1;
  bool odd = false;
  std::string coloring_out;
  std::string graph_out;
  // enumerate
  int max_n = 5;
  int min_n = 2;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

class Emitter {
 public:
  explicit Emitter(const std::string& jsonl) {
    if (jsonl.empty()) return;
    file_.open(jsonl, std::ios::app);
    if (!file_) throw InputError("cannot open " + jsonl + " for appending");
  }
  void record(const Json& j) {
    if (file_.is_open()) file_ << j.dump() << '\n';
  }

 private:
  std::ofstream file_;
};

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

Graph load_graph(const Options& o) { return read_graph_file(o.graph); }

Mode parse_mode(const std::string& s) {
  if (s == "mc") return Mode::mc;
  if (s == "umc") return Mode::umc;
  throw InputError("mode must be mc or umc");
}

int run_verify(const Options& o, Emitter& emit) {
  const Graph g = load_graph(o);
  const ParsedColoring parsed = parse_coloring(slurp(o.coloring));
  if (parsed.renormalized)
    std::cerr << "warning: coloring ids renormalized to " << to_coloring_line(parsed.coloring) << '\n';
  const VerificationReport r = verify(g, parsed.coloring, o.k, parse_mode(o.mode), {.collect_pairs = o.pairs});
  Json j = to_json(r);
  j["colors"] = parsed.coloring.color_count();
  print(j);
  emit.record(j);
  return r.pass ? ok : failed;
}

int run_search(const Options& o, Emitter& emit, Mode mode) {
  const Graph g = load_graph(o);
  const SearchResult r = exact_search(g, o.k, mode, o.budget.search);
  Json j = to_json(r);
  j["graph6"] = to_graph6(g);
  print(j);
  emit.record(j);
  return r.exact ? ok : over_budget;
}

int run_min_kecss(const Options& o, Emitter& emit) {
  const Graph g = load_graph(o);
  const KecssResult r = o.minimal ? minimalize(g, o.k) : minimum_kecss(g, o.k, o.budget.kecss);
  Json j = to_json(r);
  j["graph6"] = to_graph6(g);
  print(j);
  emit.record(j);
  return ok;
}

int run_mader(const Options& o, Emitter& emit) {
  const Graph g = load_graph(o);
  const MaderReport r = mader_checks(g, o.k);
  const Json j = to_json(r);
  print(j);
  emit.record(j);
  return r.consistent() ? ok : failed;
}

int run_psi(const Options& o, Emitter& emit) {
  const Graph g = load_graph(o);
  Json j = to_json(psi_oracle(g, o.max_order));
  j["graph6"] = to_graph6(g);
  print(j);
  emit.record(j);
  return ok;
}

int run_pack_trees(const Options& o, Emitter& emit) {
  const Graph g = load_graph(o);
  const TreePacking p = tree_packing_number(g);
  Json j = to_json(p);
  j["valid"] = is_valid_packing(g, p);
  print(j);
  emit.record(j);
  return ok;
}

int run_construct(const Options& o, Emitter& emit) {
  Graph g;
  EdgeColoring coloring = EdgeColoring::monochromatic(1);
  Json manifest;
  int k = 0;
  if (o.kind == "walecki-odd" || o.kind == "walecki-even" || o.kind == "bipartite") {
    const DecomposedGraph d = o.kind == "walecki-odd"    ? decompose_complete_odd(o.n)
                              : o.kind == "walecki-even" ? decompose_complete_even(o.n)
                                                         : decompose_bipartite(o.n, o.odd);
    const std::string problem = check_decomposition(d.graph, d.decomposition);
    if (!problem.empty()) throw std::logic_error("construction produced an invalid decomposition: " + problem);
    g = d.graph;
    coloring = d.decomposition.as_coloring(g.size());
    manifest = to_json(d.decomposition);
    if (o.kind == "walecki-odd") k = 2 * o.n;
  } else if (o.kind == "kkn") {
    ColoredGraph c = kkn_mc_coloring(o.k, o.n);
    g = std::move(c.graph);
    coloring = std::move(c.coloring);
    k = o.k;
  } else if (o.kind == "packing") {
    if (o.graph.empty()) throw InputError("construct packing needs --graph");
    g = load_graph(o);
    coloring = packing_coloring(g, o.k);
    k = o.k;
  } else {
    throw InputError("unknown construction '" + o.kind + "'");
  }

  Json j{{"construction", o.kind}, {"graph6", to_graph6(g)}, {"n", g.order()}, {"m", g.size()},
         {"colors", coloring.color_count()}, {"coloring", coloring.assignment()}};
  if (!manifest.is_null()) j["parts"] = manifest;
  bool pass = true;
  if (k > 0) {
    const VerificationReport r = is_mc_k(g, coloring, k);
    j["verification"] = to_json(r);
    pass = r.pass;
  }
  if (!o.graph_out.empty()) write_file(o.graph_out, to_graph6(g) + "\n");
  if (!o.coloring_out.empty()) write_file(o.coloring_out, to_coloring_line(coloring) + "\n");
  print(j);
  emit.record(j);
  return pass ? ok : failed;
}

int run_conjecture_cmd(const Options& o, Emitter& emit) {
  const ConjectureSweep sweep = run_conjecture(read_corpus(o.corpus), o.k, o.budget, o.jobs);
  const Json j = to_json(sweep);
  for (const auto& r : sweep.records) emit.record(to_json(r));
  if (!o.csv.empty()) write_file(o.csv, conjecture_csv(sweep));
  print(j);
  return sweep.counterexamples == 0 ? ok : failed;
}

int run_theorems(const Options& o, Emitter& emit) {
  const TheoremReport r = check_theorems(read_corpus(o.corpus), o.k, o.budget);
  const Json j = to_json(r);
  print(j);
  emit.record(j);
  if (r.violations() > 0) return failed;
  return r.partial ? over_budget : ok;
}

int run_hamiltonicity(const Options& o, Emitter& emit) {
  const Graph g = load_graph(o);
  const HamiltonicityResult r = hamiltonicity_via_umc2(g, o.budget);
  Json j = to_json(r);
  j["graph6"] = to_graph6(g);
  print(j);
  emit.record(j);
  return r.agrees ? ok : failed;
}

int run_enumerate(const Options& o, Emitter& emit) {
  if (o.min_n < 1 || o.max_n > 7 || o.min_n > o.max_n) throw InputError("enumerate supports 1 <= min-n <= max-n <= 7");
  std::string lines;
  int count = 0;
  for (int n = o.min_n; n <= o.max_n; ++n)
    for (const Graph& g : gen::all_graphs(n)) {
      if (o.k > 0 && !is_k_edge_connected(g, o.k).ok) continue;
      lines += to_graph6(g) + "\n";
      ++count;
    }
  if (!o.corpus.empty()) write_file(o.corpus, lines);
  else std::cerr << lines;
  const Json j{{"count", count}, {"min_n", o.min_n}, {"max_n", o.max_n}, {"k", o.k}};
  print(j);
  emit.record(j);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monochromatic k-edge-connection colorings of small graphs"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--out", o.out, "Append one JSON record per result to this JSONL file");
  app.add_option("--max-edges", o.budget.search.max_edges, "Largest edge count for exact mc/umc search")
      ->capture_default_str();
  app.add_option("--max-nodes", o.budget.search.max_nodes, "Node budget for exact mc/umc search")
      ->capture_default_str();
  app.add_option("--kecss-max-edges", o.budget.kecss.max_edges, "Largest edge count for exact k-ECSS")
      ->capture_default_str();
  app.add_option("--kecss-max-nodes", o.budget.kecss.max_nodes, "Node budget for exact k-ECSS")
      ->capture_default_str();

  auto graph_opt = [&](CLI::App* sub) { sub->add_option("--graph", o.graph, "graph6 or edge-list file")->required(); };
  auto k_opt = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "Connectivity parameter")->required()->check(CLI::PositiveNumber);
  };

  auto* verify_cmd = app.add_subcommand("verify", "Check an MC_k or UMC_k coloring");
  graph_opt(verify_cmd);
  verify_cmd->add_option("--coloring", o.coloring, "Coloring file")->required();
  k_opt(verify_cmd);
  verify_cmd->add_option("--mode", o.mode, "mc or umc")->check(CLI::IsMember({"mc", "umc"}));
  verify_cmd->add_flag("--pairs", o.pairs, "Include per-pair summaries");

  auto* mc_cmd = app.add_subcommand("mc", "Exact mc_k");
  graph_opt(mc_cmd);
  k_opt(mc_cmd);
  auto* umc_cmd = app.add_subcommand("umc", "Exact umc_k");
  graph_opt(umc_cmd);
  k_opt(umc_cmd);

  auto* kecss_cmd = app.add_subcommand("min-kecss", "Minimum (or minimal) spanning k-edge-connected subgraph");
  graph_opt(kecss_cmd);
  k_opt(kecss_cmd);
  auto* exact_flag = kecss_cmd->add_flag("--exact", o.exact, "Branch and bound (default)");
  kecss_cmd->add_flag("--minimal", o.minimal, "Greedy deletion only")->excludes(exact_flag);

  auto* mader_cmd = app.add_subcommand("mader", "Minimality and Mader property checks");
  graph_opt(mader_cmd);
  k_opt(mader_cmd);

  auto* psi_cmd = app.add_subcommand("psi", "Exact psi over vertex partitions");
  graph_opt(psi_cmd);
  psi_cmd->add_option("--max-order", o.max_order, "Largest vertex count to enumerate")->capture_default_str();

  auto* pack_cmd = app.add_subcommand("pack-trees", "Maximum edge-disjoint spanning tree packing");
  graph_opt(pack_cmd);

  auto* construct_cmd = app.add_subcommand("construct", "Build a decomposition or coloring");
  construct_cmd->add_option("kind", o.kind, "walecki-odd | walecki-even | bipartite | kkn | packing")
      ->required()
      ->check(CLI::IsMember({"walecki-odd", "walecki-even", "bipartite", "kkn", "packing"}));
  construct_cmd->add_option("--n", o.n, "Size parameter");
  construct_cmd->add_option("--k", o.k, "k for kkn and packing");
  construct_cmd->add_flag("--odd", o.odd, "bipartite: K_{2n+1,2n+1} instead of K_{2n,2n}");
  construct_cmd->add_option("--graph", o.graph, "Input graph for packing");
  construct_cmd->add_option("--coloring-out", o.coloring_out, "Write the coloring file here");
  construct_cmd->add_option("--graph-out", o.graph_out, "Write the graph6 line here");

  auto* conj_cmd = app.add_subcommand("conjecture", "Sweep a corpus against the mc_k and umc_k formulas");
  conj_cmd->add_option("--corpus", o.corpus, "graph6 corpus, one graph per line")->required();
  k_opt(conj_cmd);
  conj_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  conj_cmd->add_option("--csv", o.csv, "Also write records as CSV");

  auto* thm_cmd = app.add_subcommand("theorems", "Check the proven identities and bounds over a corpus");
  thm_cmd->add_option("--corpus", o.corpus, "graph6 corpus, one graph per line")->required();
  k_opt(thm_cmd);

  auto* ham_cmd = app.add_subcommand("hamiltonicity", "Decide Hamiltonicity through umc_2");
  graph_opt(ham_cmd);

  auto* enum_cmd = app.add_subcommand("enumerate", "Write all graphs up to isomorphism as a corpus");
  enum_cmd->add_option("--min-n", o.min_n)->capture_default_str();
  enum_cmd->add_option("--max-n", o.max_n)->capture_default_str();
  enum_cmd->add_option("--k", o.k, "Keep only k-edge-connected graphs (0 keeps all)");
  enum_cmd->add_option("--corpus", o.corpus, "Output file (default: stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    std::cerr << app.help();
    return bad_input;
  }

  try {
    Emitter emit(o.out);
    if (*verify_cmd) return run_verify(o, emit);
    if (*mc_cmd) return run_search(o, emit, Mode::mc);
    if (*umc_cmd) return run_search(o, emit, Mode::umc);
    if (*kecss_cmd) return run_min_kecss(o, emit);
    if (*mader_cmd) return run_mader(o, emit);
    if (*psi_cmd) return run_psi(o, emit);
    if (*pack_cmd) return run_pack_trees(o, emit);
    if (*construct_cmd) return run_construct(o, emit);
    if (*conj_cmd) return run_conjecture_cmd(o, emit);
    if (*thm_cmd) return run_theorems(o, emit);
    if (*ham_cmd) return run_hamiltonicity(o, emit);
    if (*enum_cmd) return run_enumerate(o, emit);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return over_budget;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bad_input;
  }
  return bad_input;
}
