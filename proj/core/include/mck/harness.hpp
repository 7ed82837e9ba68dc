#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mck/graph.hpp"
#include "mck/graph_io.hpp"
#include "mck/kecss.hpp"
#include "mck/search.hpp"

namespace mck {

struct HarnessBudget {
  KecssBudget kecss;
  SearchBudget search;
};

enum class Verdict { match, mismatch, inconclusive, counterexample };

std::string_view to_string(Verdict v);

/// One graph's exact values against the conjectured mc_k and the proven umc_k formulas.
struct ConjectureRecord {
  std::string graph6;
  int n = 0;
  int m = 0;
  int k = 0;
  int eh = 0;
  bool eh_exact = false;
  int mc = 0;
  bool mc_exact = false;
  int umc = 0;
  bool umc_exact = false;
  int formula_mc = 0;   // e - e(H) + floor(k/2)
  int formula_umc = 0;  // e - e(H) + 1
  bool mc_match = false;
  bool umc_match = false;
  Verdict verdict = Verdict::inconclusive;
  double kecss_ms = 0;
  double mc_ms = 0;
  double umc_ms = 0;
  std::vector<EdgeIndex> h_edges;
  std::vector<int> mc_witness;
  std::vector<int> umc_witness;

  bool conclusive() const { return eh_exact && mc_exact && umc_exact; }
};

struct SkippedGraph {
  std::string graph6;
  std::string reason;
};

struct ConjectureSweep {
  int k = 0;
  std::vector<ConjectureRecord> records;  // input order
  std::vector<SkippedGraph> skipped;
  int matches = 0;
  int mismatches = 0;
  int inconclusive = 0;
  int counterexamples = 0;
  int umc_mismatches = 0;
};

/// Evaluates one k-edge-connected graph (no skipping, no re-verification).
ConjectureRecord conjecture_record(const CorpusEntry& entry, int k, const HarnessBudget& budget);

/// Sweeps a corpus with `jobs` worker threads; records stay in input order.
/// Graphs that are not k-edge-connected are skipped with a note. A record whose
/// exact values disagree with the mc formula is recomputed from scratch and only
/// flagged as a counterexample when the recomputation agrees.
/// Throws InputError for an empty corpus or k < 2.
ConjectureSweep run_conjecture(const std::vector<CorpusEntry>& corpus, int k, const HarnessBudget& budget,
                               int jobs = 1);

struct TheoremCheck {
  std::string graph6;
  std::string theorem;
  bool holds = false;
  std::string detail;
};

struct TheoremReport {
  int k = 0;
  std::vector<TheoremCheck> checks;
  std::vector<SkippedGraph> skipped;
  bool partial = false;
  int violations() const;
};

/// Runs every applicable identity and bound on each k-edge-connected graph:
/// the mc_2 formula and block identity (k = 2), mc_k <= k-1 for minimally
/// k-edge-connected graphs, the umc_k formula and bounds, umc_k <= mc_k, and the
/// tree-packing lower bound when k edge-disjoint spanning trees exist.
TheoremReport check_theorems(const std::vector<CorpusEntry>& corpus, int k, const HarnessBudget& budget);

/// Backtracking search for a Hamiltonian cycle, as a closed vertex sequence starting at 0.
std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const Graph& g);

struct HamiltonicityResult {
  bool hamiltonian = false;
  int umc2 = 0;
  int target = 0;  // e - n + 1
  KecssResult min_2ecss;
  std::vector<int> umc_witness;
  bool direct_hamiltonian = false;
  std::vector<Vertex> direct_cycle;
  bool agrees = false;
};

/// Decides Hamiltonicity as umc_2(G) == e(G) - n + 1 and cross-checks against
/// the direct search. Throws InputError unless G is 2-edge-connected and
/// BudgetExceeded when an exact component runs out of budget.
HamiltonicityResult hamiltonicity_via_umc2(const Graph& g, const HarnessBudget& budget);

}  // namespace mck
