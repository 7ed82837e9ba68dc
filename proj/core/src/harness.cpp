#include "mck/harness.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "mck/coloring.hpp"
#include "mck/connectivity.hpp"
#include "mck/error.hpp"
#include "mck/tree_packing.hpp"

namespace mck {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::mismatch: return "mismatch";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

namespace {

template <typename F>
double timed_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

KecssResult kecss_or_minimal(const Graph& g, int k, const HarnessBudget& budget) {
  try {
    return minimum_kecss(g, k, budget.kecss);
  } catch (const BudgetExceeded&) {
    return minimalize(g, k);
  }
}

void require_harness_k(int k) {
  if (k < 2) throw InputError("the harness works with k >= 2");
}

}  // namespace

ConjectureRecord conjecture_record(const CorpusEntry& entry, int k, const HarnessBudget& budget) {
  require_harness_k(k);
  const Graph& g = entry.graph;
  ConjectureRecord r;
  r.graph6 = entry.id;
  r.n = g.order();
  r.m = g.size();
  r.k = k;

  KecssResult h;
  r.kecss_ms = timed_ms([&] { h = kecss_or_minimal(g, k, budget); });
  r.eh = h.size;
  r.eh_exact = h.exactness == Exactness::exact;
  r.h_edges = h.edges;

  SearchResult mc;
  r.mc_ms = timed_ms([&] { mc = exact_mc_k(g, k, budget.search); });
  r.mc = mc.value;
  r.mc_exact = mc.exact;
  r.mc_witness = mc.witness.assignment();

  SearchResult umc;
  r.umc_ms = timed_ms([&] { umc = exact_umc_k(g, k, budget.search); });
  r.umc = umc.value;
  r.umc_exact = umc.exact;
  r.umc_witness = umc.witness.assignment();

  r.formula_mc = r.m - r.eh + k / 2;
  r.formula_umc = r.m - r.eh + 1;
  r.mc_match = r.mc == r.formula_mc;
  r.umc_match = r.umc == r.formula_umc;
  if (!r.conclusive()) r.verdict = Verdict::inconclusive;
  else r.verdict = r.mc_match ? Verdict::match : Verdict::mismatch;
  return r;
}

ConjectureSweep run_conjecture(const std::vector<CorpusEntry>& corpus, int k, const HarnessBudget& budget,
                               int jobs) {
  require_harness_k(k);
  if (corpus.empty()) throw InputError("conjecture sweep needs a nonempty corpus");

  struct Slot {
    std::optional<ConjectureRecord> record;
    std::optional<SkippedGraph> skipped;
  };
  std::vector<Slot> slots(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      const CorpusEntry& entry = corpus[i];
      if (!is_k_edge_connected(entry.graph, k).ok) {
        slots[i].skipped = SkippedGraph{entry.id, "not " + std::to_string(k) + "-edge-connected"};
        continue;
      }
      ConjectureRecord r = conjecture_record(entry, k, budget);
      if (r.verdict == Verdict::mismatch) {
        const ConjectureRecord again = conjecture_record(entry, k, budget);
        const bool witness_ok =
            is_mc_k(entry.graph, EdgeColoring(again.mc_witness), k).pass &&
            EdgeColoring(again.mc_witness).color_count() == again.mc;
        if (again.conclusive() && again.mc == r.mc && again.eh == r.eh && witness_ok)
          r.verdict = Verdict::counterexample;
      }
      slots[i].record = std::move(r);
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(corpus.size())));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  ConjectureSweep sweep;
  sweep.k = k;
  for (auto& slot : slots) {
    if (slot.skipped) {
      sweep.skipped.push_back(std::move(*slot.skipped));
      continue;
    }
    ConjectureRecord& r = *slot.record;
    switch (r.verdict) {
      case Verdict::match: ++sweep.matches; break;
      case Verdict::mismatch: ++sweep.mismatches; break;
      case Verdict::inconclusive: ++sweep.inconclusive; break;
      case Verdict::counterexample: ++sweep.counterexamples; break;
    }
    if (r.conclusive() && !r.umc_match) ++sweep.umc_mismatches;
    sweep.records.push_back(std::move(r));
  }
  return sweep;
}

int TheoremReport::violations() const {
  int v = 0;
  for (const auto& c : checks)
    if (!c.holds) ++v;
  return v;
}

TheoremReport check_theorems(const std::vector<CorpusEntry>& corpus, int k, const HarnessBudget& budget) {
  require_harness_k(k);
  TheoremReport report;
  report.k = k;
  for (const CorpusEntry& entry : corpus) {
    const Graph& g = entry.graph;
    if (!is_k_edge_connected(g, k).ok) {
      report.skipped.push_back({entry.id, "not " + std::to_string(k) + "-edge-connected"});
      continue;
    }
    KecssResult h;
    try {
      h = minimum_kecss(g, k, budget.kecss);
    } catch (const BudgetExceeded& e) {
      report.skipped.push_back({entry.id, e.what()});
      report.partial = true;
      continue;
    }
    const SearchResult mc = exact_mc_k(g, k, budget.search);
    const SearchResult umc = exact_umc_k(g, k, budget.search);
    if (!mc.exact || !umc.exact) {
      report.skipped.push_back({entry.id, "exact search ran out of budget"});
      report.partial = true;
      continue;
    }
    const int e = g.size();
    const int n = g.order();
    auto add = [&](std::string name, bool holds, std::string detail) {
      report.checks.push_back({entry.id, std::move(name), holds, std::move(detail)});
    };
    auto num = [](int x) { return std::to_string(x); };

    add("umc_formula", umc.value == e - h.size + 1,
        "umc=" + num(umc.value) + " e-e(H)+1=" + num(e - h.size + 1));
    add("umc_le_mc", umc.value <= mc.value, "umc=" + num(umc.value) + " mc=" + num(mc.value));
    add("umc_bounds", umc.value >= e - k * (n - 1) + 1 && 2 * umc.value <= 2 * e - k * n + 2,
        "umc=" + num(umc.value) + " in [" + num(e - k * (n - 1) + 1) + ", e-kn/2+1]");

    if (k == 2) {
      add("mc2_formula", mc.value == e - h.size + 1,
          "mc=" + num(mc.value) + " e-e(H)+1=" + num(e - h.size + 1));
      const auto parts = blocks(g);
      const int t = static_cast<int>(parts.size());
      int sum = 0;
      bool block_exact = true;
      for (const auto& part : parts) {
        const Graph block = g.edge_induced_subgraph(part);
        const SearchResult b = exact_mc_k(block, 2, budget.search);
        block_exact = block_exact && b.exact;
        sum += b.value;
      }
      if (block_exact) {
        add("mc2_block_identity", mc.value == sum - t + 1,
            "mc=" + num(mc.value) + " sum(mc_2(B_i))-t+1=" + num(sum - t + 1));
        add("mc2_block_upper_bound", mc.value <= e - n - t + 2,
            "mc=" + num(mc.value) + " e-n-t+2=" + num(e - n - t + 2));
      } else {
        report.partial = true;
      }
    }

    if (mader_checks(g, k).is_minimal)
      add("minimal_upper_bound", mc.value <= k - 1, "mc=" + num(mc.value) + " k-1=" + num(k - 1));

    if (tree_packing_number(g).k() >= k)
      add("packing_lower_bound", mc.value >= e - k * (n - 2),
          "mc=" + num(mc.value) + " e-k(n-2)=" + num(e - k * (n - 2)));
  }
  return report;
}

std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  std::vector<Vertex> path{0};
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  used[0] = true;
  auto extend = [&](auto&& self) -> bool {
    const Vertex last = path.back();
    if (static_cast<int>(path.size()) == n) return g.find_edge(last, 0).has_value();
    for (const Incidence& inc : g.incident(last)) {
      if (used[static_cast<std::size_t>(inc.neighbor)]) continue;
      used[static_cast<std::size_t>(inc.neighbor)] = true;
      path.push_back(inc.neighbor);
      if (self(self)) return true;
      path.pop_back();
      used[static_cast<std::size_t>(inc.neighbor)] = false;
    }
    return false;
  };
  if (!extend(extend)) return std::nullopt;
  path.push_back(0);
  return path;
}

HamiltonicityResult hamiltonicity_via_umc2(const Graph& g, const HarnessBudget& budget) {
  if (!is_k_edge_connected(g, 2).ok) throw InputError("Hamiltonicity via umc_2 needs a 2-edge-connected graph");
  HamiltonicityResult r;
  r.min_2ecss = minimum_kecss(g, 2, budget.kecss);
  const SearchResult umc = exact_umc_k(g, 2, budget.search);
  if (!umc.exact) throw BudgetExceeded("umc_2 search: " + umc.budget_note);
  r.umc2 = umc.value;
  r.umc_witness = umc.witness.assignment();
  r.target = g.size() - g.order() + 1;
  r.hamiltonian = r.umc2 == r.target;
  if (auto cycle = find_hamiltonian_cycle(g)) {
    r.direct_hamiltonian = true;
    r.direct_cycle = std::move(*cycle);
  }
  r.agrees = r.hamiltonian == r.direct_hamiltonian;
  return r;
}

}  // namespace mck
