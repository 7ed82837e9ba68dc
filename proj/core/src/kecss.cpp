#include "mck/kecss.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mck/error.hpp"

namespace mck {
namespace {

void require_kec(const Graph& g, int k) {
  if (k < 1) throw InputError("k must be positive");
  if (!is_k_edge_connected(g, k).ok)
    throw InputError("graph is not " + std::to_string(k) + "-edge-connected");
}

KecssResult make_result(const Graph& g, const EdgeSet& edges, int k, Exactness exactness) {
  KecssResult r;
  r.edges = edges.indices();
  r.size = static_cast<int>(r.edges.size());
  r.k = k;
  r.exactness = exactness;
  auto global = edge_connectivity(g, edges);
  r.connectivity = global.value;
  r.min_cut = std::move(global.cut);
  return r;
}

class KecssSearch {
 public:
  KecssSearch(const Graph& g, int k, KecssBudget budget)
      : g_(g), k_(k), budget_(budget), chosen_(g.size()),
        included_degree_(static_cast<std::size_t>(g.order()), 0),
        available_degree_(static_cast<std::size_t>(g.order())) {
    for (Vertex v = 0; v < g.order(); ++v) available_degree_[static_cast<std::size_t>(v)] = g.degree(v);
  }

  /// Smallest feasible size below `upper`, or `upper` when none exists.
  int smallest_below(int upper) {
    order_.resize(static_cast<std::size_t>(g_.size()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](EdgeIndex a, EdgeIndex b) {
      const auto key = [&](EdgeIndex e) { return g_.degree(g_.edge(e).u) + g_.degree(g_.edge(e).v); };
      return key(a) < key(b);
    });
    best_ = upper;
    branch(0);
    return best_;
  }

  /// Lexicographically first feasible subset with exactly `size` edges.
  std::optional<EdgeSet> first_of_size(int size) {
    order_.resize(static_cast<std::size_t>(g_.size()));
    std::iota(order_.begin(), order_.end(), 0);
    target_ = size;
    if (lex_branch(0)) return chosen_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void tick() {
    if (++nodes_ > budget_.max_nodes) throw BudgetExceeded("minimum k-ECSS search exceeded its node budget");
  }

  int deficiency() const {
    int d = 0;
    for (int deg : included_degree_) d += std::max(0, k_ - deg);
    return d;
  }

  void include(EdgeIndex e, int delta) {
    const Edge& ed = g_.edge(e);
    included_degree_[static_cast<std::size_t>(ed.u)] += delta;
    included_degree_[static_cast<std::size_t>(ed.v)] += delta;
    if (delta > 0) chosen_.insert(e); else chosen_.erase(e);
  }

  bool can_exclude(EdgeIndex e) const {
    const Edge& ed = g_.edge(e);
    return available_degree_[static_cast<std::size_t>(ed.u)] > k_ &&
           available_degree_[static_cast<std::size_t>(ed.v)] > k_;
  }

  void exclude(EdgeIndex e, int delta) {
    const Edge& ed = g_.edge(e);
    available_degree_[static_cast<std::size_t>(ed.u)] -= delta;
    available_degree_[static_cast<std::size_t>(ed.v)] -= delta;
  }

  void branch(std::size_t pos) {
    tick();
    const int def = deficiency();
    if (chosen_.count() + (def + 1) / 2 >= best_) return;
    if (def == 0 && is_k_edge_connected(g_, chosen_, k_).ok) {
      best_ = chosen_.count();
      return;
    }
    if (pos == order_.size()) return;
    const EdgeIndex e = order_[pos];
    include(e, 1);
    branch(pos + 1);
    include(e, -1);
    if (can_exclude(e)) {
      exclude(e, 1);
      branch(pos + 1);
      exclude(e, -1);
    }
  }

  bool lex_branch(std::size_t pos) {
    tick();
    const int remaining = target_ - chosen_.count();
    if (remaining == 0) return deficiency() == 0 && is_k_edge_connected(g_, chosen_, k_).ok;
    if (static_cast<int>(order_.size() - pos) < remaining) return false;
    if ((deficiency() + 1) / 2 > remaining) return false;
    const EdgeIndex e = order_[pos];
    include(e, 1);
    if (lex_branch(pos + 1)) return true;
    include(e, -1);
    if (can_exclude(e)) {
      exclude(e, 1);
      const bool found = lex_branch(pos + 1);
      exclude(e, -1);
      return found;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  KecssBudget budget_;
  EdgeSet chosen_;
  std::vector<int> included_degree_;
  std::vector<int> available_degree_;
  std::vector<EdgeIndex> order_;
  int best_ = 0;
  int target_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

bool is_deletable(const Graph& g, EdgeIndex e, int k) {
  require_kec(g, k);
  if (e < 0 || e >= g.size()) throw InputError("edge index out of range");
  EdgeSet rest(g.size(), true);
  rest.erase(e);
  return is_k_edge_connected(g, rest, k).ok;
}

KecssResult minimalize(const Graph& g, int k) {
  require_kec(g, k);
  // Deleting edges never makes an undeletable edge deletable, so one ascending pass suffices.
  EdgeSet kept(g.size(), true);
  for (EdgeIndex e = 0; e < g.size(); ++e) {
    kept.erase(e);
    if (!is_k_edge_connected(g, kept, k).ok) kept.insert(e);
  }
  return make_result(g, kept, k, Exactness::heuristic_minimal);
}

KecssResult minimum_kecss(const Graph& g, int k, KecssBudget budget) {
  require_kec(g, k);
  if (g.size() > budget.max_edges)
    throw BudgetExceeded("graph has " + std::to_string(g.size()) + " edges; exact k-ECSS budget is " +
                         std::to_string(budget.max_edges));
  const KecssResult seed = minimalize(g, k);
  KecssSearch improve(g, k, budget);
  const int best = improve.smallest_below(seed.size);

  KecssBudget rest = budget;
  rest.max_nodes -= std::min(rest.max_nodes, improve.nodes());
  KecssSearch tie_break(g, k, rest);
  const auto chosen = tie_break.first_of_size(best);
  if (!chosen) throw std::logic_error("minimum k-ECSS: no subset of the optimal size on the tie-break pass");
  KecssResult r = make_result(g, *chosen, k, Exactness::exact);
  r.nodes = improve.nodes() + tie_break.nodes();
  return r;
}

MaderReport mader_checks(const Graph& g, int k) {
  require_kec(g, k);
  MaderReport report;
  report.k = k;
  for (EdgeIndex e = 0; e < g.size(); ++e) {
    if (is_deletable(g, e, k)) {
      report.deletable_edge = e;
      return report;
    }
  }
  report.is_minimal = true;
  report.edge_bound_holds = g.size() <= k * (g.order() - 1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == k) {
      report.degree_k_vertex = v;
      break;
    }
  }
  // The min u-v cut of G - uv, together with uv, is a cut of G through uv.
  for (EdgeIndex e = 0; e < g.size(); ++e) {
    std::vector<EdgeIndex> others;
    for (EdgeIndex f = 0; f < g.size(); ++f)
      if (f != e) others.push_back(f);
    EdgeDisjointPaths paths(g, others);
    CutCertificate cut = paths.min_cut(g.edge(e).u, g.edge(e).v);
    cut.cut_edges.push_back(e);
    std::sort(cut.cut_edges.begin(), cut.cut_edges.end());
    if (static_cast<int>(cut.cut_edges.size()) != k && !report.first_violation) report.first_violation = e;
    report.edge_cuts.push_back(std::move(cut));
  }
  return report;
}

}  // namespace mck
