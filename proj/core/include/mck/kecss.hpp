#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mck/connectivity.hpp"
#include "mck/graph.hpp"

namespace mck {

enum class Exactness { exact, heuristic_minimal };

/// A spanning k-edge-connected edge subset of a reference graph.
struct KecssResult {
  std::vector<EdgeIndex> edges;  // sorted
  int size = 0;
  int k = 0;
  Exactness exactness = Exactness::heuristic_minimal;
  /// Edge connectivity of the subgraph and a cut achieving it (value >= k).
  int connectivity = 0;
  CutCertificate min_cut;
  std::uint64_t nodes = 0;
};

bool is_deletable(const Graph& g, EdgeIndex e, int k);

/// Greedy deletion, lowest edge index first, until no deletable edge remains.
KecssResult minimalize(const Graph& g, int k);

struct KecssBudget {
  int max_edges = 20;
  std::uint64_t max_nodes = 50'000'000;
};

/// Minimum spanning k-edge-connected subgraph by branch and bound. Among all
/// minimum subsets the lexicographically smallest edge-index list is returned.
/// Throws BudgetExceeded when m or the node count exceeds the budget.
KecssResult minimum_kecss(const Graph& g, int k, KecssBudget budget = {});

struct MaderReport {
  int k = 0;
  bool is_minimal = false;
  std::optional<EdgeIndex> deletable_edge;
  /// Filled only when is_minimal.
  bool edge_bound_holds = false;
  std::optional<Vertex> degree_k_vertex;
  /// edge_cuts[e] is a k-edge cut containing e.
  std::vector<CutCertificate> edge_cuts;
  std::optional<EdgeIndex> first_violation;

  /// All three properties hold (vacuously true when not minimal).
  bool consistent() const {
    return !is_minimal || (edge_bound_holds && degree_k_vertex.has_value() && !first_violation.has_value());
  }
};

MaderReport mader_checks(const Graph& g, int k);

}  // namespace mck
