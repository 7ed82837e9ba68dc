#pragma once

#include <cstdint>
#include <optional>

#include "mck/coloring.hpp"
#include "mck/graph.hpp"

namespace mck {

struct SearchBudget {
  int max_edges = 12;
  std::uint64_t max_nodes = 200'000'000;
};

struct SearchResult {
  Mode mode = Mode::mc;
  int k = 0;
  int value = 0;
  EdgeColoring witness = EdgeColoring::monochromatic(1);
  std::uint64_t explored = 0;
  bool exact = false;
  /// Why the search stopped early, empty when exact.
  std::string budget_note;
};

/// mc_k(G): the largest color count of an MC_k-coloring. Enumerates set
/// partitions of the edges (restricted growth strings) whose blocks induce
/// connected subgraphs, pruning any prefix with blocks + unassigned edges at
/// or below the incumbent. Returns the lexicographically smallest normalized
/// optimal assignment. A search that runs past the budget returns its best
/// coloring with exact = false. Throws InputError unless G is k-edge-connected.
SearchResult exact_mc_k(const Graph& g, int k, SearchBudget budget = {});

/// umc_k(G), same search with the UMC_k feasibility test.
SearchResult exact_umc_k(const Graph& g, int k, SearchBudget budget = {});

SearchResult exact_search(const Graph& g, int k, Mode mode, SearchBudget budget = {});

/// Local improvement that never lowers the color count and never breaks
/// MC_k: splits disconnected classes into one fresh color per component, and
/// for a class with both cycles and cut edges tries moving all but one cycle
/// edge into another color that already joins the cut edge's endpoints.
/// Throws InputError when the input coloring is not an MC_k-coloring.
EdgeColoring improve_coloring(const Graph& g, const EdgeColoring& c, int k);

}  // namespace mck
