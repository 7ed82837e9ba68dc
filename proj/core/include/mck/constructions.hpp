#pragma once

#include <string_view>
#include <vector>

#include "mck/coloring.hpp"
#include "mck/graph.hpp"
#include "mck/kecss.hpp"

namespace mck {

enum class PartKind { hamiltonian_cycle, perfect_matching };

std::string_view to_string(PartKind kind);

struct DecompositionPart {
  PartKind kind = PartKind::hamiltonian_cycle;
  std::vector<EdgeIndex> edges;  // sorted
};

/// Labeled edge partition of a graph.
struct Decomposition {
  std::vector<DecompositionPart> parts;

  /// Part i becomes color i.
  EdgeColoring as_coloring(int edge_count) const;
};

struct DecomposedGraph {
  Graph graph;
  Decomposition decomposition;
};

/// Empty string when every invariant holds, otherwise a description of the first violation:
/// parts partition E(G); each cycle part is one cycle through all vertices; each matching
/// part is a perfect matching.
std::string check_decomposition(const Graph& g, const Decomposition& d);

/// K_{2n+1} as n Hamiltonian cycles. Vertices 0..2n-1 sit on a circle and 2n is
/// the hub; cycle j is the hub plus the zigzag path 0, 1, -1, 2, -2, ... rotated by j.
DecomposedGraph decompose_complete_odd(int n);

/// K_{2n+2} as n Hamiltonian cycles plus a perfect matching. Circle 0..2n-1 with
/// hubs 2n and 2n+1; each rotated zigzag path is split at its middle edge and the
/// halves are joined through the two hubs. The middle edges and the hub edge form
/// the matching.
DecomposedGraph decompose_complete_even(int n);

/// K_{2n,2n} as n Hamiltonian cycles (odd = false) or K_{2n+1,2n+1} as n
/// Hamiltonian cycles and a perfect matching (odd = true). Sides a_i = i and
/// b_i = s + i; cycle j joins a_i to b_{i+d} and b_{i+d+1} (indices mod s) for
/// a per-cycle offset d, and the matching uses offset 0 in the odd case.
DecomposedGraph decompose_bipartite(int n, bool odd);

struct ColoredGraph {
  Graph graph;
  EdgeColoring coloring;
};

/// K_{k,n} (side of size k is 0..k-1, side of size n is k..k+n-1) colored with
/// k/2 colors: the first k vertices of the size-n side induce a K_{k,k} split
/// into k/2 Hamiltonian cycles, and the k edges at every further vertex are
/// paired in sorted neighbor order, pair i joining class i.
ColoredGraph kkn_mc_coloring(int k, int n);

/// Edges of `h` share color 0; every other edge gets its own color.
/// Throws InputError unless `h` is a spanning k-edge-connected subgraph.
EdgeColoring single_class_umc_coloring(const Graph& g, int k, const KecssResult& h);

}  // namespace mck
