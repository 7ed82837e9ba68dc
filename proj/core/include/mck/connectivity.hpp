#pragma once

#include <climits>
#include <optional>
#include <span>
#include <vector>

#include "mck/graph.hpp"

namespace mck {

/// An edge cut: `cut_edges` are exactly the (active) edges with one endpoint in `side`.
struct CutCertificate {
  std::vector<EdgeIndex> cut_edges;
  std::vector<Vertex> side;
};

/// Unit-capacity max-flow engine counting pairwise edge-disjoint paths inside a
/// fixed set of active edges of a graph. Each undirected edge carries at most one
/// unit of flow in one direction; augmenting paths are found by BFS that scans
/// incidences in increasing edge index, so results are deterministic.
class EdgeDisjointPaths {
 public:
  explicit EdgeDisjointPaths(const Graph& g);
  EdgeDisjointPaths(const Graph& g, std::span<const EdgeIndex> active);

  /// Maximum number of edge-disjoint s-t paths, stopping early once `limit` is reached.
  int max_paths(Vertex s, Vertex t, int limit = INT_MAX);

  /// Minimum s-t cut among the active edges; its size equals max_paths(s, t).
  CutCertificate min_cut(Vertex s, Vertex t);

  /// True when v is an endpoint of some active edge.
  bool touches(Vertex v) const { return !adjacency_[static_cast<std::size_t>(v)].empty(); }

 private:
  bool augment(Vertex s, Vertex t);

  const Graph* graph_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<EdgeIndex> active_;
  std::vector<signed char> flow_;
  std::vector<EdgeIndex> parent_edge_;
  std::vector<Vertex> queue_;
};

struct LocalConnectivity {
  int value = 0;
  std::optional<CutCertificate> cut;
};

/// Maximum number of pairwise edge-disjoint u-v paths. Throws InputError if u == v.
LocalConnectivity local_edge_connectivity(const Graph& g, Vertex u, Vertex v, bool want_certificate = false);

struct ConnectivityCheck {
  bool ok = false;
  /// On failure: a cut of size < k (empty for a disconnected graph). Absent when n < 2.
  std::optional<CutCertificate> cut;
};

ConnectivityCheck is_k_edge_connected(const Graph& g, int k);

/// Same test for the spanning subgraph formed by `edges`.
ConnectivityCheck is_k_edge_connected(const Graph& g, const EdgeSet& edges, int k);

/// Global edge connectivity and a minimum cut; requires n >= 2.
struct GlobalConnectivity {
  int value = 0;
  CutCertificate cut;
};
GlobalConnectivity edge_connectivity(const Graph& g, const EdgeSet& edges);

/// Component label per vertex of the spanning subgraph formed by `edges`.
std::vector<int> component_labels(const Graph& g, const EdgeSet& edges);
bool is_connected(const Graph& g);

/// Biconnected blocks as sorted edge-index lists, ordered by smallest edge index.
/// Throws InputError for a disconnected graph.
std::vector<std::vector<EdgeIndex>> blocks(const Graph& g);

/// e(G/P): edges whose endpoints lie in different blocks of `partition`.
int shrink_cross_edges(const Graph& g, const VertexPartition& partition);

}  // namespace mck
