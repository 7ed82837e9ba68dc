#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mck {

using Vertex = int;
using EdgeIndex = int;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeIndex edge;
};

/// Simple undirected graph on vertices 0..n-1. Edge indices are positions in
/// the edge sequence and never change once the graph is built.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on loops, duplicate edges or out-of-range endpoints.
  Graph(int order, std::vector<Edge> edges);

  int order() const noexcept { return order_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(static_cast<std::size_t>(e)); }

  std::span<const Incidence> incident(Vertex v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

  std::optional<EdgeIndex> find_edge(Vertex a, Vertex b) const;

  /// Same vertex and edge set with edges in lexicographic (u, v) order.
  Graph sorted() const;

  /// Spanning subgraph keeping the listed edges (in the listed order).
  Graph spanning_subgraph(std::span<const EdgeIndex> keep) const;

  /// Graph on the endpoints of `keep`, relabeled densely by increasing old label.
  Graph edge_induced_subgraph(std::span<const EdgeIndex> keep) const;

  Graph with_edge(Edge e) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Subset of the edge indices 0..m-1 of some reference graph.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int universe, bool full = false);
  EdgeSet(int universe, std::span<const EdgeIndex> members);

  int universe() const noexcept { return static_cast<int>(bits_.size()); }
  int count() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(EdgeIndex e) const { return bits_.at(static_cast<std::size_t>(e)) != 0; }
  void insert(EdgeIndex e);
  void erase(EdgeIndex e);

  /// Members in increasing order.
  std::vector<EdgeIndex> indices() const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<std::uint8_t> bits_;
  int count_ = 0;
};

/// Disjoint nonempty vertex blocks covering 0..n-1.
class VertexPartition {
 public:
  /// Throws InputError unless the blocks partition 0..order-1.
  VertexPartition(int order, std::vector<std::vector<Vertex>> blocks);

  /// Builds from a block label per vertex (labels need not be dense).
  static VertexPartition from_labels(std::span<const int> labels);

  int order() const noexcept { return static_cast<int>(block_of_.size()); }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }
  int block_of(Vertex v) const { return block_of_.at(static_cast<std::size_t>(v)); }

 private:
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<int> block_of_;
};

}  // namespace mck
