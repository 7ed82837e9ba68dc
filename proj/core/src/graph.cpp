#include "mck/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "mck/error.hpp"

namespace mck {

Graph::Graph(int order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
  if (order < 0) throw InputError("negative vertex count");
  adjacency_.assign(static_cast<std::size_t>(order), {});
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order)
      throw InputError("edge " + std::to_string(i) + " has an endpoint outside 0.." +
                       std::to_string(order - 1));
    if (e.u == e.v) throw InputError("edge " + std::to_string(i) + " is a loop");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.emplace(e.u, e.v).second)
      throw InputError("edge " + std::to_string(i) + " duplicates an earlier edge (multigraph)");
    const auto idx = static_cast<EdgeIndex>(i);
    adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, idx});
    adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, idx});
  }
}

std::optional<EdgeIndex> Graph::find_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= order_ || b < 0 || b >= order_) return std::nullopt;
  for (const Incidence& inc : incident(a))
    if (inc.neighbor == b) return inc.edge;
  return std::nullopt;
}

Graph Graph::sorted() const {
  std::vector<Edge> es = edges_;
  std::sort(es.begin(), es.end());
  return Graph(order_, std::move(es));
}

Graph Graph::spanning_subgraph(std::span<const EdgeIndex> keep) const {
  std::vector<Edge> es;
  es.reserve(keep.size());
  for (EdgeIndex e : keep) es.push_back(edge(e));
  return Graph(order_, std::move(es));
}

Graph Graph::edge_induced_subgraph(std::span<const EdgeIndex> keep) const {
  std::map<Vertex, Vertex> relabel;
  for (EdgeIndex e : keep) {
    relabel.emplace(edge(e).u, 0);
    relabel.emplace(edge(e).v, 0);
  }
  Vertex next = 0;
  for (auto& [old_label, new_label] : relabel) new_label = next++;
  std::vector<Edge> es;
  es.reserve(keep.size());
  for (EdgeIndex e : keep) es.push_back({relabel[edge(e).u], relabel[edge(e).v]});
  return Graph(next, std::move(es));
}

Graph Graph::with_edge(Edge e) const {
  std::vector<Edge> es = edges_;
  es.push_back(e);
  return Graph(order_, std::move(es));
}

EdgeSet::EdgeSet(int universe, bool full)
    : bits_(static_cast<std::size_t>(universe), full ? 1 : 0), count_(full ? universe : 0) {}

EdgeSet::EdgeSet(int universe, std::span<const EdgeIndex> members) : EdgeSet(universe) {
  for (EdgeIndex e : members) insert(e);
}

void EdgeSet::insert(EdgeIndex e) {
  auto& bit = bits_.at(static_cast<std::size_t>(e));
  if (!bit) {
    bit = 1;
    ++count_;
  }
}

void EdgeSet::erase(EdgeIndex e) {
  auto& bit = bits_.at(static_cast<std::size_t>(e));
  if (bit) {
    bit = 0;
    --count_;
  }
}

std::vector<EdgeIndex> EdgeSet::indices() const {
  std::vector<EdgeIndex> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<EdgeIndex>(i));
  return out;
}

VertexPartition::VertexPartition(int order, std::vector<std::vector<Vertex>> blocks)
    : blocks_(std::move(blocks)), block_of_(static_cast<std::size_t>(order), -1) {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw InputError("partition block " + std::to_string(b) + " is empty");
    for (Vertex v : blocks_[b]) {
      if (v < 0 || v >= order) throw InputError("partition names vertex " + std::to_string(v) +
                                                " outside the graph");
      auto& slot = block_of_[static_cast<std::size_t>(v)];
      if (slot != -1) throw InputError("vertex " + std::to_string(v) + " lies in two blocks");
      slot = static_cast<int>(b);
    }
  }
  for (std::size_t v = 0; v < block_of_.size(); ++v)
    if (block_of_[v] == -1)
      throw InputError("vertex " + std::to_string(v) + " is not covered by the partition");
}

VertexPartition VertexPartition::from_labels(std::span<const int> labels) {
  std::map<int, std::size_t> dense;
  std::vector<std::vector<Vertex>> blocks;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = dense.emplace(labels[v], blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].push_back(static_cast<Vertex>(v));
  }
  return VertexPartition(static_cast<int>(labels.size()), std::move(blocks));
}

}  // namespace mck
