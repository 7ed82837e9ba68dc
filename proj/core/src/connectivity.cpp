#include "mck/connectivity.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mck/error.hpp"

namespace mck {

EdgeDisjointPaths::EdgeDisjointPaths(const Graph& g) : graph_(&g) {
  active_.resize(static_cast<std::size_t>(g.size()));
  std::iota(active_.begin(), active_.end(), 0);
  adjacency_.resize(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto inc = g.incident(v);
    adjacency_[static_cast<std::size_t>(v)].assign(inc.begin(), inc.end());
  }
  flow_.assign(static_cast<std::size_t>(g.size()), 0);
}

EdgeDisjointPaths::EdgeDisjointPaths(const Graph& g, std::span<const EdgeIndex> active)
    : graph_(&g), active_(active.begin(), active.end()) {
  std::sort(active_.begin(), active_.end());
  adjacency_.resize(static_cast<std::size_t>(g.order()));
  for (EdgeIndex e : active_) {
    const Edge& ed = g.edge(e);
    adjacency_[static_cast<std::size_t>(ed.u)].push_back({ed.v, e});
    adjacency_[static_cast<std::size_t>(ed.v)].push_back({ed.u, e});
  }
  flow_.assign(static_cast<std::size_t>(g.size()), 0);
}

bool EdgeDisjointPaths::augment(Vertex s, Vertex t) {
  const auto n = adjacency_.size();
  parent_edge_.assign(n, -2);
  parent_edge_[static_cast<std::size_t>(s)] = -1;
  queue_.clear();
  queue_.push_back(s);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const Vertex x = queue_[head];
    for (const Incidence& inc : adjacency_[static_cast<std::size_t>(x)]) {
      const Vertex y = inc.neighbor;
      if (parent_edge_[static_cast<std::size_t>(y)] != -2) continue;
      const signed char dir = graph_->edge(inc.edge).u == x ? 1 : -1;
      if (flow_[static_cast<std::size_t>(inc.edge)] == dir) continue;
      parent_edge_[static_cast<std::size_t>(y)] = inc.edge;
      if (y == t) {
        for (Vertex w = t; w != s;) {
          const EdgeIndex e = parent_edge_[static_cast<std::size_t>(w)];
          const Edge& ed = graph_->edge(e);
          const Vertex prev = ed.other(w);
          const signed char d = ed.u == prev ? 1 : -1;
          flow_[static_cast<std::size_t>(e)] = static_cast<signed char>(flow_[static_cast<std::size_t>(e)] + d);
          w = prev;
        }
        return true;
      }
      queue_.push_back(y);
    }
  }
  return false;
}

int EdgeDisjointPaths::max_paths(Vertex s, Vertex t, int limit) {
  if (s == t) throw InputError("edge-disjoint paths need distinct endpoints");
  std::fill(flow_.begin(), flow_.end(), 0);
  const auto ds = adjacency_[static_cast<std::size_t>(s)].size();
  const auto dt = adjacency_[static_cast<std::size_t>(t)].size();
  if (ds == 0 || dt == 0) {
    // One failed search still records the source side for min_cut.
    augment(s, t);
    return 0;
  }
  int paths = 0;
  while (paths < limit && augment(s, t)) ++paths;
  return paths;
}

CutCertificate EdgeDisjointPaths::min_cut(Vertex s, Vertex t) {
  // A full run ends with a failed BFS whose visited set is the source side.
  max_paths(s, t);
  CutCertificate cut;
  for (Vertex v = 0; v < static_cast<Vertex>(adjacency_.size()); ++v)
    if (parent_edge_[static_cast<std::size_t>(v)] != -2) cut.side.push_back(v);
  for (EdgeIndex e : active_) {
    const Edge& ed = graph_->edge(e);
    const bool in_u = parent_edge_[static_cast<std::size_t>(ed.u)] != -2;
    const bool in_v = parent_edge_[static_cast<std::size_t>(ed.v)] != -2;
    if (in_u != in_v) cut.cut_edges.push_back(e);
  }
  return cut;
}

LocalConnectivity local_edge_connectivity(const Graph& g, Vertex u, Vertex v, bool want_certificate) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw InputError("vertex out of range");
  if (u == v) throw InputError("local edge connectivity needs u != v");
  EdgeDisjointPaths paths(g);
  LocalConnectivity out;
  if (want_certificate) {
    out.cut = paths.min_cut(u, v);
    out.value = static_cast<int>(out.cut->cut_edges.size());
  } else {
    out.value = paths.max_paths(u, v);
  }
  return out;
}

std::vector<int> component_labels(const Graph& g, const EdgeSet& edges) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (label[static_cast<std::size_t>(root)] != -1) continue;
    label[static_cast<std::size_t>(root)] = next;
    stack.assign(1, root);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.incident(x)) {
        if (!edges.contains(inc.edge) || label[static_cast<std::size_t>(inc.neighbor)] != -1) continue;
        label[static_cast<std::size_t>(inc.neighbor)] = next;
        stack.push_back(inc.neighbor);
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  const auto labels = component_labels(g, EdgeSet(g.size(), true));
  return std::all_of(labels.begin(), labels.end(), [](int c) { return c == 0; });
}

ConnectivityCheck is_k_edge_connected(const Graph& g, const EdgeSet& edges, int k) {
  if (k < 1) throw InputError("k must be positive");
  if (edges.universe() != g.size()) throw InputError("edge subset does not match the graph");
  ConnectivityCheck out;
  if (g.order() < 2) return out;

  const auto labels = component_labels(g, edges);
  if (std::any_of(labels.begin(), labels.end(), [](int c) { return c != 0; })) {
    CutCertificate cut;
    for (Vertex v = 0; v < g.order(); ++v)
      if (labels[static_cast<std::size_t>(v)] == 0) cut.side.push_back(v);
    out.cut = std::move(cut);
    return out;
  }

  const auto active = edges.indices();
  EdgeDisjointPaths paths(g, active);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (paths.max_paths(0, v, k) < k) {
      out.cut = paths.min_cut(0, v);
      return out;
    }
  }
  out.ok = true;
  return out;
}

ConnectivityCheck is_k_edge_connected(const Graph& g, int k) {
  return is_k_edge_connected(g, EdgeSet(g.size(), true), k);
}

GlobalConnectivity edge_connectivity(const Graph& g, const EdgeSet& edges) {
  if (g.order() < 2) throw InputError("edge connectivity needs at least two vertices");
  const auto active = edges.indices();
  EdgeDisjointPaths paths(g, active);
  GlobalConnectivity best;
  best.value = INT_MAX;
  for (Vertex v = 1; v < g.order(); ++v) {
    const int value = paths.max_paths(0, v, best.value);
    if (value < best.value) {
      best.cut = paths.min_cut(0, v);
      best.value = value;
    }
  }
  return best;
}

namespace {

class BlockFinder {
 public:
  explicit BlockFinder(const Graph& g)
      : g_(g), disc_(static_cast<std::size_t>(g.order()), -1), low_(disc_.size(), 0) {}

  std::vector<std::vector<EdgeIndex>> run() {
    for (Vertex r = 0; r < g_.order(); ++r)
      if (disc_[static_cast<std::size_t>(r)] == -1) visit(r, -1);
    for (auto& b : blocks_) std::sort(b.begin(), b.end());
    std::sort(blocks_.begin(), blocks_.end());
    return std::move(blocks_);
  }

 private:
  void visit(Vertex x, EdgeIndex via) {
    disc_[static_cast<std::size_t>(x)] = low_[static_cast<std::size_t>(x)] = timer_++;
    for (const Incidence& inc : g_.incident(x)) {
      if (inc.edge == via) continue;
      const auto y = static_cast<std::size_t>(inc.neighbor);
      if (disc_[y] == -1) {
        stack_.push_back(inc.edge);
        visit(inc.neighbor, inc.edge);
        low_[static_cast<std::size_t>(x)] = std::min(low_[static_cast<std::size_t>(x)], low_[y]);
        if (low_[y] >= disc_[static_cast<std::size_t>(x)]) {
          std::vector<EdgeIndex> block;
          EdgeIndex e = -1;
          do {
            e = stack_.back();
            stack_.pop_back();
            block.push_back(e);
          } while (e != inc.edge);
          blocks_.push_back(std::move(block));
        }
      } else if (disc_[y] < disc_[static_cast<std::size_t>(x)]) {
        stack_.push_back(inc.edge);
        low_[static_cast<std::size_t>(x)] = std::min(low_[static_cast<std::size_t>(x)], disc_[y]);
      }
    }
  }

  const Graph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<EdgeIndex> stack_;
  std::vector<std::vector<EdgeIndex>> blocks_;
  int timer_ = 0;
};

}  // namespace

std::vector<std::vector<EdgeIndex>> blocks(const Graph& g) {
  if (!is_connected(g)) throw InputError("block decomposition needs a connected graph");
  return BlockFinder(g).run();
}

int shrink_cross_edges(const Graph& g, const VertexPartition& partition) {
  if (partition.order() != g.order()) throw InputError("partition does not cover the graph's vertices");
  int cross = 0;
  for (const Edge& e : g.edges())
    if (partition.block_of(e.u) != partition.block_of(e.v)) ++cross;
  return cross;
}

}  // namespace mck
