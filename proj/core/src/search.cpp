#include "mck/search.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "mck/connectivity.hpp"
#include "mck/error.hpp"
#include "mck/kecss.hpp"

namespace mck {
namespace {

struct NodeLimit {};

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) { reset(); }
  void reset() { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

/// Length of a shortest cycle, or the order plus one for a forest.
int girth(const Graph& g) {
  const int n = g.order();
  int best = n + 1;
  for (Vertex s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<EdgeIndex> via(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (const Incidence& inc : g.incident(x)) {
        if (inc.edge == via[static_cast<std::size_t>(x)]) continue;
        const auto y = static_cast<std::size_t>(inc.neighbor);
        if (dist[y] < 0) {
          dist[y] = dist[static_cast<std::size_t>(x)] + 1;
          via[y] = inc.edge;
          queue.push_back(inc.neighbor);
        } else {
          best = std::min(best, dist[static_cast<std::size_t>(x)] + dist[y] + 1);
        }
      }
    }
  }
  return best;
}

/// Depth-first walk over restricted growth strings of the edge indices.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, int k, Mode mode, std::uint64_t max_nodes)
      : g_(g), m_(g.size()), checker_(g, k, mode), max_nodes_(max_nodes),
        assignment_(static_cast<std::size_t>(g.size()), 0), block_size_(static_cast<std::size_t>(g.size()), 0),
        dsu_(g.order()) {
    // In an optimal UMC_k-coloring a class of two or more edges must give some
    // pair k paths by itself (else splitting it into single edges adds colors),
    // so it carries at least max(2k - 1, girth) edges.
    if (mode == Mode::umc && k >= 2) min_class_ = std::max(2 * k - 1, girth(g));
  }

  /// Looks for any feasible partition with more than `floor` blocks; returns
  /// the best value found (or `floor`) and leaves the witness in best().
  int improve_on(int floor) {
    best_value_ = floor;
    mode_ = Pass::improve;
    descend(0, 0);
    return best_value_;
  }

  /// Lexicographically first feasible partition with exactly `value` blocks.
  bool first_with(int value) {
    best_value_ = value;
    mode_ = Pass::exact_count;
    found_ = false;
    descend(0, 0);
    return found_;
  }

  const std::vector<int>& best() const { return best_assignment_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  enum class Pass { improve, exact_count };

  int shortfall(int size) const { return size >= 2 ? std::max(0, min_class_ - size) : 0; }

  void descend(int pos, int blocks) {
    if (++nodes_ > max_nodes_) throw NodeLimit{};
    const int reachable = blocks + (m_ - pos) - shortfall_;
    if (reachable < blocks) return;
    if (mode_ == Pass::improve ? reachable <= best_value_ : (reachable < best_value_ || blocks > best_value_))
      return;
    if (pos == m_) {
      if (!blocks_connected(blocks) || !checker_.passes(assignment_, blocks)) return;
      best_assignment_ = assignment_;
      if (mode_ == Pass::improve) best_value_ = blocks;
      else found_ = true;
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      assignment_[static_cast<std::size_t>(pos)] = b;
      int& size = block_size_[static_cast<std::size_t>(b)];
      const int before = shortfall(size);
      ++size;
      shortfall_ += shortfall(size) - before;
      descend(pos + 1, std::max(blocks, b + 1));
      shortfall_ -= shortfall(size) - before;
      --size;
      if (found_) return;
    }
  }

  bool blocks_connected(int blocks) {
    // A block is connected iff its edges merge its endpoints into a single set:
    // every block of e edges on v vertices needs exactly v - 1 successful unions.
    std::vector<int> unions(static_cast<std::size_t>(blocks), 0);
    std::vector<int> vertices(static_cast<std::size_t>(blocks), 0);
    touched_.assign(static_cast<std::size_t>(blocks * g_.order()), 0);
    for (EdgeIndex e = 0; e < m_; ++e) {
      const int b = assignment_[static_cast<std::size_t>(e)];
      const Edge& ed = g_.edge(e);
      for (Vertex x : {ed.u, ed.v}) {
        auto& t = touched_[static_cast<std::size_t>(b * g_.order() + x)];
        if (!t) {
          t = 1;
          ++vertices[static_cast<std::size_t>(b)];
        }
      }
    }
    // Vertices are shared between blocks, so each block gets its own pass.
    for (int b = 0; b < blocks; ++b) {
      dsu_.reset();
      for (EdgeIndex e = 0; e < m_; ++e)
        if (assignment_[static_cast<std::size_t>(e)] == b && dsu_.unite(g_.edge(e).u, g_.edge(e).v))
          ++unions[static_cast<std::size_t>(b)];
      if (unions[static_cast<std::size_t>(b)] != vertices[static_cast<std::size_t>(b)] - 1) return false;
    }
    return true;
  }

  const Graph& g_;
  int m_;
  ColoringChecker checker_;
  std::uint64_t max_nodes_;
  std::vector<int> assignment_;
  std::vector<int> best_assignment_;
  std::vector<int> block_size_;
  std::vector<std::uint8_t> touched_;
  DisjointSets dsu_;
  Pass mode_ = Pass::improve;
  int best_value_ = 0;
  int min_class_ = 0;
  int shortfall_ = 0;
  bool found_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SearchResult exact_search(const Graph& g, int k, Mode mode, SearchBudget budget) {
  if (k < 1) throw InputError("k must be positive");
  if (!is_k_edge_connected(g, k).ok)
    throw InputError("graph is not " + std::to_string(k) + "-edge-connected, so " + std::string(to_string(mode)) +
                     "_k is undefined");

  // Any spanning k-edge-connected subgraph in one color, the rest trivial, is a
  // UMC_k- and hence MC_k-coloring; it seeds the incumbent.
  const KecssResult seed_h = minimalize(g, k);
  SearchResult result;
  result.mode = mode;
  result.k = k;
  result.witness = EdgeColoring::single_class(g.size(), seed_h.edges);
  result.value = result.witness.color_count();

  if (g.size() > budget.max_edges) {
    result.budget_note = "graph has " + std::to_string(g.size()) + " edges; exact search budget is " +
                         std::to_string(budget.max_edges);
    return result;
  }

  PartitionSearch search(g, k, mode, budget.max_nodes);
  try {
    const int improved = search.improve_on(result.value);
    if (improved > result.value) {
      result.value = improved;
      result.witness = EdgeColoring(search.best());
    } else if (search.first_with(result.value)) {
      result.witness = EdgeColoring(search.best());
    } else {
      throw std::logic_error("exact search lost the seed coloring on the tie-break pass");
    }
    result.exact = true;
  } catch (const NodeLimit&) {
    if (!search.best().empty() && static_cast<int>(EdgeColoring(search.best()).color_count()) >= result.value) {
      result.witness = EdgeColoring(search.best());
      result.value = result.witness.color_count();
    }
    result.budget_note = "node budget of " + std::to_string(budget.max_nodes) + " exhausted";
  }
  result.explored = search.nodes();
  return result;
}

SearchResult exact_mc_k(const Graph& g, int k, SearchBudget budget) { return exact_search(g, k, Mode::mc, budget); }

SearchResult exact_umc_k(const Graph& g, int k, SearchBudget budget) { return exact_search(g, k, Mode::umc, budget); }

namespace {

/// Edges of `edges` whose removal disconnects their endpoints within `edges`.
std::vector<bool> bridges_within(const Graph& g, const std::vector<EdgeIndex>& edges) {
  std::vector<bool> bridge(edges.size(), false);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    DisjointSets dsu(g.order());
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (j != i) dsu.unite(g.edge(edges[j]).u, g.edge(edges[j]).v);
    bridge[i] = dsu.find(g.edge(edges[i]).u) != dsu.find(g.edge(edges[i]).v);
  }
  return bridge;
}

/// (colors, trivial edges, non-bridge edges inside classes): strictly increases with every accepted move.
std::tuple<int, int, int> potential(const Graph& g, const EdgeColoring& c) {
  int trivial = 0;
  int cyclic = 0;
  for (const auto& cls : color_classes(g, c)) {
    if (cls.trivial) ++trivial;
    for (bool b : bridges_within(g, cls.edges))
      if (!b) ++cyclic;
  }
  return {c.color_count(), trivial, cyclic};
}

std::optional<EdgeColoring> split_disconnected(const Graph& g, const EdgeColoring& c) {
  std::vector<int> raw = c.assignment();
  int fresh = c.color_count();
  bool split = false;
  for (const auto& cls : color_classes(g, c)) {
    DisjointSets dsu(g.order());
    for (EdgeIndex e : cls.edges) dsu.unite(g.edge(e).u, g.edge(e).v);
    const int keep = dsu.find(g.edge(cls.edges.front()).u);
    std::vector<std::pair<int, int>> relabel;
    for (EdgeIndex e : cls.edges) {
      const int root = dsu.find(g.edge(e).u);
      if (root == keep) continue;
      auto it = std::find_if(relabel.begin(), relabel.end(), [&](const auto& p) { return p.first == root; });
      if (it == relabel.end()) {
        relabel.emplace_back(root, fresh++);
        it = std::prev(relabel.end());
      }
      raw[static_cast<std::size_t>(e)] = it->second;
      split = true;
    }
  }
  if (!split) return std::nullopt;
  return EdgeColoring(std::move(raw));
}

bool joined_in(const Graph& g, const std::vector<EdgeIndex>& edges, Vertex a, Vertex b) {
  DisjointSets dsu(g.order());
  for (EdgeIndex e : edges) dsu.unite(g.edge(e).u, g.edge(e).v);
  return dsu.find(a) == dsu.find(b);
}

std::optional<EdgeColoring> transfer_move(const Graph& g, const EdgeColoring& c, int k) {
  const auto classes = color_classes(g, c);
  const auto before = potential(g, c);
  for (const auto& cls : classes) {
    const auto bridge = bridges_within(g, cls.edges);
    const bool has_bridge = std::find(bridge.begin(), bridge.end(), true) != bridge.end();
    const bool has_cycle = std::find(bridge.begin(), bridge.end(), false) != bridge.end();
    if (!has_bridge || !has_cycle) continue;
    for (std::size_t bi = 0; bi < cls.edges.size(); ++bi) {
      if (!bridge[bi]) continue;
      const Edge& cut = g.edge(cls.edges[bi]);
      for (Vertex v : {cut.u, cut.v}) {
        const Vertex u = cut.other(v);
        for (std::size_t ci = 0; ci < cls.edges.size(); ++ci) {
          if (bridge[ci]) continue;
          const Edge& cyc = g.edge(cls.edges[ci]);
          if (cyc.u != v && cyc.v != v) continue;
          const Vertex w = cyc.other(v);
          for (const auto& other : classes) {
            if (other.color == cls.color || !joined_in(g, other.edges, u, w)) continue;
            std::vector<int> raw = c.assignment();
            for (EdgeIndex e : cls.edges)
              if (e != cls.edges[ci]) raw[static_cast<std::size_t>(e)] = other.color;
            EdgeColoring candidate(std::move(raw));
            if (potential(g, candidate) > before && is_mc_k(g, candidate, k).pass) return candidate;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

EdgeColoring improve_coloring(const Graph& g, const EdgeColoring& c, int k) {
  if (!is_mc_k(g, c, k).pass) throw InputError("improve_coloring needs an MC_k-coloring as input");
  EdgeColoring current = c;
  for (;;) {
    if (auto split = split_disconnected(g, current)) {
      current = std::move(*split);
      continue;
    }
    if (auto moved = transfer_move(g, current, k)) {
      current = std::move(*moved);
      continue;
    }
    return current;
  }
}

}  // namespace mck
