#include "mck/tree_packing.hpp"

#include <algorithm>
#include <numeric>

#include "mck/connectivity.hpp"
#include "mck/error.hpp"

namespace mck {

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

bool is_valid_packing(const Graph& g, const TreePacking& packing) {
  std::vector<bool> used(static_cast<std::size_t>(g.size()), false);
  for (const auto& tree : packing.trees) {
    if (static_cast<int>(tree.size()) != g.order() - 1) return false;
    for (EdgeIndex e : tree) {
      if (e < 0 || e >= g.size() || used[static_cast<std::size_t>(e)]) return false;
      used[static_cast<std::size_t>(e)] = true;
    }
    const EdgeSet set(g.size(), tree);
    const auto labels = component_labels(g, set);
    if (std::any_of(labels.begin(), labels.end(), [](int c) { return c != 0; })) return false;
  }
  return true;
}

namespace {

/// k forests grown by matroid-partition augmentation: an edge that fits no
/// forest directly displaces a cycle edge, which moves on, along a shortest
/// exchange chain found by BFS.
class ForestPacker {
 public:
  ForestPacker(const Graph& g, int k)
      : g_(g), k_(k), forest_of_(static_cast<std::size_t>(g.size()), -1) {}

  bool insert(EdgeIndex start) {
    build_adjacency();
    std::vector<EdgeIndex> came_from(static_cast<std::size_t>(g_.size()), -2);
    std::vector<EdgeIndex> queue{start};
    came_from[static_cast<std::size_t>(start)] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const EdgeIndex x = queue[head];
      for (int f = 0; f < k_; ++f) {
        if (forest_of_[static_cast<std::size_t>(x)] == f) continue;
        const auto cycle = forest_path(f, g_.edge(x).u, g_.edge(x).v);
        if (!cycle) {
          shift_chain(x, f, came_from);
          return true;
        }
        for (EdgeIndex y : *cycle) {
          if (came_from[static_cast<std::size_t>(y)] != -2) continue;
          came_from[static_cast<std::size_t>(y)] = x;
          queue.push_back(y);
        }
      }
    }
    return false;
  }

  TreePacking packing() const {
    TreePacking out;
    out.trees.assign(static_cast<std::size_t>(k_), {});
    for (EdgeIndex e = 0; e < g_.size(); ++e)
      if (forest_of_[static_cast<std::size_t>(e)] >= 0)
        out.trees[static_cast<std::size_t>(forest_of_[static_cast<std::size_t>(e)])].push_back(e);
    return out;
  }

 private:
  void shift_chain(EdgeIndex last, int forest, const std::vector<EdgeIndex>& came_from) {
    EdgeIndex cur = last;
    int target = forest;
    while (cur != -1) {
      const int vacated = forest_of_[static_cast<std::size_t>(cur)];
      forest_of_[static_cast<std::size_t>(cur)] = target;
      target = vacated;
      cur = came_from[static_cast<std::size_t>(cur)];
    }
  }

  void build_adjacency() {
    adjacency_.assign(static_cast<std::size_t>(k_),
                      std::vector<std::vector<Incidence>>(static_cast<std::size_t>(g_.order())));
    for (EdgeIndex e = 0; e < g_.size(); ++e) {
      const int f = forest_of_[static_cast<std::size_t>(e)];
      if (f < 0) continue;
      const Edge& ed = g_.edge(e);
      adjacency_[static_cast<std::size_t>(f)][static_cast<std::size_t>(ed.u)].push_back({ed.v, e});
      adjacency_[static_cast<std::size_t>(f)][static_cast<std::size_t>(ed.v)].push_back({ed.u, e});
    }
  }

  /// Edges of the unique a-b path in forest f, if a and b are joined.
  std::optional<std::vector<EdgeIndex>> forest_path(int f, Vertex a, Vertex b) const {
    const auto& adj = adjacency_[static_cast<std::size_t>(f)];
    std::vector<EdgeIndex> via(static_cast<std::size_t>(g_.order()), -2);
    via[static_cast<std::size_t>(a)] = -1;
    std::vector<Vertex> stack{a};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      if (x == b) break;
      for (const Incidence& inc : adj[static_cast<std::size_t>(x)]) {
        if (via[static_cast<std::size_t>(inc.neighbor)] != -2) continue;
        via[static_cast<std::size_t>(inc.neighbor)] = inc.edge;
        stack.push_back(inc.neighbor);
      }
    }
    if (via[static_cast<std::size_t>(b)] == -2) return std::nullopt;
    std::vector<EdgeIndex> path;
    for (Vertex x = b; x != a;) {
      const EdgeIndex e = via[static_cast<std::size_t>(x)];
      path.push_back(e);
      x = g_.edge(e).other(x);
    }
    std::sort(path.begin(), path.end());
    return path;
  }

  const Graph& g_;
  int k_;
  std::vector<int> forest_of_;
  std::vector<std::vector<std::vector<Incidence>>> adjacency_;
};

std::optional<TreePacking> pack_spanning_trees(const Graph& g, int k) {
  ForestPacker packer(g, k);
  int placed = 0;
  for (EdgeIndex e = 0; e < g.size(); ++e)
    if (packer.insert(e)) ++placed;
  if (placed != k * (g.order() - 1)) return std::nullopt;
  return packer.packing();
}

}  // namespace

TreePacking tree_packing_number(const Graph& g) {
  if (g.order() < 2) throw InputError("tree packing needs at least two vertices");
  if (!is_connected(g)) throw InputError("tree packing needs a connected graph");
  TreePacking best;
  const int upper = g.size() / (g.order() - 1);
  for (int k = 1; k <= upper; ++k) {
    auto packing = pack_spanning_trees(g, k);
    if (!packing) break;
    best = std::move(*packing);
  }
  return best;
}

PsiResult psi_oracle(const Graph& g, int max_order) {
  if (g.order() < 2) throw InputError("psi needs at least two vertices");
  if (!is_connected(g)) throw InputError("psi needs a connected graph");
  if (g.order() > max_order)
    throw BudgetExceeded("psi enumeration is capped at n = " + std::to_string(max_order));

  const int n = g.order();
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  PsiResult best;
  bool have_best = false;

  // Restricted growth strings in lexicographic order; cross-edge count is
  // maintained incrementally against earlier vertices.
  auto visit = [&](auto&& self, Vertex v, int blocks, int cross) -> void {
    if (v == n) {
      if (blocks < 2) return;
      const Rational ratio = Rational::of(cross, blocks - 1);
      if (!have_best || ratio < best.psi) {
        best.psi = ratio;
        best.witness = labels;
        have_best = true;
      }
      return;
    }
    for (int b = 0; b <= blocks && b < n; ++b) {
      labels[static_cast<std::size_t>(v)] = b;
      int added = 0;
      for (const Incidence& inc : g.incident(v))
        if (inc.neighbor < v && labels[static_cast<std::size_t>(inc.neighbor)] != b) ++added;
      self(self, v + 1, std::max(blocks, b + 1), cross + added);
    }
  };
  labels[0] = 0;
  visit(visit, 1, 1, 0);
  best.Psi = static_cast<int>(best.psi.floor());
  return best;
}

EdgeColoring packing_coloring(const Graph& g, int k) {
  if (k < 2) throw InputError("packing coloring needs k >= 2");
  const TreePacking packing = tree_packing_number(g);
  if (packing.k() < k)
    throw InputError("graph has only " + std::to_string(packing.k()) + " edge-disjoint spanning trees; need " +
                     std::to_string(k));
  std::vector<int> raw(static_cast<std::size_t>(g.size()), -1);
  for (int i = 0; i < k; ++i)
    for (EdgeIndex e : packing.trees[static_cast<std::size_t>(i)]) raw[static_cast<std::size_t>(e)] = i;
  int fresh = k;
  for (int& c : raw)
    if (c == -1) c = fresh++;
  return EdgeColoring(std::move(raw));
}

}  // namespace mck
