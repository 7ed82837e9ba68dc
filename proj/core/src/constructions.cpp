#include "mck/constructions.hpp"

#include <algorithm>
#include <string>

#include "mck/connectivity.hpp"
#include "mck/error.hpp"
#include "mck/generators.hpp"

namespace mck {

std::string_view to_string(PartKind kind) {
  return kind == PartKind::hamiltonian_cycle ? "hamiltonian_cycle" : "perfect_matching";
}

EdgeColoring Decomposition::as_coloring(int edge_count) const {
  std::vector<int> raw(static_cast<std::size_t>(edge_count), -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (EdgeIndex e : parts[i].edges) raw.at(static_cast<std::size_t>(e)) = static_cast<int>(i);
  if (std::find(raw.begin(), raw.end(), -1) != raw.end()) throw InputError("decomposition leaves edges uncovered");
  return EdgeColoring(std::move(raw));
}

std::string check_decomposition(const Graph& g, const Decomposition& d) {
  std::vector<int> owner(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const auto& part = d.parts[i];
    const std::string tag = "part " + std::to_string(i);
    std::vector<int> degree(static_cast<std::size_t>(g.order()), 0);
    for (EdgeIndex e : part.edges) {
      if (e < 0 || e >= g.size()) return tag + " names a missing edge";
      if (owner[static_cast<std::size_t>(e)] != -1) return tag + " reuses edge " + std::to_string(e);
      owner[static_cast<std::size_t>(e)] = static_cast<int>(i);
      ++degree[static_cast<std::size_t>(g.edge(e).u)];
      ++degree[static_cast<std::size_t>(g.edge(e).v)];
    }
    if (part.kind == PartKind::hamiltonian_cycle) {
      if (static_cast<int>(part.edges.size()) != g.order()) return tag + " is not a Hamiltonian cycle (edge count)";
      if (std::any_of(degree.begin(), degree.end(), [](int x) { return x != 2; }))
        return tag + " is not a Hamiltonian cycle (degree)";
      const auto labels = component_labels(g, EdgeSet(g.size(), part.edges));
      if (std::any_of(labels.begin(), labels.end(), [](int c) { return c != 0; }))
        return tag + " is not a Hamiltonian cycle (disconnected)";
    } else {
      if (std::any_of(degree.begin(), degree.end(), [](int x) { return x != 1; }))
        return tag + " is not a perfect matching";
    }
  }
  for (EdgeIndex e = 0; e < g.size(); ++e)
    if (owner[static_cast<std::size_t>(e)] == -1) return "edge " + std::to_string(e) + " is in no part";
  return {};
}

namespace {

/// 0, 1, -1, 2, -2, ... modulo `points`, rotated by `shift`.
std::vector<Vertex> zigzag(int points, int shift) {
  std::vector<Vertex> seq(static_cast<std::size_t>(points));
  for (int p = 0; p < points; ++p) {
    const int base = p == 0 ? 0 : (p % 2 == 1 ? (p + 1) / 2 : points - p / 2);
    seq[static_cast<std::size_t>(p)] = (base + shift) % points;
  }
  return seq;
}

DecompositionPart part_from_walk(const Graph& g, PartKind kind, const std::vector<Vertex>& walk, bool closed) {
  DecompositionPart part;
  part.kind = kind;
  const std::size_t steps = closed ? walk.size() : walk.size() - 1;
  for (std::size_t i = 0; i < steps; ++i) {
    const auto e = g.find_edge(walk[i], walk[(i + 1) % walk.size()]);
    if (!e) throw std::logic_error("construction walked a non-edge");
    part.edges.push_back(*e);
  }
  std::sort(part.edges.begin(), part.edges.end());
  return part;
}

DecompositionPart matching_part(const Graph& g, const std::vector<Edge>& pairs) {
  DecompositionPart part;
  part.kind = PartKind::perfect_matching;
  for (const Edge& p : pairs) {
    const auto e = g.find_edge(p.u, p.v);
    if (!e) throw std::logic_error("construction matched a non-edge");
    part.edges.push_back(*e);
  }
  std::sort(part.edges.begin(), part.edges.end());
  return part;
}

}  // namespace

DecomposedGraph decompose_complete_odd(int n) {
  if (n < 1) throw InputError("decompose_complete_odd needs n >= 1");
  DecomposedGraph out{gen::complete(2 * n + 1), {}};
  const Vertex hub = 2 * n;
  for (int j = 0; j < n; ++j) {
    std::vector<Vertex> walk{hub};
    for (Vertex v : zigzag(2 * n, j)) walk.push_back(v);
    out.decomposition.parts.push_back(part_from_walk(out.graph, PartKind::hamiltonian_cycle, walk, true));
  }
  return out;
}

DecomposedGraph decompose_complete_even(int n) {
  if (n < 1) throw InputError("decompose_complete_even needs n >= 1");
  DecomposedGraph out{gen::complete(2 * n + 2), {}};
  const Vertex hub_a = 2 * n;
  const Vertex hub_b = 2 * n + 1;
  std::vector<Edge> matching{{hub_a, hub_b}};
  for (int j = 0; j < n; ++j) {
    const auto path = zigzag(2 * n, j);
    std::vector<Vertex> walk{hub_a};
    walk.insert(walk.end(), path.begin(), path.begin() + n);
    walk.push_back(hub_b);
    walk.insert(walk.end(), path.begin() + n, path.end());
    out.decomposition.parts.push_back(part_from_walk(out.graph, PartKind::hamiltonian_cycle, walk, true));
    matching.push_back({path[static_cast<std::size_t>(n - 1)], path[static_cast<std::size_t>(n)]});
  }
  out.decomposition.parts.push_back(matching_part(out.graph, matching));
  return out;
}

DecomposedGraph decompose_bipartite(int n, bool odd) {
  if (n < 1) throw InputError("decompose_bipartite needs n >= 1");
  const int s = odd ? 2 * n + 1 : 2 * n;
  DecomposedGraph out{gen::complete_bipartite(s, s), {}};
  auto b = [s](int i) { return s + ((i % s) + s) % s; };
  for (int j = 0; j < n; ++j) {
    const int offset = odd ? 2 * j + 1 : 2 * j;
    // a_i -> b_{i+offset+1} -> a_{i+1} -> ... visits every a_i once.
    std::vector<Vertex> walk;
    for (int i = 0; i < s; ++i) {
      walk.push_back(i);
      walk.push_back(b(i + offset + 1));
    }
    out.decomposition.parts.push_back(part_from_walk(out.graph, PartKind::hamiltonian_cycle, walk, true));
  }
  if (odd) {
    std::vector<Edge> matching;
    for (int i = 0; i < s; ++i) matching.push_back({i, b(i)});
    out.decomposition.parts.push_back(matching_part(out.graph, matching));
  }
  return out;
}

ColoredGraph kkn_mc_coloring(int k, int n) {
  if (k < 4 || k % 2 != 0) throw InputError("kkn_mc_coloring needs an even k >= 4");
  if (n < k) throw InputError("kkn_mc_coloring needs n >= k");
  Graph g = gen::complete_bipartite(k, n);
  std::vector<int> raw(static_cast<std::size_t>(g.size()), -1);
  auto paint = [&](Vertex u, Vertex v, int color) {
    const auto e = g.find_edge(u, v);
    if (!e) throw std::logic_error("kkn construction painted a non-edge");
    raw[static_cast<std::size_t>(*e)] = color;
  };

  // K_{k,k} on {0..k-1} and {k..2k-1}: the bipartite decomposition's labels line up directly.
  const auto core = decompose_bipartite(k / 2, false);
  for (std::size_t c = 0; c < core.decomposition.parts.size(); ++c)
    for (EdgeIndex e : core.decomposition.parts[c].edges)
      paint(core.graph.edge(e).u, core.graph.edge(e).v, static_cast<int>(c));

  for (Vertex v = 2 * k; v < k + n; ++v)
    for (int i = 0; i < k / 2; ++i) {
      paint(2 * i, v, i);
      paint(2 * i + 1, v, i);
    }
  return {std::move(g), EdgeColoring(std::move(raw))};
}

EdgeColoring single_class_umc_coloring(const Graph& g, int k, const KecssResult& h) {
  for (EdgeIndex e : h.edges)
    if (e < 0 || e >= g.size()) throw InputError("subgraph names an edge outside the graph");
  if (!is_k_edge_connected(g, EdgeSet(g.size(), h.edges), k).ok)
    throw InputError("subgraph is not a spanning " + std::to_string(k) + "-edge-connected subgraph");
  return EdgeColoring::single_class(g.size(), h.edges);
}

}  // namespace mck
