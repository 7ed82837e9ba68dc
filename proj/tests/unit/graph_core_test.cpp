#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mck/connectivity.hpp"
#include "mck/error.hpp"
#include "mck/generators.hpp"
#include "mck/graph.hpp"
#include "mck/graph_io.hpp"
#include "oracles.hpp"

using namespace mck;

namespace {

std::vector<std::pair<int, int>> pairs_of(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

Graph two_triangles() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

}  // namespace

TEST_CASE("graph rejects loops, duplicates and out-of-range endpoints") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(Graph(-1, {}), InputError);

  const Graph g(3, {{2, 0}, {1, 2}});
  CHECK(g.edge(0) == Edge{0, 2});
  CHECK(g.find_edge(2, 1) == 1);
  CHECK_FALSE(g.find_edge(0, 1).has_value());
}

TEST_CASE("subgraph views keep the original edge indexing") {
  const Graph k4 = gen::complete(4);
  const std::vector<EdgeIndex> keep{0, 3, 5};
  const Graph span = k4.spanning_subgraph(keep);
  CHECK(span.order() == 4);
  CHECK(span.size() == 3);
  CHECK(span.edge(1) == k4.edge(3));
}

TEST_CASE("graph6 decoding of small graphs matches the reference encoder") {
  const Graph k3 = parse_graph6("Bw");
  CHECK(k3.order() == 3);
  CHECK(pairs_of(k3) == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(oracle::reference_graph6(3, pairs_of(k3)) == "Bw");

  const Graph k4 = parse_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);
  CHECK(oracle::reference_graph6(4, pairs_of(gen::complete(4))) == "C~");

  const Graph edge = parse_graph6("A_");
  CHECK(edge.order() == 2);
  CHECK(pairs_of(edge) == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(oracle::reference_graph6(2, {{0, 1}}) == "A_");

  CHECK(parse_graph6(">>graph6<<C~\n") == k4);
}

TEST_CASE("graph6 errors carry the byte offset") {
  auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      (void)parse_graph6(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("C~~") == 2);        // trailing garbage after the body
  CHECK(offset_of("C") == 1);          // body missing
  CHECK(offset_of("B\x01") == 1);      // byte outside 63..126
  CHECK(offset_of("~?") == 0);         // truncated long header, reported at its start
  CHECK(offset_of("Bx") == 1);         // nonzero padding bits
}

TEST_CASE("graph6 round-trip for generated graphs up to n = 12") {
  std::mt19937_64 rng(20240611);
  for (int n = 1; n <= 12; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const Graph g = gen::gnp(n, std::uniform_real_distribution<double>(0, 1)(rng), rng());
      const std::string text = to_graph6(g);
      CHECK(text == oracle::reference_graph6(n, pairs_of(g)));
      CHECK(parse_graph6(text) == g.sorted());
    }
  }
  for (int n : {63, 70}) {
    const Graph g = gen::cycle(n).sorted();
    const std::string text = to_graph6(g);
    CHECK(text == oracle::reference_graph6(n, pairs_of(g)));
    CHECK(parse_graph6(text) == g);
  }
}

TEST_CASE("edge list format") {
  const Graph g = parse_edge_list("4 3\n0 1\n\n1 2\n2 3\n");
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(parse_edge_list(to_edge_list(g)) == g);

  try {
    (void)parse_edge_list("3 2\n0 1\n0 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 0\n"), InputError);
}

TEST_CASE("corpus deduplicates by string only") {
  const auto corpus = parse_corpus("C~\n\nBw\nC~\nCF\n");
  REQUIRE(corpus.size() == 3);
  CHECK(corpus[0].id == "C~");
  CHECK(corpus[2].id == "CF");
}

TEST_CASE("local edge connectivity examples") {
  CHECK(local_edge_connectivity(gen::complete(4), 1, 3).value == 3);
  CHECK(local_edge_connectivity(gen::cycle(5), 0, 2).value == 2);
  CHECK(local_edge_connectivity(gen::path(3), 0, 2).value == 1);
  CHECK_THROWS_AS(local_edge_connectivity(gen::cycle(5), 2, 2), InputError);
}

TEST_CASE("Menger agreement with exhaustive path sets for m <= 9") {
  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 150) {
    const Graph g = oracle::random_connected(rng, 3, 7);
    if (g.size() > 9) continue;
    ++checked;
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) {
        const auto flow = local_edge_connectivity(g, u, v, true);
        CHECK(flow.value == oracle::brute_force_disjoint_paths(g, u, v));
        // The certificate is a u-v cut of exactly that size.
        REQUIRE(flow.cut.has_value());
        CHECK(static_cast<int>(flow.cut->cut_edges.size()) == flow.value);
        const std::set<Vertex> side(flow.cut->side.begin(), flow.cut->side.end());
        CHECK(side.count(u) == 1);
        CHECK(side.count(v) == 0);
        EdgeSet rest(g.size(), true);
        for (EdgeIndex e : flow.cut->cut_edges) {
          CHECK(side.count(g.edge(e).u) != side.count(g.edge(e).v));
          rest.erase(e);
        }
        const auto labels = component_labels(g, rest);
        CHECK(labels[static_cast<std::size_t>(u)] != labels[static_cast<std::size_t>(v)]);
      }
  }
}

TEST_CASE("min cut toward a sink with no active edges keeps the whole source side") {
  // Path 0-1-2-3 with edge 23 inactive: vertex 3 is isolated.
  const Graph p = gen::path(4);
  const std::vector<EdgeIndex> active{0, 1};
  EdgeDisjointPaths paths(p, active);
  const CutCertificate cut = paths.min_cut(0, 3);
  CHECK(cut.cut_edges.empty());
  CHECK(cut.side == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("k-edge-connectivity examples and certificates") {
  CHECK(is_k_edge_connected(gen::cycle(4), 2).ok);
  const auto c4 = is_k_edge_connected(gen::cycle(4), 3);
  CHECK_FALSE(c4.ok);
  REQUIRE(c4.cut.has_value());
  CHECK(c4.cut->cut_edges.size() == 2);
  CHECK(is_k_edge_connected(gen::complete(5), 4).ok);
  CHECK_FALSE(is_k_edge_connected(gen::complete(5), 5).ok);

  const Graph split(4, {{0, 1}, {2, 3}});
  const auto disconnected = is_k_edge_connected(split, 1);
  CHECK_FALSE(disconnected.ok);
  REQUIRE(disconnected.cut.has_value());
  CHECK(disconnected.cut->cut_edges.empty());
  CHECK_FALSE(is_k_edge_connected(Graph(1, {}), 1).ok);
}

TEST_CASE("k-edge-connectivity agrees with cut enumeration") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : gen::all_graphs(n))
      for (int k = 1; k <= 3; ++k) {
        const auto check = is_k_edge_connected(g, k);
        CHECK(check.ok == oracle::cut_enumeration_kec(g, oracle::full_mask(g), k));
        if (!check.ok && check.cut) CHECK(static_cast<int>(check.cut->cut_edges.size()) < k);
      }
}

TEST_CASE("blocks examples") {
  const auto bowtie = blocks(two_triangles());
  REQUIRE(bowtie.size() == 2);
  CHECK(bowtie[0] == std::vector<EdgeIndex>{0, 1, 2});
  CHECK(bowtie[1] == std::vector<EdgeIndex>{3, 4, 5});
  CHECK(blocks(gen::cycle(5)).size() == 1);
  CHECK(blocks(gen::path(3)).size() == 2);
  CHECK_THROWS_AS(blocks(Graph(3, {{0, 1}})), InputError);
}

TEST_CASE("blocks partition the edges and form a block tree") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const Graph g = oracle::random_connected(rng, 2, 9);
    const auto parts = blocks(g);
    std::vector<int> owner(static_cast<std::size_t>(g.size()), -1);
    for (std::size_t b = 0; b < parts.size(); ++b)
      for (EdgeIndex e : parts[b]) {
        CHECK(owner[static_cast<std::size_t>(e)] == -1);
        owner[static_cast<std::size_t>(e)] = static_cast<int>(b);
      }
    CHECK(std::count(owner.begin(), owner.end(), -1) == 0);

    // Each block is a bridge or has no cut vertex of its own.
    for (const auto& part : parts) {
      const Graph block = g.edge_induced_subgraph(part);
      if (block.size() == 1) continue;
      for (Vertex x = 0; x < block.order(); ++x) {
        std::vector<Edge> rest;
        std::vector<Vertex> relabel(static_cast<std::size_t>(block.order()));
        for (Vertex y = 0, next = 0; y < block.order(); ++y) relabel[static_cast<std::size_t>(y)] = y == x ? -1 : next++;
        for (const Edge& e : block.edges())
          if (e.u != x && e.v != x)
            rest.push_back({relabel[static_cast<std::size_t>(e.u)], relabel[static_cast<std::size_t>(e.v)]});
        CHECK(is_connected(Graph(block.order() - 1, rest)));
      }
    }

    // Bipartite block / vertex incidence graph is a tree: connected with
    // (#blocks + #vertices in some block) - 1 incidences after dropping
    // vertices that belong to only one block.
    std::vector<std::set<int>> member(static_cast<std::size_t>(g.order()));
    for (std::size_t b = 0; b < parts.size(); ++b)
      for (EdgeIndex e : parts[b]) {
        member[static_cast<std::size_t>(g.edge(e).u)].insert(static_cast<int>(b));
        member[static_cast<std::size_t>(g.edge(e).v)].insert(static_cast<int>(b));
      }
    int cut_vertices = 0;
    int incidences = 0;
    for (const auto& m : member)
      if (m.size() > 1) {
        ++cut_vertices;
        incidences += static_cast<int>(m.size());
      }
    CHECK(incidences == static_cast<int>(parts.size()) + cut_vertices - 1);
  }
}

TEST_CASE("shrink cross edges") {
  const Graph k4 = gen::complete(4);
  CHECK(shrink_cross_edges(k4, VertexPartition::from_labels(std::vector<int>{0, 1, 2, 3})) == 6);
  CHECK(shrink_cross_edges(k4, VertexPartition(4, {{0, 1}, {2, 3}})) == 4);
  CHECK(shrink_cross_edges(k4, VertexPartition(4, {{0, 1, 2, 3}})) == 0);
  CHECK_THROWS_AS(VertexPartition(4, {{0, 1}, {1, 2, 3}}), InputError);
  CHECK_THROWS_AS(VertexPartition(4, {{0, 1}, {}, {2, 3}}), InputError);
  CHECK_THROWS_AS(VertexPartition(4, {{0, 1}, {2}}), InputError);
  CHECK_THROWS_AS(shrink_cross_edges(k4, VertexPartition(3, {{0}, {1, 2}})), InputError);

  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    const Graph g = oracle::random_connected(rng, 2, 8);
    std::vector<int> singletons(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) singletons[static_cast<std::size_t>(i)] = i;
    CHECK(shrink_cross_edges(g, VertexPartition::from_labels(singletons)) == g.size());
  }
}

TEST_CASE("generators") {
  CHECK(gen::complete(5).size() == 10);
  CHECK(gen::complete_bipartite(3, 3).size() == 9);
  const Graph cactus = gen::cactus({{{4, 0}, {4, 0}}, {}});
  CHECK(cactus.order() == 7);
  CHECK(cactus.size() == 8);
  CHECK(is_k_edge_connected(cactus, 2).ok);
  const Graph pendant = gen::cactus({{{3, 0}}, {1}});
  CHECK(pendant.size() == 4);
  CHECK_FALSE(is_k_edge_connected(pendant, 2).ok);

  const Graph a = gen::random_kec(8, 3, 42);
  CHECK(a == gen::random_kec(8, 3, 42));
  CHECK(is_k_edge_connected(a, 3).ok);
  CHECK_THROWS_AS(gen::random_kec(4, 4, 1), InputError);
  CHECK(gen::petersen().size() == 15);
}

TEST_CASE("all_graphs enumerates isomorphism classes") {
  // Number of graphs on n unlabeled vertices.
  const std::vector<std::size_t> expected{0, 1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) CHECK(gen::all_graphs(n).size() == expected[static_cast<std::size_t>(n)]);
}
