#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mck/connectivity.hpp"
#include "mck/error.hpp"
#include "mck/generators.hpp"
#include "mck/harness.hpp"
#include "mck/kecss.hpp"
#include "oracles.hpp"

using namespace mck;

namespace {

bool is_hamiltonian_cycle(const Graph& g, const std::vector<EdgeIndex>& edges) {
  if (static_cast<int>(edges.size()) != g.order()) return false;
  const Graph sub = g.spanning_subgraph(edges);
  for (Vertex v = 0; v < g.order(); ++v)
    if (sub.degree(v) != 2) return false;
  return is_connected(sub);
}

void check_cut(const Graph& g, const CutCertificate& cut) {
  const std::set<Vertex> side(cut.side.begin(), cut.side.end());
  CHECK_FALSE(side.empty());
  CHECK(static_cast<int>(side.size()) < g.order());
  std::vector<EdgeIndex> crossing;
  for (EdgeIndex e = 0; e < g.size(); ++e)
    if (side.count(g.edge(e).u) != side.count(g.edge(e).v)) crossing.push_back(e);
  CHECK(crossing == cut.cut_edges);
}

}  // namespace

TEST_CASE("deletable edges") {
  CHECK_FALSE(is_deletable(gen::cycle(4), 0, 2));
  for (EdgeIndex e = 0; e < 6; ++e) CHECK(is_deletable(gen::complete(4), e, 2));
  CHECK_FALSE(is_deletable(gen::complete(5), 3, 4));
  CHECK_THROWS_AS(is_deletable(gen::path(3), 0, 2), InputError);
}

TEST_CASE("minimalize examples") {
  const auto c5 = minimalize(gen::cycle(5), 2);
  CHECK(c5.size == 5);
  CHECK(c5.exactness == Exactness::heuristic_minimal);

  const Graph k4 = gen::complete(4);
  const auto h = minimalize(k4, 2);
  CHECK(h.size == 4);
  CHECK(is_hamiltonian_cycle(k4, h.edges));

  CHECK(minimalize(gen::complete(5), 4).size == 10);
  CHECK_THROWS_AS(minimalize(gen::path(4), 2), InputError);
}

TEST_CASE("minimum k-ECSS examples") {
  const auto k4 = minimum_kecss(gen::complete(4), 2);
  CHECK(k4.size == 4);
  CHECK(k4.exactness == Exactness::exact);

  const Graph petersen = gen::petersen();
  const auto p = minimum_kecss(petersen, 2);
  CHECK(p.size == 11);
  // Size 10 would be a Hamiltonian cycle, and there is none.
  CHECK_FALSE(find_hamiltonian_cycle(petersen).has_value());
  CHECK_FALSE(oracle::cut_enumeration_kec(petersen, 0, 2));

  CHECK(minimum_kecss(gen::complete_bipartite(3, 3), 3).size == 9);

  CHECK_THROWS_AS(minimum_kecss(gen::cycle(5), 3), InputError);
  CHECK_THROWS_AS(minimum_kecss(gen::complete(7), 2, {.max_edges = 20}), BudgetExceeded);
  CHECK_THROWS_AS(minimum_kecss(gen::complete(6), 2, {.max_edges = 20, .max_nodes = 10}), BudgetExceeded);
}

TEST_CASE("minimum k-ECSS equals full subset enumeration for m <= 12") {
  int checked = 0;
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : gen::all_graphs(n)) {
      if (g.size() > 12) continue;
      for (int k = 1; k <= 3; ++k) {
        if (!is_k_edge_connected(g, k).ok) continue;
        ++checked;
        const auto exact = minimum_kecss(g, k);
        const auto [size, first] = oracle::brute_force_min_kecss(g, k);
        CHECK(exact.size == size);
        CHECK(exact.edges == first);
      }
    }
  CHECK(checked > 100);
}

TEST_CASE("k-ECSS size bounds and certificates") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 60; ++rep) {
    const Graph g = oracle::random_connected(rng, 3, 7);
    for (int k = 1; k <= 3; ++k) {
      if (!is_k_edge_connected(g, k).ok) continue;
      const auto minimal = minimalize(g, k);
      const auto minimum = minimum_kecss(g, k);
      const int n = g.order();
      CHECK(minimum.size <= minimal.size);
      CHECK(minimal.size <= k * (n - 1));
      CHECK(2 * minimum.size >= k * n);

      for (const KecssResult* r : {&minimal, &minimum}) {
        EdgeSet kept(g.size(), r->edges);
        CHECK(is_k_edge_connected(g, kept, k).ok);
        CHECK(r->connectivity >= k);
        CHECK(static_cast<int>(r->min_cut.cut_edges.size()) == r->connectivity);
      }
      // No deletable edge remains in the minimal result.
      const Graph sub = g.spanning_subgraph(minimal.edges);
      for (EdgeIndex e = 0; e < sub.size(); ++e) CHECK_FALSE(is_deletable(sub, e, k));
    }
  }
}

TEST_CASE("removing chords of a 2-edge-connected subgraph keeps 2-edge-connectivity") {
  std::mt19937_64 rng(2024);
  int instances = 0;
  while (instances < 100) {
    const Graph g = oracle::random_connected(rng, 4, 9);
    if (!is_k_edge_connected(g, 2).ok) continue;

    // H: a minimal 2-edge-connected spanning subgraph of G[W] for a random W.
    std::vector<Vertex> w;
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (Vertex v = 0; v < g.order(); ++v)
      if (std::bernoulli_distribution(0.7)(rng)) {
        local[static_cast<std::size_t>(v)] = static_cast<int>(w.size());
        w.push_back(v);
      }
    if (w.size() < 3) continue;
    std::vector<Edge> inner;
    std::vector<EdgeIndex> global;
    for (EdgeIndex e = 0; e < g.size(); ++e) {
      const int a = local[static_cast<std::size_t>(g.edge(e).u)];
      const int b = local[static_cast<std::size_t>(g.edge(e).v)];
      if (a < 0 || b < 0) continue;
      inner.push_back({a, b});
      global.push_back(e);
    }
    const Graph induced(static_cast<int>(w.size()), inner);
    if (!is_k_edge_connected(induced, 2).ok) continue;
    std::set<EdgeIndex> h;
    for (EdgeIndex e : minimalize(induced, 2).edges) h.insert(global[static_cast<std::size_t>(e)]);

    EdgeSet rest(g.size(), true);
    for (EdgeIndex e : global)
      if (!h.count(e) && std::bernoulli_distribution(0.6)(rng)) rest.erase(e);
    ++instances;
    CHECK(is_k_edge_connected(g, rest, 2).ok);
  }
}

TEST_CASE("Mader checks examples") {
  const auto k33 = mader_checks(gen::complete_bipartite(3, 3), 3);
  CHECK(k33.is_minimal);
  CHECK(k33.edge_bound_holds);
  CHECK(k33.degree_k_vertex.has_value());
  CHECK(k33.edge_cuts.size() == 9);
  CHECK(k33.consistent());

  const auto c6 = mader_checks(gen::cycle(6), 2);
  CHECK(c6.is_minimal);
  CHECK(c6.degree_k_vertex.has_value());
  for (const auto& cut : c6.edge_cuts) CHECK(cut.cut_edges.size() == 2);

  const auto k4 = mader_checks(gen::complete(4), 2);
  CHECK_FALSE(k4.is_minimal);
  CHECK(k4.deletable_edge.has_value());
  CHECK(k4.edge_cuts.empty());
}

TEST_CASE("every minimalize output satisfies the Mader properties") {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 80; ++rep) {
    const Graph g = oracle::random_connected(rng, 3, 8);
    for (int k = 1; k <= 3; ++k) {
      if (!is_k_edge_connected(g, k).ok) continue;
      const Graph h = g.spanning_subgraph(minimalize(g, k).edges);
      const auto report = mader_checks(h, k);
      REQUIRE(report.is_minimal);
      CHECK(report.consistent());
      CHECK(h.size() <= k * (h.order() - 1));
      REQUIRE(report.degree_k_vertex.has_value());
      CHECK(h.degree(*report.degree_k_vertex) == k);
      REQUIRE(static_cast<int>(report.edge_cuts.size()) == h.size());
      for (EdgeIndex e = 0; e < h.size(); ++e) {
        const auto& cut = report.edge_cuts[static_cast<std::size_t>(e)];
        CHECK(static_cast<int>(cut.cut_edges.size()) == k);
        CHECK(std::count(cut.cut_edges.begin(), cut.cut_edges.end(), e) == 1);
        check_cut(h, cut);
      }
    }
  }
}
