#include <doctest.h>

#include <functional>
#include <random>

#include "mck/coloring.hpp"
#include "mck/connectivity.hpp"
#include "mck/constructions.hpp"
#include "mck/error.hpp"
#include "mck/generators.hpp"
#include "mck/kecss.hpp"
#include "mck/search.hpp"
#include "mck/tree_packing.hpp"
#include "oracles.hpp"

using namespace mck;

namespace {

bool classes_connected(const Graph& g, const EdgeColoring& c) {
  for (const auto& cls : color_classes(g, c))
    if (!is_connected(g.edge_induced_subgraph(cls.edges))) return false;
  return true;
}

/// Lexicographically first restricted growth string with `value` connected
/// blocks that passes the verifier.
std::vector<int> first_connected_witness(const Graph& g, int k, Mode mode, int value) {
  const int m = g.size();
  std::vector<int> rgs(static_cast<std::size_t>(m), 0);
  std::vector<int> found;
  std::function<bool(int, int)> walk = [&](int pos, int blocks) -> bool {
    if (pos == m) {
      if (blocks != value) return false;
      const EdgeColoring c(rgs);
      if (!classes_connected(g, c) || !verify(g, c, k, mode).pass) return false;
      found = rgs;
      return true;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[static_cast<std::size_t>(pos)] = b;
      if (walk(pos + 1, std::max(blocks, b + 1))) return true;
    }
    return false;
  };
  walk(0, 0);
  return found;
}

std::vector<std::pair<Graph, int>> small_cases(int max_edges) {
  std::vector<std::pair<Graph, int>> out;
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : gen::all_graphs(n)) {
      if (g.size() > max_edges) continue;
      for (int k = 1; k <= 3; ++k)
        if (is_k_edge_connected(g, k).ok) out.emplace_back(g, k);
    }
  return out;
}

}  // namespace

TEST_CASE("exact mc_k examples") {
  CHECK(exact_mc_k(gen::cycle(5), 2).value == 1);
  const auto k4 = exact_mc_k(gen::complete(4), 2);
  CHECK(k4.value == 3);
  CHECK(k4.exact);
  CHECK(exact_mc_k(gen::complete(5), 4).value == 2);
}

TEST_CASE("exact umc_k examples") {
  CHECK(exact_umc_k(gen::complete(4), 2).value == 3);
  CHECK(exact_umc_k(gen::cycle(5), 2).value == 1);
  CHECK(exact_umc_k(gen::complete_bipartite(3, 3), 3).value == 1);
}

TEST_CASE("search preconditions and budgets") {
  CHECK_THROWS_AS(exact_mc_k(gen::path(4), 2), InputError);
  CHECK_THROWS_AS(exact_umc_k(gen::cycle(5), 3), InputError);

  const auto big = exact_mc_k(gen::complete(6), 2);  // 15 edges, default cap is 12
  CHECK_FALSE(big.exact);
  CHECK_FALSE(big.budget_note.empty());
  CHECK(is_mc_k(gen::complete(6), big.witness, 2).pass);
  CHECK(big.witness.color_count() == big.value);

  const auto starved = exact_mc_k(gen::complete(5), 2, {.max_edges = 12, .max_nodes = 50});
  CHECK_FALSE(starved.exact);
  CHECK(is_mc_k(gen::complete(5), starved.witness, 2).pass);
  CHECK(starved.witness.color_count() == starved.value);
}

TEST_CASE("connected-class search equals the all-partitions optimum for m <= 8") {
  int checked = 0;
  for (const auto& [g, k] : small_cases(8)) {
    for (Mode mode : {Mode::mc, Mode::umc}) {
      const auto result = exact_search(g, k, mode);
      REQUIRE(result.exact);
      CHECK(result.value == oracle::all_partitions_optimum(g, k, mode));
      ++checked;
    }
  }
  CHECK(checked > 60);
}

TEST_CASE("witnesses are sound and lexicographically first") {
  for (const auto& [g, k] : small_cases(9)) {
    for (Mode mode : {Mode::mc, Mode::umc}) {
      const auto result = exact_search(g, k, mode);
      REQUIRE(result.exact);
      CHECK(result.witness.color_count() == result.value);
      CHECK(verify(g, result.witness, k, mode).pass);
      CHECK(result.witness.assignment() == first_connected_witness(g, k, mode, result.value));
    }
  }
}

TEST_CASE("umc_k never exceeds mc_k") {
  for (const auto& [g, k] : small_cases(12)) {
    if (k < 2) continue;
    CHECK(exact_umc_k(g, k).value <= exact_mc_k(g, k).value);
  }
}

TEST_CASE("mc_k dominates the constructions") {
  const Graph k5 = gen::complete(5);
  const auto odd = decompose_complete_odd(2);
  CHECK(exact_mc_k(k5, 4).value >= odd.decomposition.as_coloring(k5.size()).color_count());

  for (const auto& [g, k] : small_cases(12)) {
    if (k < 2) continue;
    const int value = exact_mc_k(g, k).value;
    CHECK(value >= single_class_umc_coloring(g, k, minimalize(g, k)).color_count());
    if (tree_packing_number(g).k() >= k) CHECK(value >= packing_coloring(g, k).color_count());
  }
}

TEST_CASE("improve_coloring splits disconnected classes") {
  // Bowtie: triangles 0-1-2 and 2-3-4. Edges 01 and 34 share a color, so that
  // class is disconnected; the star at 2 keeps every pair joined.
  const Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  const EdgeColoring mono = EdgeColoring::monochromatic(6);
  CHECK(improve_coloring(bowtie, mono, 2).color_count() >= 1);

  const EdgeColoring joined({0, 1, 1, 1, 1, 0});
  REQUIRE(is_mc_k(bowtie, joined, 1).pass);
  const EdgeColoring better = improve_coloring(bowtie, joined, 1);
  CHECK(better.color_count() >= 3);
  CHECK(is_mc_k(bowtie, better, 1).pass);

  CHECK_THROWS_AS(improve_coloring(gen::complete(4), EdgeColoring::rainbow(6), 2), InputError);
}

TEST_CASE("improve_coloring keeps verification and never loses colors") {
  std::mt19937_64 rng(12);
  int tried = 0;
  while (tried < 150) {
    const Graph g = oracle::random_connected(rng, 3, 7);
    const int k = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<int> raw(static_cast<std::size_t>(g.size()));
    for (int& c : raw) c = std::uniform_int_distribution<int>(0, 2)(rng);
    const EdgeColoring c(raw);
    if (!is_mc_k(g, c, k).pass) continue;
    ++tried;
    const EdgeColoring out = improve_coloring(g, c, k);
    CHECK(out.color_count() >= c.color_count());
    CHECK(is_mc_k(g, out, k).pass);
  }
}

TEST_CASE("extremal colorings are fixpoints in color count") {
  for (const auto& [g, k] : small_cases(10)) {
    const auto best = exact_mc_k(g, k);
    REQUIRE(best.exact);
    CHECK(improve_coloring(g, best.witness, k).color_count() == best.value);
  }
}
