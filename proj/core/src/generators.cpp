#include "mck/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "mck/connectivity.hpp"
#include "mck/error.hpp"

namespace mck::gen {

Graph complete(int n) {
  if (n < 1) throw InputError("complete graph needs n >= 1");
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.push_back({u, v});
  return Graph(n, std::move(es));
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw InputError("complete bipartite graph needs both sides nonempty");
  std::vector<Edge> es;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) es.push_back({u, v});
  return Graph(a + b, std::move(es));
}

Graph cycle(int n) {
  if (n < 3) throw InputError("a simple cycle needs n >= 3");
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v) es.push_back({v, (v + 1) % n});
  return Graph(n, std::move(es));
}

Graph path(int n) {
  if (n < 1) throw InputError("path needs n >= 1");
  std::vector<Edge> es;
  for (Vertex v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
  return Graph(n, std::move(es));
}

Graph petersen() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.push_back({i, (i + 1) % 5});
    es.push_back({i, i + 5});
    es.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph(10, std::move(es)).sorted();
}

Graph cactus(const CactusSpec& spec) {
  if (spec.cycles.empty()) throw InputError("cactus needs at least one cycle");
  std::vector<Edge> es;
  int order = 0;
  for (std::size_t i = 0; i < spec.cycles.size(); ++i) {
    const CactusCycle& c = spec.cycles[i];
    if (c.length < 3) throw InputError("cactus cycle " + std::to_string(i) + " is shorter than 3");
    std::vector<Vertex> ring;
    if (i == 0) {
      for (int j = 0; j < c.length; ++j) ring.push_back(order++);
    } else {
      if (c.anchor < 0 || c.anchor >= order)
        throw InputError("cactus cycle " + std::to_string(i) + " anchors at a vertex that does not exist yet");
      ring.push_back(c.anchor);
      for (int j = 1; j < c.length; ++j) ring.push_back(order++);
    }
    for (std::size_t j = 0; j < ring.size(); ++j) es.push_back({ring[j], ring[(j + 1) % ring.size()]});
  }
  for (Vertex p : spec.pendants) {
    if (p < 0 || p >= order) throw InputError("pendant edge hangs on a missing vertex");
    es.push_back({p, order++});
  }
  return Graph(order, std::move(es));
}

namespace {

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Graph gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) throw InputError("G(n, p) needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("G(n, p) needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (unit_draw(rng) < p) es.push_back({u, v});
  return Graph(n, std::move(es));
}

Graph random_kec(int n, int k, std::uint64_t seed) {
  if (k < 1) throw InputError("random_kec needs k >= 1");
  if (n < 2 || k >= n) throw InputError("random_kec needs k <= n - 1");
  const double p = std::min(1.0, (k + 2) * std::log(static_cast<double>(n)) / n);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (unit_draw(rng) < p) es.push_back({u, v});
    Graph g(n, std::move(es));
    if (is_k_edge_connected(g, k).ok) return g;
  }
  throw InputError("random_kec: no k-edge-connected sample found");
}

std::vector<Graph> all_graphs(int n) {
  if (n < 1 || n > 7) throw InputError("all_graphs supports 1 <= n <= 7");
  // Bit k (in graph6 order x(0,1), x(0,2), x(1,2), ...) is stored at position
  // bits-1-k, so comparing masks as integers compares graph6 strings.
  const int bits = n * (n - 1) / 2;
  std::vector<std::vector<int>> position(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  std::vector<Edge> edge_at(static_cast<std::size_t>(bits));
  for (int j = 1, k = 0; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      position[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = bits - 1 - k;
      position[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = bits - 1 - k;
      edge_at[static_cast<std::size_t>(bits - 1 - k)] = {i, j};
    }

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> maps;
  do {
    std::vector<int> map(static_cast<std::size_t>(bits));
    for (int b = 0; b < bits; ++b) {
      const Edge& e = edge_at[static_cast<std::size_t>(b)];
      map[static_cast<std::size_t>(b)] =
          position[static_cast<std::size_t>(perm[static_cast<std::size_t>(e.u)])]
                  [static_cast<std::size_t>(perm[static_cast<std::size_t>(e.v)])];
    }
    maps.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));

  const std::uint64_t total = std::uint64_t{1} << bits;
  std::vector<bool> seen(total, false);
  std::vector<std::uint64_t> canonical;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (seen[mask]) continue;
    std::uint64_t best = mask;
    for (const auto& map : maps) {
      std::uint64_t image = 0;
      for (int b = 0; b < bits; ++b)
        if ((mask >> b) & 1u) image |= std::uint64_t{1} << map[static_cast<std::size_t>(b)];
      seen[image] = true;
      best = std::min(best, image);
    }
    canonical.push_back(best);
  }
  std::sort(canonical.begin(), canonical.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  std::vector<Graph> out;
  out.reserve(canonical.size());
  for (std::uint64_t mask : canonical) {
    std::vector<Edge> es;
    for (int b = 0; b < bits; ++b)
      if ((mask >> b) & 1u) es.push_back(edge_at[static_cast<std::size_t>(b)]);
    std::sort(es.begin(), es.end());
    out.emplace_back(n, std::move(es));
  }
  return out;
}

}  // namespace mck::gen
