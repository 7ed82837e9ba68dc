#pragma once

#include <cstdint>
#include <vector>

#include "mck/graph.hpp"

namespace mck::gen {

Graph complete(int n);

/// Sides 0..a-1 and a..a+b-1.
Graph complete_bipartite(int a, int b);

/// Cycle 0-1-...-(n-1)-0, n >= 3.
Graph cycle(int n);

Graph path(int n);

Graph petersen();

/// One cycle of a cactus. The first cycle is laid down on fresh vertices
/// 0..length-1; every later cycle reuses `anchor` (an existing vertex) and
/// adds length-1 fresh vertices.
struct CactusCycle {
  int length = 3;
  Vertex anchor = 0;
};

/// Cactus made of edge-disjoint cycles glued at single vertices, plus optional
/// pendant edges (each a cut edge to a fresh vertex) hung on the listed vertices.
struct CactusSpec {
  std::vector<CactusCycle> cycles;
  std::vector<Vertex> pendants;
};
Graph cactus(const CactusSpec& spec);

/// G(n, p) sample from a seeded 64-bit Mersenne twister.
Graph gnp(int n, double p, std::uint64_t seed);

/// Seeded G(n, p) with p = min(1, (k+2) ln(n) / n), resampled until k-edge-connected.
/// Throws InputError when k >= n or k < 1.
Graph random_kec(int n, int k, std::uint64_t seed);

/// All graphs on n vertices up to isomorphism, each in the canonical labeling
/// whose graph6 string is lexicographically smallest. Brute force over n!
/// relabelings, so n is capped at 7.
std::vector<Graph> all_graphs(int n);

}  // namespace mck::gen
