#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mck/coloring.hpp"
#include "mck/graph.hpp"

namespace mck {

/// Exact non-negative rational kept in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  std::int64_t floor() const { return num / den; }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend auto operator<=>(const Rational& a, const Rational& b) { return a.num * b.den <=> b.num * a.den; }
};

/// Pairwise edge-disjoint spanning trees, each a sorted edge-index list.
struct TreePacking {
  std::vector<std::vector<EdgeIndex>> trees;
  int k() const { return static_cast<int>(trees.size()); }
};

/// True when every tree spans g and the trees are pairwise disjoint.
bool is_valid_packing(const Graph& g, const TreePacking& packing);

/// Maximum number of edge-disjoint spanning trees, with the trees.
/// Throws InputError for a disconnected graph or n < 2.
TreePacking tree_packing_number(const Graph& g);

struct PsiResult {
  Rational psi;
  int Psi = 0;
  std::vector<int> witness;  // block label per vertex (restricted growth string)
};

/// Exact min over vertex partitions with >= 2 blocks of e(G/P) / (|P| - 1).
/// Throws BudgetExceeded when n > max_order.
PsiResult psi_oracle(const Graph& g, int max_order = 12);

/// Colors k disjoint spanning trees 0..k-1 and every other edge with its own
/// fresh color. Throws InputError when fewer than k trees exist or k < 2.
EdgeColoring packing_coloring(const Graph& g, int k);

}  // namespace mck
