#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mck/connectivity.hpp"
#include "mck/graph.hpp"

namespace mck {

/// Color id per edge index, normalized so ids are 0..t-1 in order of first
/// occurrence. Equal colorings therefore have equal assignments.
class EdgeColoring {
 public:
  /// Renumbers `raw` into normalized form. Throws InputError on an empty or
  /// negative assignment.
  explicit EdgeColoring(std::vector<int> raw);

  static EdgeColoring monochromatic(int m);
  static EdgeColoring rainbow(int m);

  /// Every edge in `members` gets one shared color; all other edges get fresh
  /// distinct colors.
  static EdgeColoring single_class(int m, std::span<const EdgeIndex> members);

  /// True when `raw` is already normalized.
  static bool is_normalized(std::span<const int> raw);

  int edge_count() const noexcept { return static_cast<int>(assignment_.size()); }
  int color_count() const noexcept { return colors_; }
  int color(EdgeIndex e) const { return assignment_.at(static_cast<std::size_t>(e)); }
  const std::vector<int>& assignment() const noexcept { return assignment_; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
  friend auto operator<=>(const EdgeColoring& a, const EdgeColoring& b) { return a.assignment_ <=> b.assignment_; }

 private:
  std::vector<int> assignment_;
  int colors_ = 0;
};

/// Coloring file: one line of m whitespace-separated non-negative integers.
/// The returned flag reports whether the ids had to be renormalized.
struct ParsedColoring {
  EdgeColoring coloring;
  bool renormalized = false;
};
ParsedColoring parse_coloring(std::string_view text);
std::string to_coloring_line(const EdgeColoring& c);

/// Subgraph induced by one color.
struct ColorClass {
  int color = 0;
  std::vector<EdgeIndex> edges;
  std::vector<Vertex> vertices;
  bool trivial = false;
};

/// One class per color id, in id order. Throws InputError on an edge-count mismatch.
std::vector<ColorClass> color_classes(const Graph& g, const EdgeColoring& c);

struct PathCount {
  int total = 0;
  std::vector<int> per_color;
};

/// Maximum number of pairwise edge-disjoint monochromatic u-v paths. Classes
/// are edge-disjoint and each monochromatic path stays inside one class, so the
/// maximum is the sum of per-class local edge connectivities.
PathCount count_monochromatic_paths(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v);

enum class Mode { mc, umc };

std::string_view to_string(Mode mode);

struct PairSummary {
  Vertex u = 0;
  Vertex v = 0;
  int total = 0;
  int best_color = 0;
  int best_count = 0;
};

struct VerificationReport {
  Mode mode = Mode::mc;
  int k = 0;
  bool pass = false;
  /// First failing pair in lexicographic order.
  struct Witness {
    Vertex u = 0;
    Vertex v = 0;
    PathCount counts;
  };
  std::optional<Witness> witness;
  std::vector<PairSummary> pairs;
};

struct VerifyOptions {
  bool collect_pairs = false;
};

VerificationReport is_mc_k(const Graph& g, const EdgeColoring& c, int k, VerifyOptions options = {});
VerificationReport is_umc_k(const Graph& g, const EdgeColoring& c, int k, VerifyOptions options = {});
VerificationReport verify(const Graph& g, const EdgeColoring& c, int k, Mode mode, VerifyOptions options = {});

/// Pass/fail only, with per-class flow engines built once and early exit at k.
/// Intended for search loops that test many colorings of one graph.
class ColoringChecker {
 public:
  ColoringChecker(const Graph& g, int k, Mode mode);

  /// `assignment` is any color id per edge in 0..color_count-1.
  bool passes(std::span<const int> assignment, int color_count);

 private:
  const Graph* graph_;
  int k_;
  Mode mode_;
  std::vector<std::vector<EdgeIndex>> class_edges_;
};

}  // namespace mck
