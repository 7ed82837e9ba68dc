#include "mck/coloring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mck/error.hpp"

namespace mck {

EdgeColoring::EdgeColoring(std::vector<int> raw) : assignment_(std::move(raw)) {
  if (assignment_.empty()) throw InputError("a coloring needs at least one edge");
  std::map<int, int> renumber;
  for (int& c : assignment_) {
    if (c < 0) throw InputError("color ids must be non-negative");
    auto [it, inserted] = renumber.emplace(c, static_cast<int>(renumber.size()));
    c = it->second;
  }
  colors_ = static_cast<int>(renumber.size());
}

EdgeColoring EdgeColoring::monochromatic(int m) { return EdgeColoring(std::vector<int>(static_cast<std::size_t>(m), 0)); }

EdgeColoring EdgeColoring::rainbow(int m) {
  std::vector<int> raw(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) raw[static_cast<std::size_t>(i)] = i;
  return EdgeColoring(std::move(raw));
}

EdgeColoring EdgeColoring::single_class(int m, std::span<const EdgeIndex> members) {
  std::vector<int> raw(static_cast<std::size_t>(m), -1);
  for (EdgeIndex e : members) raw.at(static_cast<std::size_t>(e)) = 0;
  int fresh = 1;
  for (int& c : raw)
    if (c == -1) c = fresh++;
  return EdgeColoring(std::move(raw));
}

bool EdgeColoring::is_normalized(std::span<const int> raw) {
  int next = 0;
  for (int c : raw) {
    if (c < 0 || c > next) return false;
    if (c == next) ++next;
  }
  return !raw.empty();
}

ParsedColoring parse_coloring(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> raw;
  std::string token;
  std::size_t index = 0;
  while (in >> token) {
    std::size_t used = 0;
    long long value = -1;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || value < 0 || value > 1'000'000'000)
      throw ParseError("coloring: expected a non-negative integer", index);
    raw.push_back(static_cast<int>(value));
    ++index;
  }
  const bool normalized = EdgeColoring::is_normalized(raw);
  return {EdgeColoring(std::move(raw)), !normalized};
}

std::string to_coloring_line(const EdgeColoring& c) {
  std::string out;
  for (std::size_t i = 0; i < c.assignment().size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(c.assignment()[i]);
  }
  return out;
}

namespace {

void require_match(const Graph& g, const EdgeColoring& c) {
  if (c.edge_count() != g.size())
    throw InputError("coloring has " + std::to_string(c.edge_count()) + " entries but the graph has " +
                     std::to_string(g.size()) + " edges");
}

void require_pair(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw InputError("vertex out of range");
  if (u == v) throw InputError("monochromatic path counting needs u != v");
}

std::vector<std::vector<EdgeIndex>> class_edge_lists(const Graph& g, const EdgeColoring& c) {
  require_match(g, c);
  std::vector<std::vector<EdgeIndex>> out(static_cast<std::size_t>(c.color_count()));
  for (EdgeIndex e = 0; e < g.size(); ++e) out[static_cast<std::size_t>(c.color(e))].push_back(e);
  return out;
}

}  // namespace

std::vector<ColorClass> color_classes(const Graph& g, const EdgeColoring& c) {
  auto lists = class_edge_lists(g, c);
  std::vector<ColorClass> out;
  out.reserve(lists.size());
  for (std::size_t i = 0; i < lists.size(); ++i) {
    ColorClass cls;
    cls.color = static_cast<int>(i);
    cls.edges = std::move(lists[i]);
    for (EdgeIndex e : cls.edges) {
      cls.vertices.push_back(g.edge(e).u);
      cls.vertices.push_back(g.edge(e).v);
    }
    std::sort(cls.vertices.begin(), cls.vertices.end());
    cls.vertices.erase(std::unique(cls.vertices.begin(), cls.vertices.end()), cls.vertices.end());
    cls.trivial = cls.edges.size() == 1;
    out.push_back(std::move(cls));
  }
  return out;
}

namespace {

std::vector<EdgeDisjointPaths> class_engines(const Graph& g, const EdgeColoring& c) {
  std::vector<EdgeDisjointPaths> engines;
  for (const auto& edges : class_edge_lists(g, c)) engines.emplace_back(g, edges);
  return engines;
}

PathCount count_with(std::vector<EdgeDisjointPaths>& engines, Vertex u, Vertex v) {
  PathCount out;
  out.per_color.reserve(engines.size());
  for (auto& engine : engines) {
    const int paths = engine.touches(u) && engine.touches(v) ? engine.max_paths(u, v) : 0;
    out.per_color.push_back(paths);
    out.total += paths;
  }
  return out;
}

}  // namespace

PathCount count_monochromatic_paths(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v) {
  require_pair(g, u, v);
  auto engines = class_engines(g, c);
  return count_with(engines, u, v);
}

std::string_view to_string(Mode mode) { return mode == Mode::mc ? "mc" : "umc"; }

VerificationReport verify(const Graph& g, const EdgeColoring& c, int k, Mode mode, VerifyOptions options) {
  if (k < 1) throw InputError("k must be positive");
  auto engines = class_engines(g, c);
  VerificationReport report;
  report.mode = mode;
  report.k = k;
  report.pass = true;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      PathCount counts = count_with(engines, u, v);
      const auto best = std::max_element(counts.per_color.begin(), counts.per_color.end());
      const int best_count = best == counts.per_color.end() ? 0 : *best;
      const bool ok = mode == Mode::mc ? counts.total >= k : best_count >= k;
      if (options.collect_pairs)
        report.pairs.push_back({u, v, counts.total,
                                static_cast<int>(best - counts.per_color.begin()), best_count});
      if (!ok && report.pass) {
        report.pass = false;
        report.witness = VerificationReport::Witness{u, v, std::move(counts)};
        if (!options.collect_pairs) return report;
      }
    }
  }
  return report;
}

VerificationReport is_mc_k(const Graph& g, const EdgeColoring& c, int k, VerifyOptions options) {
  return verify(g, c, k, Mode::mc, options);
}

VerificationReport is_umc_k(const Graph& g, const EdgeColoring& c, int k, VerifyOptions options) {
  return verify(g, c, k, Mode::umc, options);
}

ColoringChecker::ColoringChecker(const Graph& g, int k, Mode mode) : graph_(&g), k_(k), mode_(mode) {
  if (k < 1) throw InputError("k must be positive");
}

bool ColoringChecker::passes(std::span<const int> assignment, int color_count) {
  const Graph& g = *graph_;
  const int n = g.order();
  class_edges_.assign(static_cast<std::size_t>(color_count), {});
  for (EdgeIndex e = 0; e < g.size(); ++e)
    class_edges_[static_cast<std::size_t>(assignment[static_cast<std::size_t>(e)])].push_back(e);

  // Class degrees give a cheap upper bound on every per-class flow.
  std::vector<int> degree(static_cast<std::size_t>(color_count * n), 0);
  auto deg = [&](int c, Vertex v) -> int& { return degree[static_cast<std::size_t>(c * n + v)]; };
  for (EdgeIndex e = 0; e < g.size(); ++e) {
    const int c = assignment[static_cast<std::size_t>(e)];
    ++deg(c, g.edge(e).u);
    ++deg(c, g.edge(e).v);
  }

  std::vector<std::optional<EdgeDisjointPaths>> engines(static_cast<std::size_t>(color_count));
  auto engine = [&](int c) -> EdgeDisjointPaths& {
    auto& slot = engines[static_cast<std::size_t>(c)];
    if (!slot) slot.emplace(g, class_edges_[static_cast<std::size_t>(c)]);
    return *slot;
  };

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (mode_ == Mode::mc) {
        int bound = 0;
        for (int c = 0; c < color_count; ++c) bound += std::min(deg(c, u), deg(c, v));
        if (bound < k_) return false;
        int total = 0;
        for (int c = 0; c < color_count && total < k_; ++c) {
          if (deg(c, u) == 0 || deg(c, v) == 0) continue;
          if (deg(c, u) == 1 && deg(c, v) == 1 && class_edges_[static_cast<std::size_t>(c)].size() == 1) {
            ++total;
            continue;
          }
          total += engine(c).max_paths(u, v, k_ - total);
        }
        if (total < k_) return false;
      } else {
        bool found = false;
        for (int c = 0; c < color_count && !found; ++c) {
          if (deg(c, u) < k_ || deg(c, v) < k_) continue;
          found = engine(c).max_paths(u, v, k_) >= k_;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace mck
