#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mck/graph.hpp"

namespace mck {

/// Decodes one graph6 line. Edges come out in lexicographic (u, v) order.
/// An optional ">>graph6<<" header and a trailing newline are accepted.
/// Throws ParseError with the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Standard graph6 encoding (no header, no newline).
std::string to_graph6(const Graph& g);

/// Edge-list text: "n m" then m lines "u v". Throws ParseError with a line number.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Reads a graph file, choosing edge-list when the first non-empty line is
/// two integers and graph6 otherwise.
Graph read_graph_file(const std::filesystem::path& path);

/// One graph6 entry per non-empty line; duplicates (same string) are dropped.
struct CorpusEntry {
  std::string id;
  Graph graph;
};
std::vector<CorpusEntry> read_corpus(const std::filesystem::path& path);
std::vector<CorpusEntry> parse_corpus(std::string_view text);

}  // namespace mck
