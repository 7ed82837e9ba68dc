#include "mck/graph_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include "mck/error.hpp"

namespace mck {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kBias = 63;
constexpr std::uint64_t kMaxOrder = 1u << 20;

std::string_view strip_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = strip_line_end(text);
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();

  for (std::size_t i = pos; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > 126) throw ParseError("graph6: byte outside the printable range 63..126", i);
  }
  if (pos >= text.size()) throw ParseError("graph6: missing length header", pos);

  auto value = [&](std::size_t i) { return static_cast<std::uint64_t>(text[i] - kBias); };
  std::uint64_t n = 0;
  if (text[pos] != '~') {
    n = value(pos);
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    if (pos + 8 > text.size()) throw ParseError("graph6: truncated 8-byte length header", pos);
    for (std::size_t i = pos + 2; i < pos + 8; ++i) n = (n << 6) | value(i);
    pos += 8;
  } else {
    if (pos + 4 > text.size()) throw ParseError("graph6: truncated 4-byte length header", pos);
    for (std::size_t i = pos + 1; i < pos + 4; ++i) n = (n << 6) | value(i);
    pos += 4;
  }
  if (n > kMaxOrder) throw ParseError("graph6: vertex count too large", 0);

  const std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (text.size() - pos < body) throw ParseError("graph6: edge data shorter than the header implies", text.size());
  if (text.size() - pos > body) throw ParseError("graph6: trailing garbage", pos + body);

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const std::uint64_t chunk = value(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1u) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  for (; k < body * 6; ++k)
    if ((value(pos + k / 6) >> (5 - k % 6)) & 1u) throw ParseError("graph6: nonzero padding bits", pos + k / 6);

  std::sort(edges.begin(), edges.end());
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63u) + kBias));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63u) + kBias));
  }
  const std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  std::vector<std::uint8_t> chunks((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    const auto i = static_cast<std::uint64_t>(e.u);
    const auto j = static_cast<std::uint64_t>(e.v);
    const std::uint64_t k = j * (j - 1) / 2 + i;
    chunks[k / 6] |= static_cast<std::uint8_t>(1u << (5 - k % 6));
  }
  for (std::uint8_t c : chunks) out.push_back(static_cast<char>(c + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto read_pair = [&](long long& a, long long& b) {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra)) throw ParseError("edge list: expected two integers", line_no);
  };

  if (!next_content_line()) throw ParseError("edge list: empty input", 0);
  long long n = 0;
  long long m = 0;
  read_pair(n, m);
  if (n < 0 || m < 0 || n > static_cast<long long>(kMaxOrder))
    throw ParseError("edge list: invalid header counts", line_no);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line()) throw ParseError("edge list: fewer edges than the header declares", line_no);
    long long u = 0;
    long long v = 0;
    read_pair(u, v);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: endpoint out of range", line_no);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (next_content_line()) throw ParseError("edge list: more edges than the header declares", line_no);
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const InputError& e) {
    throw ParseError(std::string("edge list: ") + e.what(), line_no);
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long long a = 0;
    long long b = 0;
    std::string extra;
    return static_cast<bool>(ls >> a >> b) && !(ls >> extra);
  }
  return false;
}

}  // namespace

Graph read_graph_file(const std::filesystem::path& path) {
  const std::string text = slurp(path);
  if (looks_like_edge_list(text)) return parse_edge_list(text);
  const auto corpus = parse_corpus(text);
  if (corpus.size() != 1) throw InputError(path.string() + ": expected exactly one graph6 line");
  return corpus.front().graph;
}

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::set<std::string> seen;
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = strip_line_end(text.substr(line_start, line_end - line_start));
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    if (!line.empty() && seen.emplace(line).second) {
      try {
        out.push_back({std::string(line), parse_graph6(line)});
      } catch (const ParseError& e) {
        throw ParseError(std::string("corpus: ") + e.what(), line_start + e.position());
      }
    }
    line_start = line_end + 1;
  }
  return out;
}

std::vector<CorpusEntry> read_corpus(const std::filesystem::path& path) {
  return parse_corpus(slurp(path));
}

}  // namespace mck
