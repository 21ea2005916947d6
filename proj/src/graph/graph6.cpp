#include "irrlab/graph6.hpp"

#include <istream>
#include <sstream>

#include "irrlab/error.hpp"

namespace irrlab {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

int sextet(char c) {
  int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) {
    throw Error(ErrorCode::kMalformedGraph6, std::string("byte out of range: '") + c + "'");
  }
  return v;
}

bool looks_like_edge_list_header(std::string_view line) {
  std::istringstream in{std::string(line)};
  long long a = 0, b = 0;
  std::string rest;
  return static_cast<bool>(in >> a >> b) && !(in >> rest);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw Error(ErrorCode::kMalformedGraph6, "empty string");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') {
      throw Error(ErrorCode::kMalformedGraph6, "36-bit size form not supported");
    }
    if (text.size() < 4) throw Error(ErrorCode::kMalformedGraph6, "truncated size field");
    n = (sextet(text[1]) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    pos = 4;
  }
  if (n < 1) throw Error(ErrorCode::kMalformedGraph6, "graph must have at least one vertex");

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw Error(ErrorCode::kMalformedGraph6, "expected " + std::to_string(bytes) + " data bytes, got " +
                                                 std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      int word = sextet(text[pos + k / 6]);
      if (word >> (5 - k % 6) & 1) edges.emplace_back(u, v);
    }
  }
  // Padding bits must be zero for a canonical encoding.
  if (bits % 6 != 0) {
    int last = sextet(text.back());
    if (last & ((1 << (6 - bits % 6)) - 1)) {
      throw Error(ErrorCode::kMalformedGraph6, "non-zero padding bits");
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>((n >> 12 & 63) + kBias));
    out.push_back(static_cast<char>((n >> 6 & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int word = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      word = (word << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kBias));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw Error(ErrorCode::kMalformedEdgeList, "missing 'n m' header");
  if (n < 1 || m < 0) throw Error(ErrorCode::kMalformedEdgeList, "invalid header values");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw Error(ErrorCode::kMalformedEdgeList,
                  "expected " + std::to_string(m) + " edges, read " + std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kOutOfRangeVertex, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<Graph> read_graphs(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  // The first non-blank line decides the format.
  while (std::getline(in, line)) {
    if (!trim(line).empty()) break;
  }
  if (trim(line).empty()) return graphs;

  if (looks_like_edge_list_header(trim(line))) {
    std::ostringstream buffer;
    buffer << line << '\n' << in.rdbuf();
    std::istringstream all(buffer.str());
    while (true) {
      all >> std::ws;
      if (all.peek() == std::char_traits<char>::eof()) break;
      graphs.push_back(parse_edge_list(all));
    }
    return graphs;
  }
  graphs.push_back(parse_graph6(line));
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

}  // namespace irrlab
