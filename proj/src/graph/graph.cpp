#include "irrlab/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "irrlab/error.hpp"

namespace irrlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOutOfRangeVertex: return "OutOfRangeVertex";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kMalformedGraph6: return "MalformedGraph6";
    case ErrorCode::kMalformedEdgeList: return "MalformedEdgeList";
    case ErrorCode::kNonPositiveP: return "NonPositiveP";
    case ErrorCode::kCompleteGraph: return "CompleteGraph";
    case ErrorCode::kInvalidSpine: return "InvalidSpine";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kBadProbability: return "BadProbability";
    case ErrorCode::kKindMismatch: return "KindMismatch";
    case ErrorCode::kInadmissibleParams: return "InadmissibleParams";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kUnknownClaimId: return "UnknownClaimId";
    case ErrorCode::kNotAFailure: return "NotAFailure";
    case ErrorCode::kBadClassSpec: return "BadClassSpec";
  }
  return "Unknown";
}

Graph::Graph(int n, std::span<const Edge> pairs) : n_(n) {
  if (n < 1) {
    throw Error(ErrorCode::kTooSmall, "graph order must be at least 1, got " + std::to_string(n));
  }
  edges_.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kOutOfRangeVertex,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." +
                      std::to_string(n - 1));
    }
    if (u == v) throw Error(ErrorCode::kSelfLoop, "vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adjacency_.assign(static_cast<std::size_t>(n), {});
  degrees_.assign(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges_) {
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    std::sort(adjacency_[v].begin(), adjacency_[v].end());
    degrees_[v] = static_cast<std::int32_t>(adjacency_[v].size());
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& nb = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const noexcept {
  return *std::max_element(degrees_.begin(), degrees_.end());
}

int Graph::min_degree() const noexcept {
  return *std::min_element(degrees_.begin(), degrees_.end());
}

Graph from_edge_list(int n, std::span<const Edge> pairs) { return Graph(n, pairs); }

std::int64_t DegreeSequence::sum() const noexcept {
  std::int64_t s = 0;
  for (auto d : degrees) s += d;
  return s;
}

DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence seq{g.degrees()};
  std::sort(seq.degrees.begin(), seq.degrees.end(), std::greater<>());
  return seq;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

bool is_complete(const Graph& g) {
  const std::int64_t n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool is_regular(const Graph& g) { return g.max_degree() == g.min_degree(); }

std::optional<Bipartition> find_bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  for (Vertex start = 0; start < n; ++start) {
    if (colour[static_cast<std::size_t>(start)] != -1) continue;
    colour[static_cast<std::size_t>(start)] = 0;
    std::queue<Vertex> queue;
    queue.push(start);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(v)) {
        auto& cw = colour[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - colour[static_cast<std::size_t>(v)];
          queue.push(w);
        } else if (cw == colour[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < n; ++v) {
    (colour[static_cast<std::size_t>(v)] == 0 ? parts.part1 : parts.part2).push_back(v);
  }
  return parts;
}

bool is_hamiltonian(const Graph& g) {
  const int n = g.order();
  if (n > kHamiltonianLimit) {
    throw Error(ErrorCode::kTooLarge, "Hamiltonian search limited to n <= 12, got " + std::to_string(n));
  }
  if (n < 3) return false;
  if (g.min_degree() < 2) return false;

  // reach[mask] bit v: a path from vertex 0 through exactly `mask` ends at v.
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    nbr[static_cast<std::size_t>(u)] |= 1u << v;
    nbr[static_cast<std::size_t>(v)] |= 1u << u;
  }
  std::vector<std::uint32_t> reach(static_cast<std::size_t>(full) + 1, 0);
  reach[1] = 1;
  for (std::uint32_t mask = 1; mask <= full; mask += 2) {
    std::uint32_t ends = reach[mask];
    while (ends) {
      int v = __builtin_ctz(ends);
      ends &= ends - 1;
      std::uint32_t next = nbr[static_cast<std::size_t>(v)] & ~mask;
      while (next) {
        int w = __builtin_ctz(next);
        next &= next - 1;
        reach[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return (reach[full] & nbr[0]) != 0;
}

Graph delete_vertex(const Graph& g, Vertex v) {
  std::vector<Edge> kept;
  for (auto [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    kept.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
  }
  return Graph(g.order() - 1, kept);
}

Graph delete_edge(const Graph& g, const Edge& e) {
  std::vector<Edge> kept;
  for (const auto& f : g.edges()) {
    if (f != e) kept.push_back(f);
  }
  return Graph(g.order(), kept);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  std::vector<Edge> mapped;
  mapped.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) {
    mapped.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  }
  return Graph(g.order(), mapped);
}

}  // namespace irrlab
