#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace irrlab {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
// Edges are stored normalized (u < v) and sorted lexicographically, so two
// graphs with the same edge set compare equal regardless of input order.
class Graph {
 public:
  Graph() : Graph(1, {}) {}

  // Throws Error{kOutOfRangeVertex} / Error{kSelfLoop}; duplicate pairs are merged.
  Graph(int n, std::span<const Edge> pairs);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const noexcept { return degrees_[static_cast<std::size_t>(v)]; }
  const std::vector<std::int32_t>& degrees() const noexcept { return degrees_; }

  bool adjacent(Vertex u, Vertex v) const noexcept;

  int max_degree() const noexcept;
  int min_degree() const noexcept;

  bool operator==(const Graph& other) const noexcept {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::int32_t> degrees_;
};

Graph from_edge_list(int n, std::span<const Edge> pairs);

// Degrees sorted descending: first entry is the maximum degree, last the minimum.
struct DegreeSequence {
  std::vector<std::int32_t> degrees;

  int order() const noexcept { return static_cast<int>(degrees.size()); }
  std::int64_t sum() const noexcept;
  int max() const noexcept { return degrees.empty() ? 0 : degrees.front(); }
  int min() const noexcept { return degrees.empty() ? 0 : degrees.back(); }
};

DegreeSequence degree_sequence(const Graph& g);

struct Bipartition {
  std::vector<Vertex> part1;
  std::vector<Vertex> part2;
};

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_complete(const Graph& g);
bool is_regular(const Graph& g);

// Two-colouring by BFS. Within each component the lowest-index vertex goes to
// part1. Returns nullopt if the graph has an odd cycle.
std::optional<Bipartition> find_bipartition(const Graph& g);

inline constexpr int kHamiltonianLimit = 12;

// Exhaustive backtracking; throws Error{kTooLarge} above kHamiltonianLimit.
bool is_hamiltonian(const Graph& g);

// Graph with vertex v removed; remaining vertices keep their relative order.
Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_edge(const Graph& g, const Edge& e);

// Relabel: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace irrlab
