#include "irrlab/generators.hpp"

#include <queue>
#include <random>
#include <string>
#include <vector>

#include "irrlab/error.hpp"

namespace irrlab {

Graph generate_path(int n) {
  if (n < 2) throw Error(ErrorCode::kTooSmall, "path needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph generate_star(int n) {
  if (n < 2) throw Error(ErrorCode::kTooSmall, "star needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

Graph generate_complete_bipartite(int s, int t) {
  if (s < 1 || t < 1) throw Error(ErrorCode::kTooSmall, "complete bipartite needs s, t >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < s; ++u) {
    for (Vertex v = s; v < s + t; ++v) edges.emplace_back(u, v);
  }
  return Graph(s + t, edges);
}

Graph generate_caterpillar(std::span<const int> spine) {
  const int k = static_cast<int>(spine.size());
  if (k < 2) throw Error(ErrorCode::kInvalidSpine, "spine needs at least two vertices");
  if (spine.front() < 1 || spine.back() < 1) throw Error(ErrorCode::kInvalidSpine, "end degree below 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
  Vertex next = k;
  for (int i = 0; i < k; ++i) {
    const bool end = i == 0 || i == k - 1;
    if (!end && spine[static_cast<std::size_t>(i)] < 2) {
      throw Error(ErrorCode::kInvalidSpine, "interior degree below 2 at position " + std::to_string(i));
    }
    const int leaves = spine[static_cast<std::size_t>(i)] - (end ? 1 : 2);
    for (int l = 0; l < leaves; ++l) edges.emplace_back(i, next++);
  }
  return Graph(next, edges);
}

Graph generate_example_construction(const ExampleConstructionParams& params) {
  const int n = params.n;
  const int m = params.m;
  if (n < 11 || m < 11) {
    throw Error(ErrorCode::kInvalidParams,
                "construction needs n >= 11 and m >= 11, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
  auto u = [](int i) { return static_cast<Vertex>(i - 1); };
  auto v = [n](int j) { return static_cast<Vertex>(n + j - 1); };

  std::vector<Edge> edges;
  auto row = [&](int i, int first, int last) {
    for (int j = first; j <= last; ++j) {
      if (j >= 1) edges.emplace_back(u(i), v(j));
    }
  };
  row(1, 2, m - 1);
  row(2, 3, m - 1);
  row(3, 3, m - 1);
  row(4, 4, m - 2);
  row(5, 3, m - 3);
  row(6, 4, m - 2);
  row(7, 5, m - 4);
  row(8, 6, m - 4);
  row(9, 7, m - 4);
  for (int i = 10; i <= n - 1; ++i) row(i, i - 2, m - 4);
  edges.emplace_back(u(n), v(1));
  edges.emplace_back(u(n), v(2));
  edges.emplace_back(u(n), v(m));
  return Graph(n + m, edges);
}

Graph tree_from_pruefer(std::span<const int> sequence) {
  const int n = static_cast<int>(sequence.size()) + 2;
  std::vector<int> remaining(static_cast<std::size_t>(n), 1);
  for (int x : sequence) {
    if (x < 0 || x >= n) throw Error(ErrorCode::kOutOfRangeVertex, "Pruefer entry " + std::to_string(x));
    ++remaining[static_cast<std::size_t>(x)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (remaining[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (int x : sequence) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--remaining[static_cast<std::size_t>(x)] == 1) leaves.push(x);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::kTooSmall, "random tree needs n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> sequence(static_cast<std::size_t>(n - 2));
  for (int& x : sequence) x = pick(rng);
  return tree_from_pruefer(sequence);
}

Graph random_bipartite(int n1, int n2, double edge_prob, std::uint64_t seed) {
  if (n1 < 1 || n2 < 1) throw Error(ErrorCode::kTooSmall, "random bipartite needs n1, n2 >= 1");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw Error(ErrorCode::kBadProbability, "edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n1; ++a) {
    for (Vertex b = n1; b < n1 + n2; ++b) {
      if (coin(rng) < edge_prob) edges.emplace_back(a, b);
    }
  }
  return Graph(n1 + n2, edges);
}

}  // namespace irrlab
