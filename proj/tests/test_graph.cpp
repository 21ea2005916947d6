#include <doctest.h>

#include <vector>

#include "irrlab/error.hpp"
#include "irrlab/generators.hpp"
#include "irrlab/graph.hpp"

using namespace irrlab;

namespace {

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  }
  return Graph(n, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInvalidParams;
}

}  // namespace

TEST_CASE("edges are normalised, sorted and merged") {
  const std::vector<Edge> in{{3, 1}, {0, 2}, {1, 3}, {2, 0}, {0, 1}};
  const Graph g(4, in);
  CHECK(g.size() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(3) == 1);
  CHECK(g.adjacent(3, 1));
  CHECK_FALSE(g.adjacent(2, 3));
  CHECK(g == Graph(4, std::vector<Edge>{{0, 1}, {2, 0}, {3, 1}}));
}

TEST_CASE("construction errors") {
  CHECK(code_of([] { Graph(3, std::vector<Edge>{{0, 3}}); }) == ErrorCode::kOutOfRangeVertex);
  CHECK(code_of([] { Graph(3, std::vector<Edge>{{-1, 2}}); }) == ErrorCode::kOutOfRangeVertex);
  CHECK(code_of([] { Graph(3, std::vector<Edge>{{1, 1}}); }) == ErrorCode::kSelfLoop);
}

TEST_CASE("degree sequence is descending") {
  const auto ds = degree_sequence(generate_star(5));
  CHECK(ds.degrees == std::vector<std::int32_t>{4, 1, 1, 1, 1});
  CHECK(ds.sum() == 8);
  CHECK(ds.max() == 4);
  CHECK(ds.min() == 1);
}

TEST_CASE("structural predicates") {
  CHECK(is_tree(generate_path(6)));
  CHECK_FALSE(is_tree(cycle(6)));
  CHECK_FALSE(is_tree(Graph(4, std::vector<Edge>{{0, 1}, {2, 3}})));
  CHECK(is_connected(Graph()));
  CHECK_FALSE(is_connected(Graph(2, std::vector<Edge>{})));
  CHECK(is_complete(complete(5)));
  CHECK_FALSE(is_complete(cycle(5)));
  CHECK(is_regular(cycle(7)));
  CHECK(is_regular(petersen()));
  CHECK_FALSE(is_regular(generate_path(3)));
}

TEST_CASE("bipartition puts each component's lowest vertex in part one") {
  const Graph g(6, std::vector<Edge>{{0, 3}, {1, 3}, {2, 4}, {4, 5}});
  const auto parts = find_bipartition(g);
  REQUIRE(parts);
  CHECK(parts->part1 == std::vector<Vertex>{0, 1, 2, 5});
  CHECK(parts->part2 == std::vector<Vertex>{3, 4});
  CHECK_FALSE(find_bipartition(cycle(5)));
  CHECK(find_bipartition(cycle(6)));
}

TEST_CASE("hamiltonicity") {
  CHECK(is_hamiltonian(cycle(8)));
  CHECK(is_hamiltonian(complete(4)));
  CHECK_FALSE(is_hamiltonian(generate_star(5)));
  CHECK_FALSE(is_hamiltonian(generate_path(5)));
  CHECK_FALSE(is_hamiltonian(petersen()));
  CHECK_FALSE(is_hamiltonian(complete(2)));
  CHECK(is_hamiltonian(generate_complete_bipartite(3, 3)));
  CHECK_FALSE(is_hamiltonian(generate_complete_bipartite(2, 3)));
  CHECK(code_of([] { is_hamiltonian(cycle(13)); }) == ErrorCode::kTooLarge);
}

TEST_CASE("vertex and edge deletion") {
  const Graph p = generate_path(4);
  const Graph g = delete_vertex(p, 1);
  CHECK(g.order() == 3);
  CHECK(g.edges() == std::vector<Edge>{{1, 2}});
  const Graph h = delete_edge(p, {1, 2});
  CHECK(h.size() == 2);
  CHECK_FALSE(is_connected(h));
}

TEST_CASE("relabel maps v to perm[v]") {
  const Graph s = generate_star(4);
  const std::vector<Vertex> perm{3, 0, 1, 2};
  const Graph r = relabel(s, perm);
  CHECK(r.degree(3) == 3);
  CHECK(r.adjacent(3, 0));
  CHECK(r.adjacent(3, 2));
}
