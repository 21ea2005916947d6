#include <doctest.h>

#include <random>
#include <sstream>
#include <vector>

#include "irrlab/error.hpp"
#include "irrlab/generators.hpp"
#include "irrlab/graph6.hpp"

using namespace irrlab;

namespace {

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

TEST_CASE("known graph6 strings") {
  CHECK(write_graph6(Graph()) == "@");
  CHECK(parse_graph6("@") == Graph());
  CHECK(write_graph6(generate_path(2)) == "A_");
  CHECK(write_graph6(generate_path(4)) == "Ch");
  CHECK(write_graph6(generate_star(4)) == "Cs");
  CHECK(parse_graph6("Cs") == generate_star(4));
}

TEST_CASE("random round trips") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 80);
    std::bernoulli_distribution coin(0.1 + static_cast<double>(trial % 9) / 10.0);
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (coin(rng)) e.emplace_back(a, b);
      }
    }
    const Graph g(n, e);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("malformed graph6") {
  CHECK(code_of([] { parse_graph6(""); }) == ErrorCode::kMalformedGraph6);
  CHECK(code_of([] { parse_graph6("C"); }) == ErrorCode::kMalformedGraph6);
  CHECK(code_of([] { parse_graph6("Ch!"); }) == ErrorCode::kMalformedGraph6);
  CHECK(code_of([] { parse_graph6("~"); }) == ErrorCode::kMalformedGraph6);
}

TEST_CASE("edge lists") {
  const Graph p = generate_path(5);
  std::istringstream in(write_edge_list(p));
  CHECK(parse_edge_list(in) == p);
  std::istringstream bad("3 2\n0 1\n");
  CHECK(code_of([&] { parse_edge_list(bad); }) == ErrorCode::kMalformedEdgeList);
  std::istringstream loop("2 1\n1 1\n");
  CHECK(code_of([&] { parse_edge_list(loop); }) == ErrorCode::kSelfLoop);
}

TEST_CASE("read_graphs detects the format") {
  std::istringstream g6("Ch\n\nCs\n");
  const auto a = read_graphs(g6);
  REQUIRE(a.size() == 2);
  CHECK(a[1] == generate_star(4));
  std::istringstream el("4 3\n0 1\n1 2\n2 3\n");
  const auto b = read_graphs(el);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == generate_path(4));
}
