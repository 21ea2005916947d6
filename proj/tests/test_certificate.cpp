#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "irrlab/certificate.hpp"
#include "irrlab/enumeration.hpp"
#include "irrlab/error.hpp"
#include "irrlab/generators.hpp"
#include "oracles.hpp"

using namespace irrlab;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) e.emplace_back(a, b);
    }
  }
  return Graph(n, e);
}

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace

TEST_CASE("certificate is invariant under relabelling") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 12;
    const Graph g = random_graph(n, 0.15 + 0.1 * (trial % 7), rng);
    const Graph h = shuffled(g, rng);
    CHECK(certificate(g) == certificate(h));
    CHECK(canonical_graph(g) == canonical_graph(h));
  }
}

TEST_CASE("regular graphs with twins and symmetry") {
  std::mt19937_64 rng(5);
  for (int s = 1; s <= 6; ++s) {
    const Graph k = generate_complete_bipartite(s, 6 - s + 1);
    CHECK(certificate(k) == certificate(shuffled(k, rng)));
  }
  std::vector<Edge> c12;
  for (int i = 0; i < 12; ++i) c12.emplace_back(i, (i + 1) % 12);
  std::vector<Edge> two_c6;
  for (int i = 0; i < 6; ++i) {
    two_c6.emplace_back(i, (i + 1) % 6);
    two_c6.emplace_back(6 + i, 6 + (i + 1) % 6);
  }
  CHECK(certificate(Graph(12, c12)) != certificate(Graph(12, two_c6)));
}

TEST_CASE("canonical form order reproduces canonical graph") {
  std::mt19937_64 rng(3);
  const Graph g = random_graph(9, 0.4, rng);
  const auto form = canonical_form(g);
  std::vector<Vertex> inverse(form.order.size());
  for (std::size_t i = 0; i < form.order.size(); ++i) inverse[static_cast<std::size_t>(form.order[i])] = static_cast<Vertex>(i);
  CHECK(relabel(g, inverse) == canonical_graph(g));
}

TEST_CASE("certificate agrees with brute-force isomorphism") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 5;
    const Graph a = random_graph(n, 0.5, rng);
    const Graph b = random_graph(n, 0.5, rng);
    CHECK((certificate(a) == certificate(b)) == oracle::brute_isomorphic(a, b));
  }
}

TEST_CASE("certificate distinguishes every class on up to six vertices") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> brute;
    std::set<GraphCertificate> library;
    std::vector<Edge> pairs;
    for (Vertex b = 0; b < n; ++b) {
      for (Vertex a = 0; a < b; ++a) pairs.emplace_back(a, b);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<Edge> e;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1) e.push_back(pairs[i]);
      }
      const Graph g(n, e);
      brute.insert(oracle::brute_canonical(g));
      library.insert(certificate(g));
    }
    CHECK(library.size() == brute.size());
  }
}

TEST_CASE("connected graph enumeration matches brute force") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto graphs = enumerate_connected(n);
    CHECK(graphs.size() == oracle::all_graph_classes(n, true).size());
    std::set<std::uint64_t> codes;
    for (const auto& g : graphs) {
      CHECK(is_connected(g));
      codes.insert(oracle::brute_canonical(g));
    }
    CHECK(codes.size() == graphs.size());
  }
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  CHECK(enumerate_connected(7).size() == expected[6]);
}

TEST_CASE("certificate size limit") {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < 13; ++i) e.emplace_back(i, i + 1);
  CHECK_THROWS_AS(certificate(Graph(13, e)), Error);
}
