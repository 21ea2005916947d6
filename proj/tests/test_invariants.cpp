#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>
#include <vector>

#include "irrlab/enumeration.hpp"
#include "irrlab/error.hpp"
#include "irrlab/generators.hpp"
#include "irrlab/invariants.hpp"

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

std::vector<Graph> sample_graphs() {
  std::mt19937_64 rng(2024);
  std::vector<Graph> out;
  for (int i = 0; i < 1000; ++i) out.push_back(random_graph(1 + static_cast<int>(rng() % 40), 0.05 + (i % 10) * 0.09, rng));
  for (int n = 1; n <= 10; ++n) {
    for (auto& t : enumerate_free_trees(n)) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

TEST_CASE("path on four vertices") {
  const Graph p = generate_path(4);
  const auto b = invariant_bundle(p);
  CHECK(b.n == 4);
  CHECK(b.m == 3);
  CHECK(b.irr == 2);
  CHECK(b.sigma == 2);
  CHECK(b.irr_t == 4);
  CHECK(b.m1 == 10);
  CHECK(b.m2 == 8);
  REQUIRE(b.sigma2);
  CHECK(*b.sigma2 == 2);
  CHECK(b.deg_ave == Rational(3, 2));
  CHECK(general_albertson(p, 1.0) == doctest::Approx(2.0));
  CHECK(general_albertson(p, 2.0) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("stars") {
  for (int n = 2; n <= 12; ++n) {
    const auto b = invariant_bundle(generate_star(n));
    CHECK(b.irr == static_cast<std::int64_t>(n - 1) * (n - 2));
    CHECK(b.sigma == static_cast<std::int64_t>(n - 1) * (n - 2) * (n - 2));
    CHECK(b.irr_t == static_cast<std::int64_t>(n - 1) * (n - 2));
  }
}

TEST_CASE("index identities over random graphs and all small trees") {
  for (const auto& g : sample_graphs()) {
    const auto b = invariant_bundle(g);
    CHECK(b.irr == definitional::albertson(g));
    CHECK(b.sigma == definitional::sigma(g));
    CHECK(b.m1 == definitional::zagreb_m1(g));
    CHECK(b.m2 == definitional::zagreb_m2(g));
    CHECK(total_irregularity_formula(g) == total_irregularity_pairwise(g));
    std::int64_t cubes = 0;
    for (auto d : g.degrees()) cubes += std::int64_t{d} * d * d;
    CHECK(b.sigma == cubes - 2 * b.m2);
    CHECK(b.irr <= b.sigma);
    CHECK(2 * b.m == b.n * b.deg_ave);
    if (b.m > 0) CHECK(general_albertson(g, 1.0) == doctest::Approx(static_cast<double>(b.irr)));
  }
}

TEST_CASE("sigma2 modes and errors") {
  const Graph s = generate_star(5);
  CHECK(sigma2_min_nonadjacent(s) == 2);
  CHECK(sigma2_min_nonadjacent(s, Sigma2Mode::kLiteral) == 2);
  const Graph k = generate_complete_bipartite(2, 3);
  CHECK(sigma2_min_nonadjacent(k) == 4);
  CHECK(sigma2_min_nonadjacent(k, Sigma2Mode::kLiteral) == 4);
  const Graph p = generate_path(3);
  CHECK(sigma2_min_nonadjacent(p) == 2);
  std::vector<Edge> k4;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) k4.emplace_back(a, b);
  }
  CHECK_THROWS_AS(sigma2_min_nonadjacent(Graph(4, k4)), Error);
  CHECK_FALSE(invariant_bundle(Graph(4, k4)).sigma2);
  CHECK_THROWS_AS(general_albertson(p, 0.0), Error);
  CHECK_THROWS_AS(general_albertson(p, -1.0), Error);
}

TEST_CASE("caterpillar closed form matches the generated graph") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 6);
    std::vector<int> spine(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      const int lo = (i == 0 || i == k - 1) ? 1 : 2;
      spine[static_cast<std::size_t>(i)] = lo + static_cast<int>(rng() % 6);
    }
    CAPTURE(trial);
    CHECK(caterpillar_irr_closed_form(spine) == albertson(generate_caterpillar(spine)));
  }
  const std::vector<int> bad{2, 1, 2};
  CHECK_THROWS_AS(caterpillar_irr_closed_form(bad), Error);
}
