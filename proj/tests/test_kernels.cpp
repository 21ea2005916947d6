#include <doctest.h>

#include <random>
#include <vector>

#include "irrlab/kernels.hpp"

using namespace irrlab;

TEST_SUITE("kernels") {
  TEST_CASE("every available table matches the scalar reference") {
    std::mt19937_64 rng(7);
    const auto tables = kernels::available_tables();
    REQUIRE(!tables.empty());
    CHECK(tables.front() == &kernels::scalar_table());
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t len = rng() % 300;
      const int cap = trial % 3 == 0 ? 32767 : 1 + static_cast<int>(rng() % 40);
      std::uniform_int_distribution<std::int32_t> deg(0, cap);
      std::vector<std::int32_t> a(len), b(len);
      for (auto& x : a) x = deg(rng);
      for (auto& x : b) x = deg(rng);
      for (const auto* t : tables) {
        CAPTURE(t->name);
        CHECK(t->abs_diff_sum(a, b) == kernels::scalar::abs_diff_sum(a, b));
        CHECK(t->sq_diff_sum(a, b) == kernels::scalar::sq_diff_sum(a, b));
        CHECK(t->product_sum(a, b) == kernels::scalar::product_sum(a, b));
        CHECK(t->square_sum(a) == kernels::scalar::square_sum(a));
        CHECK(t->pairwise_abs_diff_sum(a) == kernels::scalar::pairwise_abs_diff_sum(a));
      }
    }
  }

  TEST_CASE("scalar reference on small inputs") {
    const std::vector<std::int32_t> a{3, 1, 2};
    const std::vector<std::int32_t> b{1, 1, 5};
    CHECK(kernels::scalar::abs_diff_sum(a, b) == 5);
    CHECK(kernels::scalar::sq_diff_sum(a, b) == 13);
    CHECK(kernels::scalar::product_sum(a, b) == 14);
    CHECK(kernels::scalar::square_sum(a) == 14);
    CHECK(kernels::scalar::pairwise_abs_diff_sum(a) == 4);
    CHECK(kernels::scalar::pairwise_abs_diff_sum({}) == 0);
  }

  TEST_CASE("active table honours the override") {
    const auto& before = kernels::active();
    kernels::set_active(kernels::scalar_table());
    CHECK(kernels::active().name == kernels::scalar_table().name);
    kernels::set_active(before);
  }
}
