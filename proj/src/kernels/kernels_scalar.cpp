#include <cstdlib>

#include "irrlab/kernels.hpp"

namespace irrlab::kernels::scalar {

std::int64_t abs_diff_sum(Degrees a, Degrees b) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::abs(a[i] - b[i]);
  return total;
}

std::int64_t sq_diff_sum(Degrees a, Degrees b) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t d = a[i] - b[i];
    total += d * d;
  }
  return total;
}

std::int64_t product_sum(Degrees a, Degrees b) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::int64_t{a[i]} * b[i];
  return total;
}

std::int64_t square_sum(Degrees a) {
  std::int64_t total = 0;
  for (auto x : a) total += std::int64_t{x} * x;
  return total;
}

std::int64_t pairwise_abs_diff_sum(Degrees a) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) total += std::abs(a[i] - a[j]);
  }
  return total;
}

}  // namespace irrlab::kernels::scalar
