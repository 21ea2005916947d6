#include "irrlab/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

#include <cstdlib>

namespace irrlab::kernels::neon {
namespace {

template <typename Lane, typename Tail>
std::int64_t pair_reduce(Degrees a, Degrees b, Lane lane, Tail tail) {
  const std::size_t n = a.size();
  int64x2_t acc = vdupq_n_s64(0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = vpadalq_s32(acc, lane(vld1q_s32(a.data() + i), vld1q_s32(b.data() + i)));
  std::int64_t total = vaddvq_s64(acc);
  for (; i < n; ++i) total += tail(a[i], b[i]);
  return total;
}

}  // namespace

std::int64_t abs_diff_sum(Degrees a, Degrees b) {
  return pair_reduce(
      a, b, [](int32x4_t x, int32x4_t y) { return vabdq_s32(x, y); },
      [](std::int32_t x, std::int32_t y) -> std::int64_t { return std::abs(x - y); });
}

std::int64_t sq_diff_sum(Degrees a, Degrees b) {
  return pair_reduce(
      a, b,
      [](int32x4_t x, int32x4_t y) {
        int32x4_t d = vsubq_s32(x, y);
        return vmulq_s32(d, d);
      },
      [](std::int32_t x, std::int32_t y) -> std::int64_t {
        const std::int64_t d = x - y;
        return d * d;
      });
}

std::int64_t product_sum(Degrees a, Degrees b) {
  return pair_reduce(
      a, b, [](int32x4_t x, int32x4_t y) { return vmulq_s32(x, y); },
      [](std::int32_t x, std::int32_t y) -> std::int64_t { return std::int64_t{x} * y; });
}

std::int64_t square_sum(Degrees a) { return product_sum(a, a); }

std::int64_t pairwise_abs_diff_sum(Degrees a) {
  const std::size_t n = a.size();
  int64x2_t acc = vdupq_n_s64(0);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int32x4_t pivot = vdupq_n_s32(a[i]);
    std::size_t j = i + 1;
    for (; j + 4 <= n; j += 4) acc = vpadalq_s32(acc, vabdq_s32(vld1q_s32(a.data() + j), pivot));
    for (; j < n; ++j) total += std::abs(a[i] - a[j]);
  }
  return total + vaddvq_s64(acc);
}

}  // namespace irrlab::kernels::neon

namespace irrlab::kernels {

const KernelTable* neon_table() {
  static const KernelTable table{"neon",
                                 neon::abs_diff_sum,
                                 neon::sq_diff_sum,
                                 neon::product_sum,
                                 neon::square_sum,
                                 neon::pairwise_abs_diff_sum};
  return &table;
}

}  // namespace irrlab::kernels

#else

namespace irrlab::kernels {
const KernelTable* neon_table() { return nullptr; }
}  // namespace irrlab::kernels

#endif
