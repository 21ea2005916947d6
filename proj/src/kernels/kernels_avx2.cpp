// Compiled with -mavx2 on x86-64 only; callers reach it through the dispatch
// table after a CPU feature check.

#include "irrlab/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <immintrin.h>

#include <cstdlib>

namespace irrlab::kernels::avx2 {
namespace {

inline __m256i load8(const std::int32_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

// Widen eight non-negative int32 lanes to int64 and add into two accumulators.
inline void accumulate(__m256i x, __m256i& lo, __m256i& hi) {
  lo = _mm256_add_epi64(lo, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(x)));
  hi = _mm256_add_epi64(hi, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(x, 1)));
}

inline std::int64_t reduce(__m256i lo, __m256i hi) {
  __m256i s = _mm256_add_epi64(lo, hi);
  __m128i h = _mm_add_epi64(_mm256_castsi256_si128(s), _mm256_extracti128_si256(s, 1));
  return _mm_cvtsi128_si64(h) + _mm_extract_epi64(h, 1);
}

template <typename Lane, typename Tail>
std::int64_t pair_reduce(Degrees a, Degrees b, Lane lane, Tail tail) {
  const std::size_t n = a.size();
  __m256i lo = _mm256_setzero_si256();
  __m256i hi = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) accumulate(lane(load8(a.data() + i), load8(b.data() + i)), lo, hi);
  std::int64_t total = reduce(lo, hi);
  for (; i < n; ++i) total += tail(a[i], b[i]);
  return total;
}

}  // namespace

std::int64_t abs_diff_sum(Degrees a, Degrees b) {
  return pair_reduce(
      a, b, [](__m256i x, __m256i y) { return _mm256_abs_epi32(_mm256_sub_epi32(x, y)); },
      [](std::int32_t x, std::int32_t y) -> std::int64_t { return std::abs(x - y); });
}

std::int64_t sq_diff_sum(Degrees a, Degrees b) {
  return pair_reduce(
      a, b,
      [](__m256i x, __m256i y) {
        __m256i d = _mm256_sub_epi32(x, y);
        return _mm256_mullo_epi32(d, d);
      },
      [](std::int32_t x, std::int32_t y) -> std::int64_t {
        const std::int64_t d = x - y;
        return d * d;
      });
}

std::int64_t product_sum(Degrees a, Degrees b) {
  return pair_reduce(
      a, b, [](__m256i x, __m256i y) { return _mm256_mullo_epi32(x, y); },
      [](std::int32_t x, std::int32_t y) -> std::int64_t { return std::int64_t{x} * y; });
}

std::int64_t square_sum(Degrees a) { return product_sum(a, a); }

std::int64_t pairwise_abs_diff_sum(Degrees a) {
  const std::size_t n = a.size();
  __m256i lo = _mm256_setzero_si256();
  __m256i hi = _mm256_setzero_si256();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const __m256i pivot = _mm256_set1_epi32(a[i]);
    std::size_t j = i + 1;
    for (; j + 8 <= n; j += 8) {
      accumulate(_mm256_abs_epi32(_mm256_sub_epi32(load8(a.data() + j), pivot)), lo, hi);
    }
    for (; j < n; ++j) total += std::abs(a[i] - a[j]);
  }
  return total + reduce(lo, hi);
}

}  // namespace irrlab::kernels::avx2

namespace irrlab::kernels {

const KernelTable* avx2_table() {
  static const KernelTable table{"avx2",
                                 avx2::abs_diff_sum,
                                 avx2::sq_diff_sum,
                                 avx2::product_sum,
                                 avx2::square_sum,
                                 avx2::pairwise_abs_diff_sum};
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") ? &table : nullptr;
}

}  // namespace irrlab::kernels

#else

namespace irrlab::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace irrlab::kernels

#endif
