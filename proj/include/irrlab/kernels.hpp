#pragma once

// Degree-array reductions behind every index computation.
//
// Each kernel has a scalar reference implementation and, where the target
// supports it, an AVX2 (x86-64) or NEON (aarch64) variant. The active table is
// chosen once at startup from the CPU features; IRRLAB_SIMD=scalar forces the
// reference path. All variants return bit-identical results.
//
// Inputs are vertex degrees: every element must lie in [0, 32767] so that
// squares and products of two entries fit in 32-bit lanes.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace irrlab::kernels {

using Degrees = std::span<const std::int32_t>;

// a and b are paired element-wise (edge endpoint degrees); sizes must match.
using PairKernel = std::int64_t (*)(Degrees a, Degrees b);
using SingleKernel = std::int64_t (*)(Degrees a);

struct KernelTable {
  std::string_view name;
  PairKernel abs_diff_sum;      // sum |a_i - b_i|
  PairKernel sq_diff_sum;       // sum (a_i - b_i)^2
  PairKernel product_sum;       // sum a_i * b_i
  SingleKernel square_sum;      // sum a_i^2
  SingleKernel pairwise_abs_diff_sum;  // sum_{i<j} |a_i - a_j|
};

namespace scalar {
std::int64_t abs_diff_sum(Degrees a, Degrees b);
std::int64_t sq_diff_sum(Degrees a, Degrees b);
std::int64_t product_sum(Degrees a, Degrees b);
std::int64_t square_sum(Degrees a);
std::int64_t pairwise_abs_diff_sum(Degrees a);
}  // namespace scalar

const KernelTable& scalar_table();

// nullptr when the variant is not compiled in or the CPU lacks the feature.
const KernelTable* avx2_table();
const KernelTable* neon_table();

// Every table usable on this machine, scalar first.
std::vector<const KernelTable*> available_tables();

const KernelTable& active();

// Test hook: replaces the active table. Not thread-safe with concurrent use.
void set_active(const KernelTable& table);

}  // namespace irrlab::kernels
