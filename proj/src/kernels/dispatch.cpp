#include <atomic>
#include <cstdlib>
#include <string_view>

#include "irrlab/kernels.hpp"

namespace irrlab::kernels {
namespace {

const KernelTable* pick() {
  if (const char* env = std::getenv("IRRLAB_SIMD"); env != nullptr && std::string_view(env) == "scalar") {
    return &scalar_table();
  }
  if (const KernelTable* t = avx2_table()) return t;
  if (const KernelTable* t = neon_table()) return t;
  return &scalar_table();
}

std::atomic<const KernelTable*>& slot() {
  static std::atomic<const KernelTable*> current{pick()};
  return current;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar",
                                 scalar::abs_diff_sum,
                                 scalar::sq_diff_sum,
                                 scalar::product_sum,
                                 scalar::square_sum,
                                 scalar::pairwise_abs_diff_sum};
  return table;
}

std::vector<const KernelTable*> available_tables() {
  std::vector<const KernelTable*> tables{&scalar_table()};
  if (const KernelTable* t = avx2_table()) tables.push_back(t);
  if (const KernelTable* t = neon_table()) tables.push_back(t);
  return tables;
}

const KernelTable& active() { return *slot().load(std::memory_order_acquire); }

void set_active(const KernelTable& table) { slot().store(&table, std::memory_order_release); }

}  // namespace irrlab::kernels
