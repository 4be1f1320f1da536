#include "dqc/cost_kernels.hpp"

#include <atomic>

namespace dqc {

namespace {

std::atomic<const CostKernelTable*> g_override{nullptr};

const CostKernelTable& detect() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2")) return avx2_kernels();
#endif
  return scalar_kernels();
}

} // namespace

const CostKernelTable& active_kernels() {
  const CostKernelTable* forced = g_override.load(std::memory_order_relaxed);
  if (forced) return *forced;
  static const CostKernelTable& detected = detect();
  return detected;
}

void set_kernel_override(const CostKernelTable* table) {
  g_override.store(table, std::memory_order_relaxed);
}

} // namespace dqc
