#include "dqc/cost_kernels.hpp"

#include <array>
#include <cstring>

namespace dqc {

namespace {

std::uint64_t move_count_scalar(const std::uint8_t* buf, std::size_t n,
                                std::size_t m) {
  std::uint64_t count = 0;
  const std::size_t total = n * m;
  for (std::size_t i = n; i < total; ++i) count += buf[i] != buf[i - n];
  return count;
}

std::uint64_t pair_split_count_scalar(const std::uint8_t* buf,
                                      const std::int32_t* a,
                                      const std::int32_t* b,
                                      std::size_t count) {
  std::uint64_t splits = 0;
  for (std::size_t j = 0; j < count; ++j) splits += buf[a[j]] != buf[b[j]];
  return splits;
}

std::uint64_t capacity_violations_scalar(const std::uint8_t* buf,
                                         std::size_t n, std::size_t m,
                                         const std::uint32_t* caps,
                                         std::size_t k) {
  std::array<std::uint32_t, 256> counts;
  std::uint64_t violations = 0;
  for (std::size_t t = 0; t < m; ++t) {
    std::memset(counts.data(), 0, k * sizeof(std::uint32_t));
    const std::uint8_t* col = buf + t * n;
    for (std::size_t q = 0; q < n; ++q) ++counts[col[q]];
    for (std::size_t p = 0; p < k; ++p) violations += counts[p] > caps[p];
  }
  return violations;
}

} // namespace

const CostKernelTable& scalar_kernels() {
  static const CostKernelTable table = {
      "scalar",
      move_count_scalar,
      pair_split_count_scalar,
      capacity_violations_scalar,
  };
  return table;
}

} // namespace dqc
