// AVX2 variants of the cost kernels. Compiled with -mavx2 on x86-64 targets
// only; callers go through active_kernels(), which checks CPU support first.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <array>
#include <cstring>

#include "dqc/cost_kernels.hpp"

namespace dqc {

namespace {

std::uint64_t move_count_avx2(const std::uint8_t* buf, std::size_t n,
                              std::size_t m) {
  if (m < 2) return 0;
  const std::uint8_t* cur = buf + n;
  const std::uint8_t* prev = buf;
  std::size_t len = n * (m - 1);
  std::uint64_t count = 0;

  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cur + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev + i));
    std::uint32_t eq =
        static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(a, b)));
    count += 32 - __builtin_popcount(eq);
  }
  for (; i < len; ++i) count += cur[i] != prev[i];
  return count;
}

std::uint64_t pair_split_count_avx2(const std::uint8_t* buf,
                                    const std::int32_t* a,
                                    const std::int32_t* b, std::size_t count) {
  // 4-byte gathers at byte offsets; the matrix buffer carries 32 bytes of
  // tail pad, so the 3 bytes of overread per lane stay in bounds.
  const int* base = reinterpret_cast<const int*>(buf);
  const __m256i byte_mask = _mm256_set1_epi32(0xFF);
  std::uint64_t splits = 0;

  std::size_t j = 0;
  for (; j + 8 <= count; j += 8) {
    __m256i ia = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + j));
    __m256i ib = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j));
    __m256i va = _mm256_and_si256(_mm256_i32gather_epi32(base, ia, 1), byte_mask);
    __m256i vb = _mm256_and_si256(_mm256_i32gather_epi32(base, ib, 1), byte_mask);
    std::uint32_t eq = static_cast<std::uint32_t>(
        _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(va, vb))));
    splits += 8 - __builtin_popcount(eq);
  }
  for (; j < count; ++j) splits += buf[a[j]] != buf[b[j]];
  return splits;
}

std::uint64_t capacity_violations_avx2(const std::uint8_t* buf, std::size_t n,
                                       std::size_t m, const std::uint32_t* caps,
                                       std::size_t k) {
  std::uint64_t violations = 0;

  if (k <= 8) {
    // Compare-and-popcount per QPU value; cheaper than a histogram while
    // k * ceil(n/32) stays below n.
    const std::size_t full_chunks = n / 32;
    const std::uint32_t tail_bits = static_cast<std::uint32_t>(n % 32);
    const std::uint32_t tail_mask =
        tail_bits == 0 ? 0 : (tail_bits == 32 ? 0xFFFFFFFFu
                                              : ((1u << tail_bits) - 1));
    for (std::size_t t = 0; t < m; ++t) {
      const std::uint8_t* col = buf + t * n;
      for (std::size_t p = 0; p < k; ++p) {
        const __m256i needle = _mm256_set1_epi8(static_cast<char>(p));
        std::uint32_t cnt = 0;
        std::size_t c = 0;
        for (; c < full_chunks; ++c) {
          __m256i v = _mm256_loadu_si256(
              reinterpret_cast<const __m256i*>(col + 32 * c));
          cnt += __builtin_popcount(static_cast<std::uint32_t>(
              _mm256_movemask_epi8(_mm256_cmpeq_epi8(v, needle))));
        }
        if (tail_bits != 0) {
          __m256i v = _mm256_loadu_si256(
              reinterpret_cast<const __m256i*>(col + 32 * c));
          cnt += __builtin_popcount(
              static_cast<std::uint32_t>(
                  _mm256_movemask_epi8(_mm256_cmpeq_epi8(v, needle))) &
              tail_mask);
        }
        violations += cnt > caps[p];
      }
    }
    return violations;
  }

  std::array<std::uint32_t, 256> counts;
  for (std::size_t t = 0; t < m; ++t) {
    std::memset(counts.data(), 0, k * sizeof(std::uint32_t));
    const std::uint8_t* col = buf + t * n;
    for (std::size_t q = 0; q < n; ++q) ++counts[col[q]];
    for (std::size_t p = 0; p < k; ++p) violations += counts[p] > caps[p];
  }
  return violations;
}

} // namespace

const CostKernelTable& avx2_kernels() {
  static const CostKernelTable table = {
      "avx2",
      move_count_avx2,
      pair_split_count_avx2,
      capacity_violations_avx2,
  };
  return table;
}

} // namespace dqc

#endif // x86-64
