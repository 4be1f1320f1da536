#pragma once

#include <cstddef>
#include <cstdint>

namespace dqc {

// The fitness terms reduce to three counting kernels over the column-major
// byte matrix (entry (q,t) lives at buf[t*n + q], 32 zero bytes of tail pad):
//
//   move_count          #{i in [n, n*m) : buf[i] != buf[i-n]}, i.e. qubit
//                       assignments that differ between adjacent time steps
//   pair_split_count    #{j : buf[a[j]] != buf[b[j]]} over precomputed
//                       2-qubit gate operand offsets
//   capacity_violations #{(t,p) : |{q : buf[t*n+q] == p}| > caps[p]}
//
// The scalar table is the reference implementation; SIMD variants must match
// it bit for bit on every input (equivalence-tested). Selection happens once
// at startup from CPU features and can be overridden for tests and timing.
struct CostKernelTable {
  const char* name;
  std::uint64_t (*move_count)(const std::uint8_t* buf, std::size_t n,
                              std::size_t m);
  std::uint64_t (*pair_split_count)(const std::uint8_t* buf,
                                    const std::int32_t* a,
                                    const std::int32_t* b, std::size_t count);
  std::uint64_t (*capacity_violations)(const std::uint8_t* buf, std::size_t n,
                                       std::size_t m, const std::uint32_t* caps,
                                       std::size_t k);
};

const CostKernelTable& scalar_kernels();

#if defined(__x86_64__) || defined(_M_X64)
/// AVX2 variants. Only callable when the CPU supports AVX2.
const CostKernelTable& avx2_kernels();
#endif

/// Best table for this machine (scalar unless overridden or AVX2 detected).
const CostKernelTable& active_kernels();

/// Forces a specific table (nullptr restores auto-detection).
void set_kernel_override(const CostKernelTable* table);

} // namespace dqc
