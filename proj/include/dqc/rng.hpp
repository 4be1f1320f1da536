#pragma once

#include <cstdint>
#include <span>

namespace dqc {

/// Counter-based pseudo-random stream (splitmix64).
///
/// All stochastic components of the toolkit draw from this generator instead
/// of <random> engines/distributions so that a given seed produces the same
/// sequence on every platform and standard library. The output of
/// std::uniform_int_distribution is implementation-defined; frozen regression
/// fixtures and run reproducibility depend on it not changing under our feet.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound). bound must be nonzero.
  /// Multiply-shift rejection sampling (Lemire), exactly unbiased.
  std::uint64_t next_below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 bits of precision.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool next_bool() { return (next_u64() >> 63) != 0; }

  /// Uniform double in [lo, hi).
  double next_double_in(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

private:
  std::uint64_t state_;
};

/// Seed derivation for private per-task streams. Chains the splitmix64
/// finalizer over the parts, so (seed, a, b) triples that differ in any
/// component give unrelated streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

/// Fisher-Yates shuffle driven by a SplitMix64 stream.
template <typename T>
void shuffle(std::span<T> values, SplitMix64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    if (j != i - 1) {
      T tmp = values[i - 1];
      values[i - 1] = values[j];
      values[j] = tmp;
    }
  }
}

} // namespace dqc
