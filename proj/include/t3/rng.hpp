#pragma once

#include <cstdint>
#include <vector>

namespace t3 {

// xoshiro256++ with splitmix64 seeding. The standard <random> distributions
// are implementation-defined, so every sampling primitive the toolkit relies
// on for byte-identical outputs lives here instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Unbiased integer in [0, bound). bound must be > 0.
  std::uint64_t bounded(std::uint64_t bound);

  // Inclusive range [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // [0, 1) with 53 random bits.
  double uniform_real();

  // [lo, hi)
  double uniform_real(double lo, double hi);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct indices drawn from [0, n), in draw order.
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

 private:
  std::uint64_t s_[4];
};

// Stable (seed, index) -> child seed derivation used for per-sample rngs.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// FNV-1a, used for prompt hashing and config fingerprints.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64(const std::string& s);

}  // namespace t3
