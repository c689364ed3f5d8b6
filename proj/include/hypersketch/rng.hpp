#pragma once

#include <cstdint>
#include <random>

namespace hypersketch {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Child streams get hash(seed, stream) so per-trial and per-edge draws are
// independent of iteration order and safe to evaluate concurrently.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 0x51a2b3c4d5e6f708ULL));
}

inline double unit_from_bits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Counter-based uniform in [0,1): stateless, keyed by (seed, counter).
inline double unit_at(std::uint64_t seed, std::uint64_t counter) {
  return unit_from_bits(derive_seed(seed, counter));
}

// Deterministic generator. Avoids std:: distributions, whose sequences are
// not pinned by the standard; all mapping from raw bits is done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0,1).
  double unit() { return unit_from_bits(next_u64()); }

  bool coin() { return (next_u64() >> 63) != 0; }

  // Uniform in [0,n), n >= 1. Rejection keeps it exactly uniform.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    std::uint64_t x = next_u64();
    while (x < threshold) x = next_u64();
    return x % n;
  }

  int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

  // Uniform in [lo,hi].
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hypersketch
