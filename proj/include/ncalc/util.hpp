#pragma once

#include <cstdint>

namespace ncalc {

// Deterministic splitmix64 engine; outputs are identical across platforms, so
// seeded reports are bit-stable.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform over {-2,...,2}
  long small_coeff() { return static_cast<long>(next() % 5) - 2; }
};

}  // namespace ncalc
