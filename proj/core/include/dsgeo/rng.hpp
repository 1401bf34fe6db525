#pragma once

#include <cstdint>
#include <random>

namespace dsgeo {

// Deterministic sampler. One instance per command run, seeded explicitly;
// draws happen in a documented order so reports are reproducible bit for bit.
// Doubles are built from the top 53 bits of mt19937_64 output, which makes
// the sequence identical across standard libraries for a given seed.
class SampleRng {
public:
  explicit SampleRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Uniform index in [0, n).
  int index(int n) {
    int i = static_cast<int>(unit() * n);
    return i < n ? i : n - 1;
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace dsgeo
