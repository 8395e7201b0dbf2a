#pragma once

#include <cstdint>

#include "spherespan/vec.hpp"

namespace spherespan {

// splitmix64-based generator. Kept self-contained so that seeded runs are
// bit-identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Inclusive bounds.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
  }

  // Euclidean-unit direction.
  Vec unit_vec(int dim) {
    if (dim == 2) {
      const double t = uniform(0.0, 6.283185307179586);
      return Vec::of(std::cos(t), std::sin(t));
    }
    // Uniform on S^2 via cylindrical projection.
    const double z = uniform(-1.0, 1.0);
    const double t = uniform(0.0, 6.283185307179586);
    const double r = std::sqrt(std::fmax(0.0, 1.0 - z * z));
    return Vec::of(r * std::cos(t), r * std::sin(t), z);
  }

 private:
  uint64_t state_;
};

}  // namespace spherespan
