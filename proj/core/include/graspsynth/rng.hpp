#pragma once

#include <cstdint>
#include <random>

#include "graspsynth/types.hpp"

namespace graspsynth {

/// Deterministic random source. Distributions are generated by hand from the
/// raw 64-bit stream instead of std:: distribution objects so that outputs
/// are bit-identical across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 random mantissa bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). n must be positive.
  int uniform_int(int n) { return static_cast<int>(engine_() % static_cast<uint64_t>(n)); }

  Vec3 in_box(const Aabb& box) {
    return {uniform(box.min.x(), box.max.x()), uniform(box.min.y(), box.max.y()),
            uniform(box.min.z(), box.max.z())};
  }

  /// Uniform direction on the unit sphere.
  Vec3 unit_vector() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * M_PI);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
  }

  /// Uniform rotation over SO(3) (Shoemake's subgroup algorithm).
  Quat rotation() {
    const double u1 = uniform(), u2 = uniform(), u3 = uniform();
    const double s1 = std::sqrt(1.0 - u1), s2 = std::sqrt(u1);
    return Quat(s1 * std::sin(2.0 * M_PI * u2), s1 * std::cos(2.0 * M_PI * u2),
                s2 * std::sin(2.0 * M_PI * u3), s2 * std::cos(2.0 * M_PI * u3));
  }

  /// Child stream for parallel or per-item use; independent of later draws
  /// from this generator.
  Rng fork(uint64_t stream) { return Rng(mix(engine_(), stream)); }

  /// splitmix64-style mixer for deriving stream seeds.
  static uint64_t mix(uint64_t a, uint64_t b) {
    uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace graspsynth
