#pragma once

// Seeded random source with named substreams. Each simulation concern
// (mobility, fading, traffic, gnss, init) owns its own engine so that
// toggling one model never shifts the draws of another.

#include <cstdint>
#include <random>
#include <string_view>

#include "batmobile/vec3.hpp"

namespace batmobile {

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x00000100000001b3ull;
  }
  return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  // [0, 1)
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // [0, n)
  std::uint32_t uniform_int(std::uint32_t n) {
    return static_cast<std::uint32_t>(engine_() % n);
  }

  // Uniform direction on the unit sphere.
  Vec3 unit_vector() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * M_PI);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
  }

  double gamma(double shape, double scale) {
    std::gamma_distribution<double> dist(shape, scale);
    return dist(engine_);
  }

 private:
  std::mt19937_64 engine_;
};

// Independent engine derived from (seed, stream name).
inline Rng substream(std::uint64_t seed, std::string_view name) {
  return Rng(seed ^ fnv1a64(name));
}

}  // namespace batmobile
