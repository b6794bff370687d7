#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "tlh/sphere.hpp"

namespace tlh {

/// Seedable random stream. Streams are split by index: Rng(root, i) for
/// sample i gives the same values whether samples run serially or across
/// threads.
class Rng {
 public:
  explicit Rng(std::uint64_t root, std::uint64_t stream = 0) : engine_(seed(root, stream)) {}

  double uniform() { return std::generate_canonical<double, 53>(engine_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Log-uniform on [lo, hi], lo > 0.
  double log_uniform(double lo, double hi);
  /// Uniform direction on S^2 (rejection from the cube).
  Vec3 unit_vector();
  std::uint64_t bits() { return engine_(); }

  std::mt19937_64& engine() { return engine_; }

 private:
  static std::mt19937_64 seed(std::uint64_t root, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(root), static_cast<std::uint32_t>(root >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
  }

  std::mt19937_64 engine_;
};

inline double Rng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

inline Vec3 Rng::unit_vector() {
  for (;;) {
    const Vec3 v(uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0));
    const double n2 = v.squaredNorm();
    if (n2 > 1e-6 && n2 <= 1.0) return v / std::sqrt(n2);
  }
}

}  // namespace tlh
