#pragma once

// Seeded streams. Gaussian draws use Box-Muller on raw mt19937_64 output so
// results are identical across standard library implementations.

#include <bellbound/vectors.hpp>

#include <cmath>
#include <cstdint>
#include <random>

namespace bellbound {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class Rng {
public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(splitmix64(seed ^ splitmix64(stream + 0x51ED270B27E1A3C5ULL))) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    spare_ = radius * std::sin(2.0 * M_PI * u2);
    has_spare_ = true;
    return radius * std::cos(2.0 * M_PI * u2);
  }

  int sign() { return (engine_() >> 63) ? 1 : -1; }

  std::uint64_t bits() { return engine_(); }

  Eigen::VectorXd unit_vector(std::size_t dim) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(dim));
    do {
      for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = gaussian();
    } while (v.norm() == 0.0);
    return v / v.norm();
  }

  UnitVectorConfig unit_config(std::size_t count, std::size_t dim) {
    std::vector<Eigen::VectorXd> v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i) v.push_back(unit_vector(dim));
    return UnitVectorConfig(dim, std::move(v));
  }

private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace bellbound
