#pragma once

#include <bellbound/errors.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace bellbound {

inline constexpr double kUnitNormTolerance = 1e-12;

/// Ordered list of unit vectors in R^dim.
class UnitVectorConfig {
public:
  UnitVectorConfig() = default;

  UnitVectorConfig(std::size_t dim, std::vector<Eigen::VectorXd> vectors)
      : dim_(dim), vectors_(std::move(vectors)) {
    if (dim_ == 0 && !vectors_.empty()) throw DimensionError("unit vectors need dim >= 1");
    for (std::size_t k = 0; k < vectors_.size(); ++k) {
      const auto& v = vectors_[k];
      if (static_cast<std::size_t>(v.size()) != dim_)
        throw DimensionError("vector " + std::to_string(k) + " has wrong dimension");
      if (!v.allFinite()) throw ParameterError("vector " + std::to_string(k) + " is not finite");
      if (std::abs(v.norm() - 1.0) > kUnitNormTolerance)
        throw ParameterError("vector " + std::to_string(k) + " is not unit length (norm " +
                             std::to_string(v.norm()) + ")");
    }
  }

  UnitVectorConfig(std::size_t dim, std::initializer_list<std::initializer_list<double>> rows)
      : UnitVectorConfig(dim, to_vectors(rows)) {}

  /// Normalizes each input vector; zero vectors are rejected.
  static UnitVectorConfig normalized(std::size_t dim, std::vector<Eigen::VectorXd> vectors) {
    for (auto& v : vectors) {
      const double norm = v.norm();
      if (!(norm > 0.0)) throw ParameterError("cannot normalize a zero vector");
      v /= norm;
    }
    return UnitVectorConfig(dim, std::move(vectors));
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  const Eigen::VectorXd& operator[](std::size_t i) const { return vectors_.at(i); }
  const std::vector<Eigen::VectorXd>& vectors() const noexcept { return vectors_; }

  Eigen::MatrixXd gram() const {
    Eigen::MatrixXd g(size(), size());
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) g(i, j) = vectors_[i].dot(vectors_[j]);
    return g;
  }

  /// Returns a copy with a vector sign-reversed (e.g. for a partner measuring the opposite direction).
  UnitVectorConfig with_negated(std::size_t index) const {
    auto v = vectors_;
    v.at(index) = -v.at(index);
    return UnitVectorConfig(dim_, std::move(v));
  }

private:
  static std::vector<Eigen::VectorXd> to_vectors(std::initializer_list<std::initializer_list<double>> rows) {
    std::vector<Eigen::VectorXd> out;
    for (const auto& row : rows) {
      Eigen::VectorXd v(static_cast<Eigen::Index>(row.size()));
      Eigen::Index k = 0;
      for (double x : row) v(k++) = x;
      out.push_back(std::move(v));
    }
    return out;
  }

  std::size_t dim_ = 0;
  std::vector<Eigen::VectorXd> vectors_;
};

/// n unit vectors in the plane at angles 2*pi*k/n.
inline UnitVectorConfig planar_star(std::size_t n) {
  std::vector<Eigen::VectorXd> v;
  for (std::size_t k = 0; k < n; ++k) {
    const double a = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
    v.push_back(Eigen::Vector2d(std::cos(a), std::sin(a)));
  }
  return UnitVectorConfig(2, std::move(v));
}

}  // namespace bellbound
