#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace bellbound::detail {

using BigInt = boost::multiprecision::cpp_int;

/// Incremental row echelon basis over the integers (fraction-free, rows kept primitive).
class IntegerEchelon {
public:
  explicit IntegerEchelon(std::size_t width) : width_(width) {}

  /// Reduces the row against the basis; returns true if it was independent and got added.
  bool insert(const std::vector<long long>& row) {
    std::vector<BigInt> v(row.begin(), row.end());
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const std::size_t col = pivots_[b];
      if (v[col] == 0) continue;
      const BigInt factor_v = basis_[b][col];
      const BigInt factor_b = v[col];
      for (std::size_t k = 0; k < width_; ++k) v[k] = v[k] * factor_v - basis_[b][k] * factor_b;
      make_primitive(v);
    }
    std::optional<std::size_t> pivot;
    for (std::size_t k = 0; k < width_; ++k)
      if (v[k] != 0) {
        pivot = k;
        break;
      }
    if (!pivot) return false;
    basis_.push_back(std::move(v));
    pivots_.push_back(*pivot);
    return true;
  }

  std::size_t rank() const noexcept { return basis_.size(); }

private:
  static void make_primitive(std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const auto& x : v)
      if (x != 0) g = boost::multiprecision::gcd(g, abs(x));
    if (g > 1)
      for (auto& x : v) x /= g;
  }

  std::size_t width_;
  std::vector<std::vector<BigInt>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace bellbound::detail
