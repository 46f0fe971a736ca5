#pragma once

// Exhaustive maximization of a quadratic form sum_{i<j} w_ij s_i s_j over
// s in {-1,+1}^n with s_0 fixed to +1. Each Gray-code step flips a single
// variable, so the running value and the local fields are updated in O(n).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

namespace bellbound::detail {

template <typename T>
struct GrayMaximum {
  T value{};
  std::uint64_t step = 0;       // Gray-code step index at which value was first seen
  std::vector<std::int8_t> signs;
  std::uint64_t evaluations = 0;
};

inline std::uint64_t gray(std::uint64_t t) { return t ^ (t >> 1); }

// weights is a dense symmetric n x n row-major matrix; the diagonal is ignored.
template <typename T>
GrayMaximum<T> gray_maximize_range(std::span<const T> weights, std::size_t n,
                                   std::uint64_t begin, std::uint64_t end) {
  GrayMaximum<T> out;
  if (n == 0) {
    out.evaluations = 1;
    return out;
  }
  std::vector<std::int8_t> s(n, 1);
  const std::uint64_t g0 = gray(begin);
  for (std::size_t k = 0; k + 1 < n; ++k)
    if ((g0 >> k) & 1U) s[k + 1] = -1;

  std::vector<T> field(n, T{});
  T value{};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      field[i] += weights[i * n + j] * static_cast<T>(s[j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      value += weights[i * n + j] * static_cast<T>(s[i] * s[j]);

  out.value = value;
  out.step = begin;
  out.signs = s;
  out.evaluations = 1;

  for (std::uint64_t t = begin + 1; t < end; ++t) {
    const std::size_t var = 1 + static_cast<std::size_t>(std::countr_zero(t));
    const T old_sign = static_cast<T>(s[var]);
    value -= T{2} * old_sign * field[var];
    s[var] = static_cast<std::int8_t>(-s[var]);
    const T* row = weights.data() + var * n;
    for (std::size_t j = 0; j < n; ++j)
      if (j != var) field[j] -= T{2} * row[j] * old_sign;
    ++out.evaluations;
    if (value > out.value) {
      out.value = value;
      out.step = t;
      out.signs = s;
    }
  }
  return out;
}

// Splits the Gray-code range across workers. The merge keeps the largest
// value and, among equal values, the lowest step index, so the result does
// not depend on the worker count.
template <typename T>
GrayMaximum<T> gray_maximize(std::span<const T> weights, std::size_t n, unsigned workers = 1) {
  const std::uint64_t total = n == 0 ? 1 : (std::uint64_t{1} << (n - 1));
  workers = std::max(1U, workers);
  if (workers == 1 || total < 4096) return gray_maximize_range(weights, n, 0, total);

  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<GrayMaximum<T>> parts(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t b = std::min(total, w * chunk);
      const std::uint64_t e = std::min(total, b + chunk);
      if (b >= e) continue;
      pool.emplace_back([&, w, b, e] { parts[w] = gray_maximize_range(weights, n, b, e); });
    }
  }
  GrayMaximum<T> best;
  bool have = false;
  std::uint64_t evaluations = 0;
  for (auto& part : parts) {
    if (part.evaluations == 0) continue;
    evaluations += part.evaluations;
    if (!have || part.value > best.value) {
      best = std::move(part);
      have = true;
    }
  }
  best.evaluations = evaluations;
  return best;
}

}  // namespace bellbound::detail
