#pragma once

#include <bellbound/detail/gray_code.hpp>
#include <bellbound/errors.hpp>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bellbound {

enum class Mode { complete, bipartite };

using IndexPair = std::pair<std::size_t, std::size_t>;

/**
 * A linear inequality over products of +-1 variables.
 *
 * Complete mode: one block of n_left variables, keys (i, j) with i < j.
 * Bipartite mode: keys (i, j) with i a left index and j a right index; the
 * right block is laid out after the left one when variables are flattened.
 */
class PairwiseInequality {
public:
  PairwiseInequality() = default;

  static PairwiseInequality complete(std::size_t n, double rhs = 0.0) {
    PairwiseInequality ineq;
    ineq.mode_ = Mode::complete;
    ineq.n_left_ = n;
    ineq.set_rhs(rhs);
    return ineq;
  }

  static PairwiseInequality bipartite(std::size_t n_left, std::size_t n_right, double rhs = 0.0) {
    PairwiseInequality ineq;
    ineq.mode_ = Mode::bipartite;
    ineq.n_left_ = n_left;
    ineq.n_right_ = n_right;
    ineq.set_rhs(rhs);
    return ineq;
  }

  /// Sets a coefficient. In complete mode (j, i) is stored as (i, j); i == j is rejected.
  PairwiseInequality& set(std::size_t i, std::size_t j, double value) {
    coefficients_[checked_key(i, j)] = checked_value(value);
    return *this;
  }

  PairwiseInequality& add(std::size_t i, std::size_t j, double value) {
    coefficients_[checked_key(i, j)] += checked_value(value);
    return *this;
  }

  PairwiseInequality& set_rhs(double rhs) {
    if (!std::isfinite(rhs)) throw ParameterError("inequality rhs must be finite");
    rhs_ = rhs;
    return *this;
  }

  Mode mode() const noexcept { return mode_; }
  std::size_t n_left() const noexcept { return n_left_; }
  std::size_t n_right() const noexcept { return n_right_; }
  std::size_t variable_count() const noexcept { return n_left_ + n_right_; }
  double rhs() const noexcept { return rhs_; }
  const std::map<IndexPair, double>& coefficients() const noexcept { return coefficients_; }

  double coefficient(std::size_t i, std::size_t j) const {
    auto it = coefficients_.find(checked_key(i, j));
    return it == coefficients_.end() ? 0.0 : it->second;
  }

  /// Flattened variable indices of a stored key.
  IndexPair flat(const IndexPair& key) const noexcept {
    return mode_ == Mode::complete ? key : IndexPair{key.first, n_left_ + key.second};
  }

  /// Dense symmetric weight matrix over the flattened variables (zero diagonal).
  template <typename T = double>
  std::vector<T> dense_weights(T scale = T{1}) const {
    const std::size_t n = variable_count();
    std::vector<T> w(n * n, T{});
    for (const auto& [key, value] : coefficients_) {
      const auto [a, b] = flat(key);
      const T v = static_cast<T>(value * static_cast<double>(scale));
      w[a * n + b] += v;
      w[b * n + a] += v;
    }
    return w;
  }

  friend bool operator==(const PairwiseInequality&, const PairwiseInequality&) = default;

private:
  IndexPair checked_key(std::size_t i, std::size_t j) const {
    if (mode_ == Mode::complete) {
      if (i == j) throw ParameterError("complete-mode coefficient on a diagonal pair");
      if (i > j) std::swap(i, j);
      if (j >= n_left_) throw DimensionError("coefficient index out of range");
    } else if (i >= n_left_ || j >= n_right_) {
      throw DimensionError("bipartite coefficient index out of range");
    }
    return {i, j};
  }

  static double checked_value(double value) {
    if (!std::isfinite(value)) throw ParameterError("coefficient must be finite");
    return value;
  }

  Mode mode_ = Mode::complete;
  std::size_t n_left_ = 0;
  std::size_t n_right_ = 0;
  std::map<IndexPair, double> coefficients_;
  double rhs_ = 0.0;
};

/// Ordered +-1 values for all flattened variables of an inequality.
class SignAssignment {
public:
  SignAssignment() = default;
  explicit SignAssignment(std::vector<std::int8_t> values) : values_(std::move(values)) {
    for (auto v : values_)
      if (v != 1 && v != -1) throw ParameterError("sign assignment entries must be -1 or +1");
  }
  SignAssignment(std::initializer_list<int> values) {
    values_.reserve(values.size());
    for (int v : values) {
      if (v != 1 && v != -1) throw ParameterError("sign assignment entries must be -1 or +1");
      values_.push_back(static_cast<std::int8_t>(v));
    }
  }

  static SignAssignment all_ones(std::size_t n) {
    return SignAssignment(std::vector<std::int8_t>(n, 1));
  }

  std::size_t size() const noexcept { return values_.size(); }
  int operator[](std::size_t i) const { return values_.at(i); }
  const std::vector<std::int8_t>& values() const noexcept { return values_; }

  SignAssignment flipped() const {
    auto v = values_;
    for (auto& x : v) x = static_cast<std::int8_t>(-x);
    return SignAssignment(std::move(v));
  }

  friend bool operator==(const SignAssignment&, const SignAssignment&) = default;

private:
  std::vector<std::int8_t> values_;
};

struct ClassicalBoundResult {
  double max_value = 0.0;
  SignAssignment argmax;
  std::uint64_t evaluations = 0;
  // Twice the maximum from exact integer accumulation; present when every
  // coefficient is an integer or half-integer.
  std::optional<std::int64_t> exact_twice_max;
};

struct EnumerationOptions {
  std::size_t guard = 24;
  unsigned workers = 1;
};

inline double evaluate(const PairwiseInequality& ineq, const SignAssignment& a) {
  if (a.size() != ineq.variable_count())
    throw DimensionError("assignment length " + std::to_string(a.size()) +
                         " does not match variable count " +
                         std::to_string(ineq.variable_count()));
  double sum = 0.0;
  for (const auto& [key, value] : ineq.coefficients()) {
    const auto [i, j] = ineq.flat(key);
    sum += value * a[i] * a[j];
  }
  return sum;
}

namespace detail {

// Scaled-by-two integer weights when every coefficient is a (half-)integer of modest size.
inline std::optional<std::vector<std::int64_t>> twice_integer_weights(const PairwiseInequality& ineq) {
  for (const auto& [key, value] : ineq.coefficients()) {
    const double twice = 2.0 * value;
    if (std::floor(twice) != twice || std::abs(twice) > 1e12) return std::nullopt;
  }
  const auto w = ineq.dense_weights<double>(2.0);
  return std::vector<std::int64_t>(w.begin(), w.end());
}

}  // namespace detail

/**
 * Maximum of the inequality's left-hand side over all +-1 assignments.
 *
 * The first flattened variable is fixed to +1 (the form is invariant under a
 * global sign flip), so 2^(N-1) assignments are visited in Gray-code order.
 * Ties keep the first assignment found.
 */
inline ClassicalBoundResult classical_bound(const PairwiseInequality& ineq,
                                            const EnumerationOptions& options = {}) {
  const std::size_t n = ineq.variable_count();
  if (n > options.guard)
    throw ResourceLimitError("classical_bound: " + std::to_string(n) +
                             " variables exceeds enumeration guard " +
                             std::to_string(options.guard));
  if (n > 62) throw ResourceLimitError("classical_bound: more than 62 variables");

  const auto weights = ineq.dense_weights<double>();
  auto best = detail::gray_maximize<double>(weights, n, options.workers);

  ClassicalBoundResult result;
  result.max_value = best.value;
  result.argmax = SignAssignment(best.signs);
  result.evaluations = best.evaluations;

  if (auto exact = detail::twice_integer_weights(ineq)) {
    auto exact_best = detail::gray_maximize<std::int64_t>(*exact, n, options.workers);
    if (2.0 * best.value != static_cast<double>(exact_best.value))
      throw std::logic_error("classical_bound: floating and exact enumeration disagree");
    result.exact_twice_max = exact_best.value;
    result.max_value = static_cast<double>(exact_best.value) / 2.0;
  }
  return result;
}

/// Equivalent inequality over 0/1 cut variables c_ij = a_i XOR a_j.
struct CutInequality {
  std::size_t n = 0;
  std::map<IndexPair, double> coefficients;  // keys i < j
  double rhs = 0.0;

  friend bool operator==(const CutInequality&, const CutInequality&) = default;
};

inline double evaluate_cut(const CutInequality& ineq, std::span<const std::uint8_t> bits) {
  if (bits.size() != ineq.n) throw DimensionError("cut assignment length mismatch");
  double sum = 0.0;
  for (const auto& [key, value] : ineq.coefficients)
    if (bits[key.first] != bits[key.second]) sum += value;
  return sum;
}

// X_i X_j = 1 - 2 c_ij, so sum a_ij X_i X_j <= rhs becomes
// sum (-2 a_ij) c_ij <= rhs - sum a_ij.
inline CutInequality to_cut_form(const PairwiseInequality& ineq) {
  if (ineq.mode() != Mode::complete) throw ParameterError("to_cut_form requires complete mode");
  CutInequality out;
  out.n = ineq.n_left();
  double total = 0.0;
  for (const auto& [key, value] : ineq.coefficients()) {
    out.coefficients[key] = -2.0 * value;
    total += value;
  }
  out.rhs = ineq.rhs() - total;
  return out;
}

inline PairwiseInequality from_cut_form(const CutInequality& cut) {
  auto out = PairwiseInequality::complete(cut.n);
  double total = 0.0;
  for (const auto& [key, value] : cut.coefficients) {
    out.set(key.first, key.second, -0.5 * value);
    total += value;
  }
  out.set_rhs(cut.rhs - 0.5 * total);
  return out;
}

/**
 * Identifies Y_i with X_i in a square bipartite inequality. Off-diagonal
 * coefficients (i,j) and (j,i) merge onto the pair {i,j}; diagonal terms are
 * constant (X_i X_i = 1) and move into the rhs.
 */
inline PairwiseInequality collapse_bipartite(const PairwiseInequality& ineq) {
  if (ineq.mode() != Mode::bipartite) throw ParameterError("collapse_bipartite requires bipartite mode");
  if (ineq.n_left() != ineq.n_right()) throw DimensionError("collapse_bipartite requires n_left == n_right");
  auto out = PairwiseInequality::complete(ineq.n_left());
  double diagonal = 0.0;
  for (const auto& [key, value] : ineq.coefficients()) {
    if (key.first == key.second)
      diagonal += value;
    else
      out.add(key.first, key.second, value);
  }
  out.set_rhs(ineq.rhs() - diagonal);
  return out;
}

/// Re-expresses a bipartite inequality as a complete one on n_left + n_right variables.
inline PairwiseInequality as_complete(const PairwiseInequality& ineq) {
  if (ineq.mode() == Mode::complete) return ineq;
  auto out = PairwiseInequality::complete(ineq.variable_count(), ineq.rhs());
  for (const auto& [key, value] : ineq.coefficients()) {
    const auto [a, b] = ineq.flat(key);
    out.set(a, b, value);
  }
  return out;
}

/// Scales coefficients and rhs by a positive factor.
inline PairwiseInequality scaled(const PairwiseInequality& ineq, double factor) {
  if (!(factor > 0.0)) throw ParameterError("scale factor must be positive");
  PairwiseInequality out = ineq.mode() == Mode::complete
                               ? PairwiseInequality::complete(ineq.n_left())
                               : PairwiseInequality::bipartite(ineq.n_left(), ineq.n_right());
  for (const auto& [key, value] : ineq.coefficients()) out.set(key.first, key.second, value * factor);
  out.set_rhs(ineq.rhs() * factor);
  return out;
}

// Named inequalities.

/// (X1Y1 + X1Y2 + X2Y1 - X2Y2) / 2 <= 1
inline PairwiseInequality chsh() {
  auto ineq = PairwiseInequality::bipartite(2, 2, 1.0);
  ineq.set(0, 0, 0.5).set(0, 1, 0.5).set(1, 0, 0.5).set(1, 1, -0.5);
  return ineq;
}

/// -X1X2 - X1X3 - X2X3 <= 1
inline PairwiseInequality triangle() {
  auto ineq = PairwiseInequality::complete(3, 1.0);
  ineq.set(0, 1, -1.0).set(0, 2, -1.0).set(1, 2, -1.0);
  return ineq;
}

}  // namespace bellbound
