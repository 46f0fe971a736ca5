#pragma once

// Werner-state analysis under worst-case symmetry breaking between the two
// parties: E(X_i Y_i) = -eta only pins E(X_i X_j) to a band of width 2(1-eta).

#include <bellbound/errors.hpp>
#include <bellbound/inequality.hpp>
#include <bellbound/quantum.hpp>
#include <bellbound/vectors.hpp>
#include <bellbound/webs.hpp>

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

namespace bellbound {

/// Werner mixing parameter. eta = 1 is the pure singlet.
struct WernerParams {
  static constexpr double separable_below = 1.0 / 3.0;
  static constexpr double chsh_violation_above = 0.70710678118654752440;  // 1/sqrt 2

  explicit WernerParams(double eta_) : eta(eta_) {
    if (!(eta > 0.0 && eta <= 1.0)) throw ParameterError("Werner eta must lie in (0, 1]");
  }
  double eta;
};

/// tr[rho_eta (S_x (x) S_y)] = -eta x.y
inline double werner_correlation(double eta, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  return WernerParams(eta).eta * singlet_correlation(x, y);
}

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double v, double tol = 0.0) const { return v >= lo - tol && v <= hi + tol; }
};

/// Admissible E(X_i X_j) when E(X_i Y_i) = -eta and E(X_i Y_j) = e_xy.
inline Interval symmetry_band(double eta, double e_xy) {
  WernerParams params(eta);
  if (std::abs(e_xy) > params.eta + 1e-15) throw ParameterError("symmetry_band requires |e_xy| <= eta");
  const double slack = 1.0 - params.eta;
  return {-slack - e_xy, slack - e_xy};
}

enum class ThresholdSource { triangle_formula, clique_web_formula, partitioned_general };

inline std::string to_string(ThresholdSource s) {
  switch (s) {
    case ThresholdSource::triangle_formula: return "triangle_formula";
    case ThresholdSource::clique_web_formula: return "clique_web_formula";
    case ThresholdSource::partitioned_general: return "partitioned_general";
  }
  return {};
}

struct ThresholdReport {
  double eta_threshold = 1.0;  // violation for every eta above this value
  ThresholdSource source = ThresholdSource::partitioned_general;
  bool violation_possible = false;  // false when no eta <= 1 gives a violation
  double quantum_value = 0.0;       // |sum b_ij x_i.x_j|, or V for the clique-web formula
  double noise = 0.0;               // N{b}, where applicable
};

/**
 * Three measurement directions shared by both sides; worst-case symmetry
 * breaking gives a violation when eta * S - (1 - eta) > 1 with
 * S = -(x1.x2 + x1.x3 + x2.x3), i.e. eta > 2 / (S + 1).
 */
inline ThresholdReport triangle_threshold(const UnitVectorConfig& config = planar_star(3)) {
  if (config.size() != 3) throw DimensionError("triangle_threshold needs three vectors");
  const double s = -(config[0].dot(config[1]) + config[0].dot(config[2]) + config[1].dot(config[2]));
  ThresholdReport report;
  report.source = ThresholdSource::triangle_formula;
  report.quantum_value = s;
  report.noise = 1.0;
  report.violation_possible = s > 1.0;
  report.eta_threshold = report.violation_possible ? 2.0 / (s + 1.0) : 1.0;
  return report;
}

/// eta > p / ((r+1) V + p - r - 1), with V the normalized clique-web value.
inline ThresholdReport cliqueweb_threshold(const WebSpec& spec, double v) {
  spec.validate();
  const double p = static_cast<double>(spec.p);
  const double r1 = static_cast<double>(spec.r + 1);
  ThresholdReport report;
  report.source = ThresholdSource::clique_web_formula;
  report.quantum_value = v;
  report.violation_possible = v > 1.0;
  report.eta_threshold = report.violation_possible ? p / (r1 * v + p - r1) : 1.0;
  return report;
}

struct NoiseQuantity {
  double value = 0.0;  // N{b}: minimum same-side weight over bipartitions
  SignAssignment argmin_partition;
  double total_weight = 0.0;
};

/**
 * N{b} = min_Z sum_{i<j} |b_ij| (1 + Z_i Z_j) / 2, i.e. the total |b| weight
 * minus the maximum cut of K_n weighted by |b_ij|. Solved exactly by running
 * the classical-bound enumeration on the coefficients -|b_ij|.
 */
inline NoiseQuantity noise_quantity(const PairwiseInequality& b, const EnumerationOptions& options = {}) {
  if (b.mode() != Mode::complete) throw ParameterError("noise_quantity requires complete-mode coefficients");
  auto negated = PairwiseInequality::complete(b.n_left());
  double total = 0.0;
  for (const auto& [key, value] : b.coefficients()) {
    negated.set(key.first, key.second, -std::abs(value));
    total += std::abs(value);
  }
  const auto best = classical_bound(negated, options);

  NoiseQuantity out;
  out.total_weight = total;
  out.argmin_partition = best.argmax;
  double same_side = 0.0;
  for (const auto& [key, value] : b.coefficients())
    if (best.argmax[key.first] == best.argmax[key.second]) same_side += std::abs(value);
  out.value = same_side;
  return out;
}

namespace detail {

inline void require_normalized(const PairwiseInequality& b, const EnumerationOptions& options) {
  if (b.mode() != Mode::complete) throw ParameterError("noise analysis requires complete-mode coefficients");
  const double bound = classical_bound(b, options).max_value;
  if (std::abs(bound - 1.0) > 1e-9)
    throw ParameterError("coefficients must be normalized so the classical bound is 1 (got " +
                         std::to_string(bound) + ")");
}

}  // namespace detail

/// Rescales so the classical maximum of the left-hand side is 1; rhs becomes 1.
inline PairwiseInequality normalized_to_classical_bound(const PairwiseInequality& b,
                                                        const EnumerationOptions& options = {}) {
  const double bound = classical_bound(b, options).max_value;
  if (!(bound > 0.0)) throw ParameterError("cannot normalize: classical bound is not positive");
  auto out = scaled(b, 1.0 / bound);
  out.set_rhs(1.0);
  return out;
}

/// eta > (N + 1) / (N + |sum b_ij x_i.x_j|) for a normalized coefficient set.
inline ThresholdReport partitioned_threshold(const PairwiseInequality& b, const UnitVectorConfig& config,
                                             const EnumerationOptions& options = {}) {
  detail::require_normalized(b, options);
  ThresholdReport report;
  report.source = ThresholdSource::partitioned_general;
  report.quantum_value = std::abs(quantum_sum(b, config, true));
  report.noise = noise_quantity(b, options).value;
  report.violation_possible = report.quantum_value > 1.0;
  report.eta_threshold =
      report.violation_possible ? (report.noise + 1.0) / (report.noise + report.quantum_value) : 1.0;
  return report;
}

/// V_n(eta) = eta |sum b_ij x_i.x_j| - (1 - eta) N{b}; a violation iff > 1.
inline double noisy_violation(const PairwiseInequality& b, const UnitVectorConfig& config, double eta,
                              const EnumerationOptions& options = {}) {
  WernerParams params(eta);
  detail::require_normalized(b, options);
  const double q = std::abs(quantum_sum(b, config, true));
  const double n = noise_quantity(b, options).value;
  return params.eta * q - (1.0 - params.eta) * n;
}

}  // namespace bellbound
