#pragma once

#include <bellbound/errors.hpp>
#include <bellbound/inequality.hpp>
#include <bellbound/vectors.hpp>

#include <cmath>
#include <cstddef>

namespace bellbound {

inline constexpr double kViolationTolerance = 1e-12;

/// Singlet expectation <S_x (x) S_y> = -x.y.
inline double singlet_correlation(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (x.size() != y.size()) throw DimensionError("singlet_correlation: dimension mismatch");
  return -x.dot(y);
}

struct ViolationReport {
  double quantum_value = 0.0;  // normalized by rhs
  double raw_value = 0.0;      // left-hand side before normalization
  double classical_bound_normalized = 1.0;
  bool violated = false;
  UnitVectorConfig config;
  PairwiseInequality inequality;
};

/// Left-hand side with products replaced by vector correlations, before normalization.
/// Complete mode uses the transported convention E(X_i X_j) = x_i.x_j; bipartite mode
/// uses the singlet E(X_i Y_j) = -x_i.y_j.
inline double quantum_sum(const PairwiseInequality& ineq, const UnitVectorConfig& config, bool transported) {
  if (config.size() != ineq.variable_count())
    throw DimensionError("quantum_value: config has " + std::to_string(config.size()) +
                         " vectors but the inequality has " +
                         std::to_string(ineq.variable_count()) + " variables");
  if (ineq.mode() == Mode::complete && !transported)
    throw ParameterError("complete-mode inequalities are evaluated with the transported convention");
  if (ineq.mode() == Mode::bipartite && transported)
    throw ParameterError("bipartite inequalities use the raw singlet convention (transported=false)");

  double sum = 0.0;
  for (const auto& [key, value] : ineq.coefficients()) {
    const auto [i, j] = ineq.flat(key);
    const double corr = transported ? config[i].dot(config[j]) : singlet_correlation(config[i], config[j]);
    sum += value * corr;
  }
  return sum;
}

inline ViolationReport quantum_value(const PairwiseInequality& ineq, const UnitVectorConfig& config,
                                     bool transported) {
  if (!(ineq.rhs() > 0.0)) throw ParameterError("quantum_value: normalization needs rhs > 0");
  ViolationReport report;
  report.raw_value = quantum_sum(ineq, config, transported);
  report.quantum_value = report.raw_value / ineq.rhs();
  report.violated = report.quantum_value > 1.0 + kViolationTolerance;
  report.config = config;
  report.inequality = ineq;
  return report;
}

/// Convention implied by the inequality's mode.
inline ViolationReport quantum_value(const PairwiseInequality& ineq, const UnitVectorConfig& config) {
  return quantum_value(ineq, config, ineq.mode() == Mode::complete);
}

/**
 * The p ring vectors come first, then q copies of the pole (0,0,1), matching
 * the X-then-Z layout of clique_web_inequality. Ring vector i is
 * (sin t cos(2 pi i/p + phase), sin t sin(2 pi i/p + phase), cos t).
 */
inline UnitVectorConfig bouquet(std::size_t p, std::size_t q, double theta, double phase = 0.0) {
  if (p < 1 || q < 1) throw ParameterError("bouquet requires p >= 1 and q >= 1");
  if (!(theta >= 0.0 && theta < M_PI / 2)) throw ParameterError("bouquet requires 0 <= theta < pi/2");
  std::vector<Eigen::VectorXd> v;
  v.reserve(p + q);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  for (std::size_t i = 0; i < p; ++i) {
    const double a = phase + 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(p);
    v.push_back(Eigen::Vector3d(s * std::cos(a), s * std::sin(a), c));
  }
  for (std::size_t j = 0; j < q; ++j) v.push_back(Eigen::Vector3d(0.0, 0.0, 1.0));
  return UnitVectorConfig(3, std::move(v));
}

/// Normalized clique-web value for the 12-bouquet, (p,q,r) = (12,3,4).
inline double v12_formula(double theta) {
  const double c12 = std::cos(M_PI / 12.0);
  const double s = std::sin(theta);
  return (36.0 * std::cos(theta) - 6.0 * std::cos(2.0 * theta) - 12.0 * (1.0 - 2.0 * c12 * c12 * s * s) - 3.0) /
         15.0;
}

/// Normalized clique-web value for the (2k+1)-bouquet, (p,q,r) = (2k+1, 2, k-1).
inline double v2k1_formula(std::size_t k, double theta) {
  if (k < 1) throw ParameterError("v2k1_formula requires k >= 1");
  const double kk = static_cast<double>(k);
  const double c = std::cos(M_PI / (4.0 * kk + 2.0));
  const double s = std::sin(theta);
  return ((2.0 * kk + 1.0) * (2.0 * std::cos(theta) - (1.0 - 2.0 * c * c * s * s)) - 1.0) / (2.0 * kk);
}

/// k -> infinity limit of v2k1_formula: 2cos t - cos 2t.
inline double v2k1_limit(double theta) { return 2.0 * std::cos(theta) - std::cos(2.0 * theta); }

}  // namespace bellbound
