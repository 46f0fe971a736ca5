#pragma once

// Euclidean projection of a point onto the convex hull of finitely many
// points by Wolfe's nearest-point method: a support query picks the vertex
// that most decreases the objective, and the active set ("corral") is kept
// affinely independent with its affine minimizer in the relative interior.

#include <bellbound/errors.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace bellbound::detail {

struct HullProjection {
  Eigen::VectorXd nearest;  // projection of the query onto the hull
  double distance = 0.0;
  std::size_t iterations = 0;
  std::vector<std::size_t> support;  // vertex columns with positive weight
  std::vector<double> weights;
};

struct HullProjectionOptions {
  std::size_t max_iterations = 100000;
  double gap_tolerance = 1e-15;  // relative to the squared point radius
};

inline HullProjection project_onto_hull(const Eigen::MatrixXd& vertices, const Eigen::VectorXd& query,
                                        const HullProjectionOptions& options = {}) {
  const Eigen::Index m = vertices.cols();
  if (m == 0) throw DimensionError("project_onto_hull: empty vertex set");
  if (vertices.rows() != query.size()) throw DimensionError("project_onto_hull: dimension mismatch");

  const Eigen::MatrixXd shifted = vertices.colwise() - query;
  const double radius2 = std::max(1.0, shifted.colwise().squaredNorm().maxCoeff());
  const double weight_eps = 1e-13;

  std::vector<Eigen::Index> corral;
  std::vector<double> lambda;
  Eigen::Index start;
  shifted.colwise().squaredNorm().minCoeff(&start);
  corral.push_back(start);
  lambda.push_back(1.0);
  Eigen::VectorXd x = shifted.col(start);

  auto combine = [&](const std::vector<double>& w) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(shifted.rows());
    for (std::size_t k = 0; k < corral.size(); ++k) out += w[k] * shifted.col(corral[k]);
    return out;
  };

  auto affine_minimizer = [&]() {
    std::vector<double> alpha(corral.size(), 0.0);
    if (corral.size() == 1) {
      alpha[0] = 1.0;
      return alpha;
    }
    const Eigen::VectorXd base = shifted.col(corral[0]);
    Eigen::MatrixXd diffs(shifted.rows(), static_cast<Eigen::Index>(corral.size() - 1));
    for (std::size_t k = 1; k < corral.size(); ++k)
      diffs.col(static_cast<Eigen::Index>(k - 1)) = shifted.col(corral[k]) - base;
    const Eigen::VectorXd beta = diffs.colPivHouseholderQr().solve(-base);
    double sum = 0.0;
    for (std::size_t k = 1; k < corral.size(); ++k) {
      alpha[k] = beta(static_cast<Eigen::Index>(k - 1));
      sum += alpha[k];
    }
    alpha[0] = 1.0 - sum;
    return alpha;
  };

  HullProjection result;
  std::size_t iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    const double xx = x.squaredNorm();
    if (xx <= 1e-30) break;
    Eigen::Index j;
    const double best = (shifted.transpose() * x).minCoeff(&j);
    if (xx - best <= options.gap_tolerance * radius2) break;
    if (std::find(corral.begin(), corral.end(), j) != corral.end()) break;
    corral.push_back(j);
    lambda.push_back(0.0);

    // Minor cycles: move towards the affine minimizer until it lies inside the corral's hull.
    for (std::size_t minor = 0; minor <= corral.size() + 1; ++minor) {
      const auto alpha = affine_minimizer();
      const bool interior = std::all_of(alpha.begin(), alpha.end(), [&](double a) { return a > weight_eps; });
      if (interior) {
        lambda = alpha;
        x = combine(lambda);
        break;
      }
      double theta = 1.0;
      for (std::size_t k = 0; k < alpha.size(); ++k)
        if (alpha[k] <= weight_eps) theta = std::min(theta, lambda[k] / (lambda[k] - alpha[k]));
      std::vector<Eigen::Index> next_corral;
      std::vector<double> next_lambda;
      double total = 0.0;
      for (std::size_t k = 0; k < alpha.size(); ++k) {
        const double w = (1.0 - theta) * lambda[k] + theta * alpha[k];
        if (w > weight_eps) {
          next_corral.push_back(corral[k]);
          next_lambda.push_back(w);
          total += w;
        }
      }
      if (next_corral.empty()) {  // numerical collapse; restart from the newest vertex
        next_corral.push_back(j);
        next_lambda.push_back(1.0);
        total = 1.0;
      }
      for (auto& w : next_lambda) w /= total;
      corral = std::move(next_corral);
      lambda = std::move(next_lambda);
      x = combine(lambda);
    }
  }
  if (iter >= options.max_iterations)
    throw ConvergenceError("project_onto_hull: iteration cap reached", x.norm());

  result.iterations = iter;
  result.nearest = query + x;
  result.distance = x.norm();
  for (std::size_t k = 0; k < corral.size(); ++k) {
    result.support.push_back(static_cast<std::size_t>(corral[k]));
    result.weights.push_back(lambda[k]);
  }
  return result;
}

}  // namespace bellbound::detail
