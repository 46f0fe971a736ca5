#pragma once

// Explicit operator realizations of dot-product correlations: observables
// A_i = sum_k x_ik g_k built from pairwise anticommuting generators g_k,
// B_j = transpose(A_j), shared maximally entangled state.

#include <bellbound/errors.hpp>
#include <bellbound/vectors.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace bellbound {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr std::size_t kMaxGenerators = 12;

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline std::size_t clifford_dimension(std::size_t n) { return std::size_t{1} << ((n + 1) / 2); }

/**
 * n Hermitian, traceless, pairwise anticommuting matrices squaring to I, of
 * size 2^ceil(n/2). Generator 2a is Z^(a) (x) X (x) I..., generator 2a+1 is
 * Z^(a) (x) Y (x) I...
 */
inline std::vector<ComplexMatrix> clifford_generators(std::size_t n) {
  if (n < 1 || n > kMaxGenerators)
    throw ResourceLimitError("clifford_generators: n must be in [1, 12]");
  using C = std::complex<double>;
  ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << C(0, 0), C(1, 0), C(1, 0), C(0, 0);
  sy << C(0, 0), C(0, -1), C(0, 1), C(0, 0);
  sz << C(1, 0), C(0, 0), C(0, 0), C(-1, 0);

  const std::size_t qubits = (n + 1) / 2;
  std::vector<ComplexMatrix> gens;
  gens.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t site = k / 2;
    ComplexMatrix g = ComplexMatrix::Identity(1, 1);
    for (std::size_t s = 0; s < qubits; ++s) {
      const ComplexMatrix& factor = s < site ? sz : (s == site ? (k % 2 == 0 ? sx : sy) : id);
      g = kron(g, factor);
    }
    gens.push_back(std::move(g));
  }
  return gens;
}

struct OperatorRealization {
  std::size_t n = 0;  // observables per side
  std::size_t d = 0;  // local Hilbert-space dimension
  std::vector<ComplexMatrix> a_ops;
  std::vector<ComplexMatrix> b_ops;
  ComplexVector state;  // d*d components, index a*d + b for |a>|b>
};

/// (1/sqrt d) sum_m |m>|m>
inline ComplexVector maximally_entangled_state(std::size_t d) {
  ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(d * d));
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t m = 0; m < d; ++m) psi(static_cast<Eigen::Index>(m * d + m)) = amp;
  return psi;
}

/// Realizes <A_i (x) B_j> = x_i . x_j using one generator per spatial dimension.
inline OperatorRealization realize(const UnitVectorConfig& config) {
  const std::size_t dim = std::max<std::size_t>(config.dim(), 1);
  if (dim > kMaxGenerators)
    throw ResourceLimitError("realize: vector dimension exceeds 12 generators");
  for (const auto& v : config.vectors())
    if (std::abs(v.norm() - 1.0) > kUnitNormTolerance) throw ParameterError("realize: non-unit vector");

  const auto gens = clifford_generators(dim);
  OperatorRealization out;
  out.n = config.size();
  out.d = static_cast<std::size_t>(gens.front().rows());
  for (const auto& x : config.vectors()) {
    ComplexMatrix a = ComplexMatrix::Zero(gens.front().rows(), gens.front().cols());
    for (Eigen::Index k = 0; k < x.size(); ++k) a += x(k) * gens[static_cast<std::size_t>(k)];
    out.b_ops.push_back(a.transpose());
    out.a_ops.push_back(std::move(a));
  }
  out.state = maximally_entangled_state(out.d);
  return out;
}

/// Largest deviation observed for each checked property (max absolute entry error).
struct RealizationReport {
  double hermiticity = 0.0;
  double square_identity = 0.0;
  double trace = 0.0;
  double marginals = 0.0;
  double correlation = 0.0;     // |<A_i (x) B_j> - x_i . x_j|
  double anticommutator = 0.0;  // |A_i A_j + A_j A_i - 2 (x_i . x_j) I|
  double state_norm = 0.0;
  std::size_t dimension = 0;

  double max_deviation() const {
    return std::max({hermiticity, square_identity, trace, marginals, correlation, anticommutator, state_norm});
  }
  bool passed(double tolerance = 1e-10) const { return max_deviation() < tolerance; }
};

namespace detail {

inline double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// <psi| A (x) B |psi> = tr(Psi^dagger A Psi B^T) with Psi the d x d coefficient matrix.
inline std::complex<double> expectation(const ComplexMatrix& psi, const ComplexMatrix& a, const ComplexMatrix& b) {
  return (psi.adjoint() * a * psi * b.transpose()).trace();
}

}  // namespace detail

/// Checks every property of a realization against the Gram matrix of config.
inline RealizationReport verify_realization(const OperatorRealization& real, const UnitVectorConfig& config) {
  if (real.a_ops.size() != config.size() || real.b_ops.size() != config.size())
    throw DimensionError("verify_realization: operator count does not match config");
  const auto d = static_cast<Eigen::Index>(real.d);
  if (real.state.size() != d * d) throw DimensionError("verify_realization: state has wrong size");

  RealizationReport report;
  report.dimension = real.d;
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  ComplexMatrix psi(d, d);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b) psi(a, b) = real.state(a * d + b);
  report.state_norm = std::abs(real.state.norm() - 1.0);

  auto check_observable = [&](const ComplexMatrix& op) {
    if (op.rows() != d || op.cols() != d) throw DimensionError("verify_realization: operator has wrong shape");
    report.hermiticity = std::max(report.hermiticity, detail::max_abs(op - op.adjoint()));
    report.square_identity = std::max(report.square_identity, detail::max_abs(op * op - id));
    report.trace = std::max(report.trace, std::abs(op.trace()));
  };
  for (const auto& a : real.a_ops) check_observable(a);
  for (const auto& b : real.b_ops) check_observable(b);

  const auto gram = config.gram();
  const std::size_t n = config.size();
  for (std::size_t i = 0; i < n; ++i) {
    report.marginals = std::max(report.marginals, std::abs(detail::expectation(psi, real.a_ops[i], id)));
    report.marginals = std::max(report.marginals, std::abs(detail::expectation(psi, id, real.b_ops[i])));
    for (std::size_t j = 0; j < n; ++j) {
      const auto corr = detail::expectation(psi, real.a_ops[i], real.b_ops[j]);
      report.correlation = std::max(report.correlation, std::abs(corr - gram(i, j)));
      const ComplexMatrix anti_a = real.a_ops[i] * real.a_ops[j] + real.a_ops[j] * real.a_ops[i];
      const ComplexMatrix anti_b = real.b_ops[i] * real.b_ops[j] + real.b_ops[j] * real.b_ops[i];
      report.anticommutator = std::max(report.anticommutator, detail::max_abs(anti_a - 2.0 * gram(i, j) * id));
      report.anticommutator = std::max(report.anticommutator, detail::max_abs(anti_b - 2.0 * gram(i, j) * id));
    }
  }
  return report;
}

}  // namespace bellbound
