#pragma once

#include <bellbound/errors.hpp>
#include <bellbound/inequality.hpp>
#include <bellbound/quantum.hpp>
#include <bellbound/random.hpp>
#include <bellbound/vectors.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bellbound {

/// Known values and bounds for the Grothendieck constants.
struct GrothendieckBounds {
  static constexpr double kg2 = 1.41421356237309504880;  // K_G(2) = sqrt 2
  static constexpr double kg3_lower = 1.41421356237309504880;
  static constexpr double kg3_upper = 1.5163;
  static constexpr double kg_lower = 1.6770;
  static constexpr double kg_upper = 1.7822;  // pi / (2 log(1 + sqrt 2))
};

/// Golden-section search for a maximum of f on [lo, hi].
inline double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                      double tolerance = 1e-10, int max_iterations = 500) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iterations && (b - a) > tolerance; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

struct BouquetFamily {
  enum class Kind { bouquet12, bouquet2k1 };
  Kind kind = Kind::bouquet12;
  std::size_t k = 0;

  static BouquetFamily twelve() { return {Kind::bouquet12, 0}; }
  static BouquetFamily odd(std::size_t k) {
    if (k < 1) throw ParameterError("(2k+1)-bouquet requires k >= 1");
    return {Kind::bouquet2k1, k};
  }

  double value(double theta) const {
    return kind == Kind::bouquet12 ? v12_formula(theta) : v2k1_formula(k, theta);
  }
  std::string name() const { return kind == Kind::bouquet12 ? "b12" : "b2k1(k=" + std::to_string(k) + ")"; }
};

struct ThetaScanResult {
  std::vector<std::pair<double, double>> grid;  // (theta, V)
  double best_theta = 0.0;
  double best_value = 0.0;
  std::optional<std::pair<double, double>> violation_interval;  // V > 1 around best_theta
};

/**
 * Evaluates V on grid_points midpoints of (0, pi/2), refines the best grid
 * point by golden-section search, and brackets the region where V > 1 around
 * it by bisection on V - 1.
 */
inline ThetaScanResult scan_theta(const BouquetFamily& family, std::size_t grid_points) {
  if (grid_points < 10) throw ParameterError("scan_theta needs at least 10 grid points");
  const double h = (M_PI / 2.0) / static_cast<double>(grid_points);
  ThetaScanResult out;
  out.grid.reserve(grid_points);
  std::size_t best_index = 0;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double theta = (static_cast<double>(i) + 0.5) * h;
    const double v = family.value(theta);
    out.grid.emplace_back(theta, v);
    if (v > out.grid[best_index].second) best_index = i;
  }

  const auto f = [&](double t) { return family.value(t); };
  const double lo = std::max(0.0, out.grid[best_index].first - h);
  const double hi = std::min(M_PI / 2.0, out.grid[best_index].first + h);
  const double refined = golden_section_maximize(f, lo, hi, 1e-10);
  if (f(refined) >= out.grid[best_index].second) {
    out.best_theta = refined;
    out.best_value = f(refined);
  } else {
    out.best_theta = out.grid[best_index].first;
    out.best_value = out.grid[best_index].second;
  }

  if (out.best_value > 1.0) {
    auto bisect = [&](double inside, double outside) {
      for (int i = 0; i < 200 && std::abs(inside - outside) > 1e-13; ++i) {
        const double mid = 0.5 * (inside + outside);
        (f(mid) > 1.0 ? inside : outside) = mid;
      }
      return 0.5 * (inside + outside);
    };
    // Walk the grid outward to the first points with V <= 1.
    std::size_t left = best_index, right = best_index;
    while (left > 0 && out.grid[left - 1].second > 1.0) --left;
    while (right + 1 < grid_points && out.grid[right + 1].second > 1.0) ++right;
    const double lo_theta = left > 0 ? bisect(out.grid[left].first, out.grid[left - 1].first) : 0.0;
    const double hi_theta =
        right + 1 < grid_points ? bisect(out.grid[right].first, out.grid[right + 1].first) : M_PI / 2.0;
    out.violation_interval = std::make_pair(lo_theta, hi_theta);
  }
  return out;
}

struct GramAscentOptions {
  std::size_t dim = 2;
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
  std::size_t max_sweeps = 20000;
  double tolerance = 1e-10;
  unsigned workers = 1;
  EnumerationOptions enumeration{};
  // Called with the objective after each coordinate update (restart index, objective).
  std::function<void(std::size_t, double)> on_step;
};

struct GramAscentResult {
  UnitVectorConfig config;
  double objective = 0.0;  // sum_{i<j} a_ij x_i.x_j
  double classical = 0.0;  // classical bound of the coefficients
  double ratio = 0.0;      // objective / classical
  std::size_t restarts_used = 0;
  bool converged = false;
  bool monotone = true;    // no coordinate step decreased the objective
};

inline double gram_objective(const PairwiseInequality& a, const UnitVectorConfig& config) {
  return quantum_sum(a, config, true);
}

namespace detail {

struct SingleAscent {
  std::vector<Eigen::VectorXd> x;
  double objective = 0.0;
  bool converged = false;
  bool monotone = true;
};

inline double dense_objective(const std::vector<double>& w, std::size_t n, const std::vector<Eigen::VectorXd>& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += w[i * n + j] * x[i].dot(x[j]);
  return s;
}

inline SingleAscent ascend(const std::vector<double>& w, std::size_t n, const GramAscentOptions& opt,
                           std::size_t restart) {
  Rng rng(opt.seed, restart);
  SingleAscent run;
  run.x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) run.x.push_back(rng.unit_vector(opt.dim));
  run.objective = dense_objective(w, n, run.x);

  for (std::size_t sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    const double start = run.objective;
    for (std::size_t i = 0; i < n; ++i) {
      Eigen::VectorXd field = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(opt.dim));
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && w[i * n + j] != 0.0) field += w[i * n + j] * run.x[j];
      const double norm = field.norm();
      if (norm == 0.0) continue;  // zero gradient: keep x_i for this pass
      // The objective changes by field.(x_new - x_old) >= 0.
      const double gain = norm - field.dot(run.x[i]);
      run.x[i] = field / norm;
      if (opt.on_step) {
        const double exact = dense_objective(w, n, run.x);
        if (exact < run.objective - 1e-12) run.monotone = false;
        run.objective = exact;
        opt.on_step(restart, run.objective);
      } else {
        if (gain < -1e-12) run.monotone = false;
        run.objective += gain;
      }
    }
    // Resynchronize to avoid drift from the incremental updates.
    run.objective = dense_objective(w, n, run.x);
    if (run.objective - start < opt.tolerance) {
      run.converged = true;
      break;
    }
  }
  return run;
}

}  // namespace detail

/**
 * Block-coordinate ascent for sup sum_{i<j} a_ij x_i.x_j over unit vectors in
 * R^dim: each step sets x_i to the normalized local field sum_j a_ij x_j,
 * which maximizes the objective in x_i. The best of several seeded restarts
 * is returned together with its ratio to the classical (+-1) bound.
 */
inline GramAscentResult gram_ascent(const PairwiseInequality& a, const GramAscentOptions& opt = {}) {
  const PairwiseInequality complete = as_complete(a);
  const std::size_t n = complete.variable_count();
  if (opt.dim < 1) throw ParameterError("gram_ascent requires dim >= 1");
  if (n > 0 && opt.dim > n) throw ParameterError("gram_ascent requires dim <= number of vectors");
  if (opt.restarts < 1) throw ParameterError("gram_ascent requires at least one restart");

  const auto w = complete.dense_weights<double>();
  std::vector<detail::SingleAscent> runs(opt.restarts);
  const unsigned workers = std::max(1U, opt.workers);
  if (workers == 1 || opt.on_step) {
    for (std::size_t r = 0; r < opt.restarts; ++r) runs[r] = detail::ascend(w, n, opt, r);
  } else {
    for (std::size_t begin = 0; begin < opt.restarts; begin += workers) {
      std::vector<std::future<detail::SingleAscent>> batch;
      const std::size_t end = std::min(opt.restarts, begin + workers);
      for (std::size_t r = begin; r < end; ++r)
        batch.push_back(std::async(std::launch::async, [&, r] { return detail::ascend(w, n, opt, r); }));
      for (std::size_t r = begin; r < end; ++r) runs[r] = batch[r - begin].get();
    }
  }

  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r)
    if (runs[r].objective > runs[best].objective) best = r;

  GramAscentResult result;
  result.config = UnitVectorConfig(opt.dim, runs[best].x);
  result.objective = gram_objective(complete, result.config);
  result.classical = classical_bound(complete, opt.enumeration).max_value;
  result.restarts_used = opt.restarts;
  result.converged = runs[best].converged;
  result.monotone = std::all_of(runs.begin(), runs.end(), [](const auto& r) { return r.monotone; });
  // With all-zero coefficients both sides vanish; report no advantage.
  result.ratio = result.classical > 0.0 ? result.objective / result.classical : 1.0;
  return result;
}

struct RatioProbeSummary {
  std::size_t n = 0;
  std::size_t instances = 0;
  std::vector<double> ratios;  // per instance, in generation order
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  std::size_t argmax_instance = 0;
  bool lhv_violation_found = false;  // some ratio > 1
  bool exceeds_kg2 = false;
  bool exceeds_kg3_upper = false;
};

/// Random +-1 coefficients on the pairs of K_n drawn from a seeded stream.
inline PairwiseInequality random_sign_coefficients(std::size_t n, Rng& rng) {
  auto a = PairwiseInequality::complete(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a.set(i, j, static_cast<double>(rng.sign()));
  return a;
}

namespace detail {

inline RatioProbeSummary summarize(std::size_t n, std::vector<double> ratios) {
  RatioProbeSummary s;
  s.n = n;
  s.instances = ratios.size();
  double total = 0.0;
  for (std::size_t k = 0; k < ratios.size(); ++k) {
    total += ratios[k];
    if (ratios[k] > s.max_ratio) {
      s.max_ratio = ratios[k];
      s.argmax_instance = k;
    }
  }
  s.mean_ratio = ratios.empty() ? 0.0 : total / static_cast<double>(ratios.size());
  s.lhv_violation_found = s.max_ratio > 1.0 + 1e-9;
  s.exceeds_kg2 = s.max_ratio > GrothendieckBounds::kg2;
  s.exceeds_kg3_upper = s.max_ratio > GrothendieckBounds::kg3_upper;
  s.ratios = std::move(ratios);
  return s;
}

}  // namespace detail

/// Ratio of vector to classical suprema over random +-1 instances on K_n (vectors in R^n).
inline RatioProbeSummary ratio_probe(std::size_t n, std::size_t instances, std::uint64_t seed,
                                     std::size_t restarts = 16, const EnumerationOptions& enumeration = {}) {
  if (n > enumeration.guard) throw ResourceLimitError("ratio_probe: n exceeds enumeration guard");
  if (n < 2) throw ParameterError("ratio_probe requires n >= 2");
  Rng rng(seed, 0xC0FFEE);
  std::vector<double> ratios;
  ratios.reserve(instances);
  for (std::size_t k = 0; k < instances; ++k) {
    const auto a = random_sign_coefficients(n, rng);
    GramAscentOptions opt;
    opt.dim = n;
    opt.restarts = restarts;
    opt.seed = splitmix64(seed + k);
    opt.enumeration = enumeration;
    ratios.push_back(gram_ascent(a, opt).ratio);
  }
  return detail::summarize(n, std::move(ratios));
}

/// Same probe over every +-1 sign pattern on the pairs of K_n (n <= 6).
inline RatioProbeSummary ratio_probe_exhaustive(std::size_t n, std::uint64_t seed, std::size_t restarts = 16) {
  if (n < 2 || n > 6) throw ResourceLimitError("ratio_probe_exhaustive supports 2 <= n <= 6");
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<double> ratios;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    auto a = PairwiseInequality::complete(n);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++bit) a.set(i, j, ((mask >> bit) & 1U) ? -1.0 : 1.0);
    GramAscentOptions opt;
    opt.dim = n;
    opt.restarts = restarts;
    opt.seed = splitmix64(seed + mask);
    ratios.push_back(gram_ascent(a, opt).ratio);
  }
  return detail::summarize(n, std::move(ratios));
}

}  // namespace bellbound
