#pragma once

// BELL(n), BELL(n,m), CUT(n) and COR(n) at enumeration scale: explicit
// vertices, membership with separating certificates, exact facet checks and
// the coordinate maps between them.

#include <bellbound/detail/exact_rank.hpp>
#include <bellbound/detail/hull_projection.hpp>
#include <bellbound/errors.hpp>
#include <bellbound/inequality.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace bellbound {

using IntPoint = std::vector<int>;

inline constexpr std::size_t kPolytopeGuard = 16;
inline constexpr double kMembershipTolerance = 1e-7;

struct PolytopeSpec {
  enum class Kind { bell_complete, bell_bipartite, cut, cor };

  Kind kind = Kind::bell_complete;
  std::size_t n = 0;
  std::size_t m = 0;  // bipartite only

  static PolytopeSpec bell(std::size_t n) { return {Kind::bell_complete, n, 0}; }
  static PolytopeSpec bell(std::size_t n, std::size_t m) { return {Kind::bell_bipartite, n, m}; }
  static PolytopeSpec cut(std::size_t n) { return {Kind::cut, n, 0}; }
  static PolytopeSpec cor(std::size_t n) { return {Kind::cor, n, 0}; }

  std::size_t ambient_dim() const {
    switch (kind) {
      case Kind::bell_complete:
      case Kind::cut: return n * (n - (n > 0 ? 1 : 0)) / 2;
      case Kind::bell_bipartite: return n * m;
      case Kind::cor: return n * (n + 1) / 2;
    }
    return 0;
  }

  std::string name() const {
    switch (kind) {
      case Kind::bell_complete: return "BELL(" + std::to_string(n) + ")";
      case Kind::bell_bipartite: return "BELL(" + std::to_string(n) + "," + std::to_string(m) + ")";
      case Kind::cut: return "CUT(" + std::to_string(n) + ")";
      case Kind::cor: return "COR(" + std::to_string(n) + ")";
    }
    return {};
  }

  void check_guard() const {
    const std::size_t bits = kind == Kind::bell_bipartite ? n + m : n;
    if (n == 0 || (kind == Kind::bell_bipartite && m == 0))
      throw ParameterError("polytope sizes must be positive");
    if (bits > kPolytopeGuard)
      throw ResourceLimitError(name() + " exceeds the vertex enumeration guard of " +
                               std::to_string(kPolytopeGuard) + " variables");
  }

  friend bool operator==(const PolytopeSpec&, const PolytopeSpec&) = default;
};

/// Parses names such as bell3, bell22, bell2x3, cut4, cor3.
inline PolytopeSpec parse_polytope(const std::string& text) {
  auto number = [&](const std::string& digits) -> std::size_t {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw ParameterError("bad polytope name: " + text);
    return static_cast<std::size_t>(std::stoul(digits));
  };
  if (text.rfind("cut", 0) == 0) return PolytopeSpec::cut(number(text.substr(3)));
  if (text.rfind("cor", 0) == 0) return PolytopeSpec::cor(number(text.substr(3)));
  if (text.rfind("bell", 0) == 0) {
    const std::string rest = text.substr(4);
    if (auto x = rest.find('x'); x != std::string::npos)
      return PolytopeSpec::bell(number(rest.substr(0, x)), number(rest.substr(x + 1)));
    if (rest.size() == 2) return PolytopeSpec::bell(number(rest.substr(0, 1)), number(rest.substr(1)));
    return PolytopeSpec::bell(number(rest));
  }
  throw ParameterError("unknown polytope: " + text);
}

/// Coordinate index of the pair (i < j) in lexicographic order over n items.
inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/**
 * Deduplicated vertex list. One-sided BELL and CUT fix the first variable
 * (the global flip / complement gives the same point); BELL(n,m) fixes X_1 = +1.
 */
inline std::vector<IntPoint> vertices(const PolytopeSpec& spec) {
  spec.check_guard();
  const std::size_t n = spec.n;
  std::vector<IntPoint> out;
  std::set<IntPoint> seen;
  auto push = [&](IntPoint v) {
    if (seen.insert(v).second) out.push_back(std::move(v));
  };

  switch (spec.kind) {
    case PolytopeSpec::Kind::bell_complete:
    case PolytopeSpec::Kind::cut: {
      const bool cut = spec.kind == PolytopeSpec::Kind::cut;
      for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
        const std::uint32_t bits = mask << 1;  // variable 0 fixed
        IntPoint v;
        v.reserve(spec.ambient_dim());
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) {
            const bool differ = ((bits >> i) & 1U) != ((bits >> j) & 1U);
            v.push_back(cut ? (differ ? 1 : 0) : (differ ? -1 : 1));
          }
        push(std::move(v));
      }
      break;
    }
    case PolytopeSpec::Kind::bell_bipartite: {
      const std::size_t m = spec.m;
      for (std::uint32_t mask = 0; mask < (1U << (n + m - 1)); ++mask) {
        const std::uint32_t bits = mask << 1;
        IntPoint v;
        v.reserve(n * m);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < m; ++j) {
            const int xi = ((bits >> i) & 1U) ? -1 : 1;
            const int yj = ((bits >> (n + j)) & 1U) ? -1 : 1;
            v.push_back(xi * yj);
          }
        push(std::move(v));
      }
      break;
    }
    case PolytopeSpec::Kind::cor: {
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        IntPoint v;
        v.reserve(spec.ambient_dim());
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i; j < n; ++j)
            v.push_back(static_cast<int>(((mask >> i) & 1U) & ((mask >> j) & 1U)));
        push(std::move(v));
      }
      break;
    }
  }
  return out;
}

struct SeparatingHyperplane {
  std::vector<double> normal;
  double offset = 0.0;  // <normal, v> <= offset for every vertex v
};

struct MembershipCertificate {
  bool inside = false;
  double distance = 0.0;
  std::vector<double> witness_point;  // nearest point of the polytope
  std::optional<SeparatingHyperplane> separating;
  std::size_t iterations = 0;
};

namespace detail {

inline Eigen::MatrixXd vertex_matrix(const std::vector<IntPoint>& verts, std::size_t dim) {
  Eigen::MatrixXd mat(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(verts.size()));
  for (std::size_t c = 0; c < verts.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r)
      mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = verts[c][r];
  return mat;
}

}  // namespace detail

/**
 * Decides membership by projecting the point onto the hull of the explicit
 * vertex list. Outside points come with the hyperplane through the projection
 * normal to (point - projection); its validity is re-checked on every vertex.
 */
inline MembershipCertificate membership(const PolytopeSpec& spec, std::span<const double> point,
                                        std::size_t max_iterations = 100000) {
  spec.check_guard();
  const std::size_t dim = spec.ambient_dim();
  if (point.size() != dim)
    throw DimensionError("membership: point has dimension " + std::to_string(point.size()) + ", expected " +
                         std::to_string(dim));
  const auto verts = vertices(spec);
  const Eigen::MatrixXd mat = detail::vertex_matrix(verts, dim);
  Eigen::VectorXd query(static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k) query(static_cast<Eigen::Index>(k)) = point[k];

  detail::HullProjectionOptions opts;
  opts.max_iterations = max_iterations;
  const auto proj = detail::project_onto_hull(mat, query, opts);

  MembershipCertificate cert;
  cert.distance = proj.distance;
  cert.iterations = proj.iterations;
  cert.witness_point.assign(proj.nearest.data(), proj.nearest.data() + proj.nearest.size());
  cert.inside = proj.distance <= kMembershipTolerance;
  if (!cert.inside) {
    const Eigen::VectorXd normal = query - proj.nearest;
    const double offset = (mat.transpose() * normal).maxCoeff();
    if (!(normal.dot(query) > offset))
      throw ConvergenceError("membership: separating hyperplane failed verification", proj.distance);
    cert.separating = SeparatingHyperplane{std::vector<double>(normal.data(), normal.data() + normal.size()), offset};
  }
  return cert;
}

struct FacetReport {
  bool valid = false;
  std::size_t tight_count = 0;
  std::size_t affine_rank = 0;  // affine dimension spanned by the tight vertices
  bool is_facet = false;
  bool exact_arithmetic = false;  // coefficients were scaled to integers for the tight test
  double max_excess = 0.0;        // largest <c, v> - rhs over vertices
};

/// Validity, tight set and exact affine rank of the tight vertices.
inline FacetReport facet_check(const PolytopeSpec& spec, std::span<const double> coefficients, double rhs) {
  spec.check_guard();
  const std::size_t dim = spec.ambient_dim();
  if (coefficients.size() != dim) throw DimensionError("facet_check: coefficient vector has wrong dimension");
  const auto verts = vertices(spec);

  // Dyadic coefficients are scaled to integers so tightness is decided exactly.
  std::optional<std::vector<long long>> scaled;
  long long scaled_rhs = 0;
  for (int shift = 0; shift <= 30 && !scaled; ++shift) {
    const double factor = std::ldexp(1.0, shift);
    auto integral = [&](double x) { return std::floor(x * factor) == x * factor && std::abs(x * factor) < 1e12; };
    if (!integral(rhs) || !std::all_of(coefficients.begin(), coefficients.end(), integral)) continue;
    std::vector<long long> c;
    for (double x : coefficients) c.push_back(static_cast<long long>(x * factor));
    scaled = std::move(c);
    scaled_rhs = static_cast<long long>(rhs * factor);
  }

  FacetReport report;
  report.exact_arithmetic = scaled.has_value();
  report.valid = true;
  report.max_excess = -std::numeric_limits<double>::infinity();
  std::vector<const IntPoint*> tight;
  for (const auto& v : verts) {
    double lhs = 0.0;
    for (std::size_t k = 0; k < dim; ++k) lhs += coefficients[k] * v[k];
    report.max_excess = std::max(report.max_excess, lhs - rhs);
    bool is_tight, is_valid;
    if (scaled) {
      long long s = 0;
      for (std::size_t k = 0; k < dim; ++k) s += (*scaled)[k] * v[k];
      is_tight = s == scaled_rhs;
      is_valid = s <= scaled_rhs;
    } else {
      const double tol = 1e-9 * std::max(1.0, std::abs(rhs));
      is_tight = std::abs(lhs - rhs) <= tol;
      is_valid = lhs <= rhs + tol;
    }
    if (!is_valid) report.valid = false;
    if (is_tight) tight.push_back(&v);
  }
  report.tight_count = tight.size();
  if (!tight.empty()) {
    detail::IntegerEchelon echelon(dim);
    const IntPoint& base = *tight.front();
    for (std::size_t t = 1; t < tight.size(); ++t) {
      std::vector<long long> diff(dim);
      for (std::size_t k = 0; k < dim; ++k) diff[k] = (*tight[t])[k] - base[k];
      echelon.insert(diff);
      if (echelon.rank() + 1 == dim) break;
    }
    report.affine_rank = echelon.rank();
  }
  report.is_facet = report.valid && !tight.empty() && report.affine_rank + 1 == dim;
  return report;
}

/// Coefficient vector of an inequality in BELL(n) or BELL(n,m) coordinates.
inline std::vector<double> bell_coordinates(const PairwiseInequality& ineq) {
  if (ineq.mode() == Mode::complete) {
    const std::size_t n = ineq.n_left();
    std::vector<double> c(n * (n - (n > 0 ? 1 : 0)) / 2, 0.0);
    for (const auto& [key, value] : ineq.coefficients()) c[pair_index(n, key.first, key.second)] = value;
    return c;
  }
  std::vector<double> c(ineq.n_left() * ineq.n_right(), 0.0);
  for (const auto& [key, value] : ineq.coefficients()) c[key.first * ineq.n_right() + key.second] = value;
  return c;
}

inline PolytopeSpec bell_polytope_of(const PairwiseInequality& ineq) {
  return ineq.mode() == Mode::complete ? PolytopeSpec::bell(ineq.n_left())
                                       : PolytopeSpec::bell(ineq.n_left(), ineq.n_right());
}

/// Coefficient vector of a cut-form inequality in CUT(n) coordinates.
inline std::vector<double> cut_coordinates(const CutInequality& ineq) {
  std::vector<double> c(ineq.n * (ineq.n - (ineq.n > 0 ? 1 : 0)) / 2, 0.0);
  for (const auto& [key, value] : ineq.coefficients) c[pair_index(ineq.n, key.first, key.second)] = value;
  return c;
}

/// v_ij = 1 - 2 c_ij
inline std::vector<double> cut_to_bell(std::span<const double> cut) {
  std::vector<double> out(cut.size());
  std::transform(cut.begin(), cut.end(), out.begin(), [](double c) { return 1.0 - 2.0 * c; });
  return out;
}

/// c_ij = (1 - v_ij) / 2
inline std::vector<double> bell_to_cut(std::span<const double> bell) {
  std::vector<double> out(bell.size());
  std::transform(bell.begin(), bell.end(), out.begin(), [](double v) { return 0.5 * (1.0 - v); });
  return out;
}

inline std::size_t triangular_root(std::size_t pairs) {
  std::size_t n = 0;
  while (n * (n - (n > 0 ? 1 : 0)) / 2 < pairs) ++n;
  if (n * (n - (n > 0 ? 1 : 0)) / 2 != pairs)
    throw DimensionError("point length " + std::to_string(pairs) + " is not n(n-1)/2");
  return std::max<std::size_t>(n, 1);
}

/// BELL(n) point to BELL(n,n) coordinates: v_ij = v_ji = u_ij, v_ii = 1.
inline std::vector<double> bell_embed(std::span<const double> u) {
  const std::size_t n = triangular_root(u.size());
  std::vector<double> v(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double x = u[pair_index(n, i, j)];
      v[i * n + j] = x;
      v[j * n + i] = x;
    }
  return v;
}

}  // namespace bellbound
