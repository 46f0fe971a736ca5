#pragma once

// JSON file formats. Indices are 0-based everywhere.

#include <bellbound/errors.hpp>
#include <bellbound/inequality.hpp>
#include <bellbound/noise.hpp>
#include <bellbound/optimizer.hpp>
#include <bellbound/polytopes.hpp>
#include <bellbound/tsirelson.hpp>
#include <bellbound/vectors.hpp>
#include <bellbound/webs.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace bellbound {

using json = nlohmann::json;

// --- inequality: {"mode","n_left","n_right","coefficients":[{"i","j","value"}],"rhs"}

inline void to_json(json& j, const PairwiseInequality& ineq) {
  json coeffs = json::array();
  for (const auto& [key, value] : ineq.coefficients())
    coeffs.push_back({{"i", key.first}, {"j", key.second}, {"value", value}});
  j = json{{"mode", ineq.mode() == Mode::complete ? "complete" : "bipartite"},
           {"n_left", ineq.n_left()},
           {"n_right", ineq.n_right()},
           {"coefficients", std::move(coeffs)},
           {"rhs", ineq.rhs()}};
}

inline void from_json(const json& j, PairwiseInequality& ineq) {
  const auto mode = j.at("mode").get<std::string>();
  const auto n_left = j.at("n_left").get<std::size_t>();
  const auto n_right = j.value("n_right", std::size_t{0});
  const double rhs = j.at("rhs").get<double>();
  if (mode == "complete") {
    if (n_right != 0) throw ParameterError("complete-mode inequality must have n_right = 0");
    ineq = PairwiseInequality::complete(n_left, rhs);
  } else if (mode == "bipartite") {
    ineq = PairwiseInequality::bipartite(n_left, n_right, rhs);
  } else {
    throw ParameterError("unknown inequality mode: " + mode);
  }
  for (const auto& c : j.at("coefficients")) {
    const auto i = c.at("i").get<std::size_t>();
    const auto k = c.at("j").get<std::size_t>();
    if (mode == "complete" && i >= k) throw ParameterError("complete-mode keys must satisfy i < j");
    if (ineq.coefficients().count({i, k}))
      throw ParameterError("duplicate coefficient key");
    ineq.set(i, k, c.at("value").get<double>());
  }
}

inline void to_json(json& j, const CutInequality& cut) {
  json coeffs = json::array();
  for (const auto& [key, value] : cut.coefficients)
    coeffs.push_back({{"i", key.first}, {"j", key.second}, {"value", value}});
  j = json{{"form", "cut"}, {"n", cut.n}, {"coefficients", std::move(coeffs)}, {"rhs", cut.rhs}};
}

// --- edge set: {"n", "edges": [[i, j], ...]}

inline void to_json(json& j, const EdgeSet& edges) {
  json list = json::array();
  for (const auto& [a, b] : edges) list.push_back({a, b});
  j = json{{"n", edges.n()}, {"edges", std::move(list)}};
}

inline void from_json(const json& j, EdgeSet& edges) {
  edges = EdgeSet(j.at("n").get<std::size_t>());
  for (const auto& e : j.at("edges")) {
    const auto a = e.at(0).get<std::size_t>();
    const auto b = e.at(1).get<std::size_t>();
    if (edges.contains(a, b)) throw ParameterError("duplicate edge");
    edges.insert(a, b);
  }
}

// --- vector config: {"dim", "vectors": [[...], ...]}

inline void to_json(json& j, const UnitVectorConfig& config) {
  json list = json::array();
  for (const auto& v : config.vectors()) list.push_back(std::vector<double>(v.data(), v.data() + v.size()));
  j = json{{"dim", config.dim()}, {"vectors", std::move(list)}};
}

inline void from_json(const json& j, UnitVectorConfig& config) {
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<Eigen::VectorXd> vectors;
  for (const auto& row : j.at("vectors")) {
    const auto values = row.get<std::vector<double>>();
    vectors.push_back(Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size())));
  }
  config = UnitVectorConfig(dim, std::move(vectors));
}

// --- results

inline void to_json(json& j, const SignAssignment& a) {
  j = json::array();
  for (auto v : a.values()) j.push_back(static_cast<int>(v));
}

inline void to_json(json& j, const ClassicalBoundResult& r) {
  j = json{{"max_value", r.max_value}, {"argmax", r.argmax}, {"evaluations", r.evaluations}};
  if (r.exact_twice_max) j["exact_twice_max"] = *r.exact_twice_max;
}

inline void to_json(json& j, const ViolationReport& r) {
  j = json{{"quantum_value", r.quantum_value},
           {"raw_value", r.raw_value},
           {"classical_bound_normalized", r.classical_bound_normalized},
           {"violated", r.violated}};
}

inline void to_json(json& j, const AlonTheoremReport& r) {
  j = json{{"p", r.spec.p},
           {"q", r.spec.q},
           {"r", r.spec.r},
           {"subsets_checked", r.subsets_checked},
           {"small_equalities", r.small_equalities},
           {"large_equalities", r.large_equalities},
           {"violations", r.violations},
           {"violating_subsets", r.violating_subsets}};
}

inline void to_json(json& j, const MembershipCertificate& c) {
  j = json{{"inside", c.inside},
           {"distance", c.distance},
           {"witness_point", c.witness_point},
           {"iterations", c.iterations},
           {"separating", nullptr}};
  if (c.separating) j["separating"] = json{{"normal", c.separating->normal}, {"offset", c.separating->offset}};
}

inline void to_json(json& j, const FacetReport& r) {
  j = json{{"valid", r.valid},
           {"tight_count", r.tight_count},
           {"affine_rank", r.affine_rank},
           {"is_facet", r.is_facet},
           {"exact_arithmetic", r.exact_arithmetic},
           {"max_excess", r.max_excess}};
}

inline void to_json(json& j, const RealizationReport& r) {
  j = json{{"dimension", r.dimension},
           {"hermiticity", r.hermiticity},
           {"square_identity", r.square_identity},
           {"trace", r.trace},
           {"marginals", r.marginals},
           {"correlation", r.correlation},
           {"anticommutator", r.anticommutator},
           {"state_norm", r.state_norm},
           {"max_deviation", r.max_deviation()},
           {"passed", r.passed()}};
}

/// Matrix as rows of [re, im] pairs.
inline json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void to_json(json& j, const OperatorRealization& real) {
  json a = json::array(), b = json::array();
  for (const auto& m : real.a_ops) a.push_back(matrix_to_json(m));
  for (const auto& m : real.b_ops) b.push_back(matrix_to_json(m));
  json state = json::array();
  for (Eigen::Index k = 0; k < real.state.size(); ++k) state.push_back({real.state(k).real(), real.state(k).imag()});
  j = json{{"n", real.n}, {"d", real.d}, {"a_ops", std::move(a)}, {"b_ops", std::move(b)}, {"state", std::move(state)}};
}

inline void to_json(json& j, const NoiseQuantity& nq) {
  j = json{{"value", nq.value}, {"argmin_partition", nq.argmin_partition}, {"total_weight", nq.total_weight}};
}

inline void to_json(json& j, const ThresholdReport& r) {
  j = json{{"eta_threshold", r.eta_threshold},
           {"source", to_string(r.source)},
           {"violation_possible", r.violation_possible},
           {"quantum_value", r.quantum_value},
           {"noise", r.noise}};
}

inline void to_json(json& j, const ThetaScanResult& r) {
  j = json{{"best_theta", r.best_theta}, {"best_theta_over_pi", r.best_theta / M_PI}, {"best_value", r.best_value}};
  if (r.violation_interval)
    j["violation_interval"] = {r.violation_interval->first, r.violation_interval->second};
  else
    j["violation_interval"] = nullptr;
  json grid = json::array();
  for (const auto& [t, v] : r.grid) grid.push_back({t, v});
  j["grid"] = std::move(grid);
}

inline void to_json(json& j, const GramAscentResult& r) {
  j = json{{"objective", r.objective},      {"classical", r.classical}, {"ratio", r.ratio},
           {"restarts_used", r.restarts_used}, {"converged", r.converged}, {"monotone", r.monotone},
           {"config", r.config}};
}

// --- helpers

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParameterError("invalid JSON in " + path + ": " + e.what());
  }
}

/// Rounds every floating value in place to the given number of significant digits.
inline void round_floats(json& j, int digits = 12) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (std::isfinite(v)) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.*g", digits, v);
      j = std::strtod(buf, nullptr);
    }
  } else if (j.is_structured()) {
    for (auto& child : j) round_floats(child, digits);
  }
}

/**
 * Resolves an inequality argument: a built-in name ("chsh", "triangle",
 * "cliqueweb:p,q,r") or a path to an inequality JSON file.
 */
inline PairwiseInequality load_inequality(const std::string& arg) {
  if (arg == "chsh") return chsh();
  if (arg == "triangle") return triangle();
  if (arg.rfind("cliqueweb:", 0) == 0) {
    WebSpec spec;
    char tail = 0;
    if (std::sscanf(arg.c_str() + 10, "%zu,%zu,%zu%c", &spec.p, &spec.q, &spec.r, &tail) != 3)
      throw ParameterError("expected cliqueweb:p,q,r");
    return clique_web_inequality(spec);
  }
  try {
    return read_json_file(arg).get<PairwiseInequality>();
  } catch (const json::exception& e) {
    throw ParameterError("malformed inequality file " + arg + ": " + e.what());
  }
}

inline UnitVectorConfig load_vectors(const std::string& path) {
  try {
    return read_json_file(path).get<UnitVectorConfig>();
  } catch (const json::exception& e) {
    throw ParameterError("malformed vector file " + path + ": " + e.what());
  }
}

/// A point file is either a bare JSON array or {"point": [...]}.
inline std::vector<double> load_point(const std::string& path) {
  const json j = read_json_file(path);
  try {
    return j.is_array() ? j.get<std::vector<double>>() : j.at("point").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw ParameterError("malformed point file " + path + ": " + e.what());
  }
}

}  // namespace bellbound
