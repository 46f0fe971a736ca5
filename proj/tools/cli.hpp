#pragma once

// The bellbound command line. run() is kept separate from main() so the tests
// can drive it with captured streams.

#include <bellbound/bellbound.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bellbound::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2 };

inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string cell(const json& j) {
  if (j.is_number_float()) return format_number(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

/// Rows for csv/table output; when absent the JSON object is flattened to key/value pairs.
struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  Output(json d, std::optional<Table> t = std::nullopt, int code = ok)
      : data(std::move(d)), table(std::move(t)), exit_code(code) {}

  json data;
  std::optional<Table> table;
  int exit_code;
};

inline Table key_value_table(const json& data) {
  Table t{{"key", "value"}, {}};
  if (data.is_object()) {
    for (const auto& [key, value] : data.items()) t.rows.push_back({key, cell(value)});
  } else {
    t.rows.push_back({"value", cell(data)});
  }
  return t;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void render(const Output& output, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json data = output.data;
    round_floats(data);
    out << data.dump(2) << '\n';
    return;
  }
  const Table t = output.table ? *output.table : key_value_table(output.data);
  if (format == "csv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << csv_escape(cells[k]);
      out << '\n';
    };
    line(t.headers);
    for (const auto& row : t.rows) line(row);
    return;
  }
  std::vector<std::size_t> width(t.headers.size());
  for (std::size_t k = 0; k < t.headers.size(); ++k) width[k] = t.headers[k].size();
  for (const auto& row : t.rows)
    for (std::size_t k = 0; k < row.size() && k < width.size(); ++k) width[k] = std::max(width[k], row[k].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      out << (k ? "  " : "");
      if (k + 1 < cells.size())
        out << std::left << std::setw(static_cast<int>(width[k])) << cells[k];
      else
        out << cells[k];
    }
    out << '\n';
  };
  line(t.headers);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : t.rows) line(row);
}

struct GlobalOptions {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t guard = EnumerationOptions{}.guard;
  unsigned workers = 1;

  EnumerationOptions enumeration() const { return {guard, workers}; }
};

/// BELLBOUND_GUARD takes precedence over --guard.
inline void apply_guard_env(GlobalOptions& g) {
  const char* env = std::getenv("BELLBOUND_GUARD");
  if (!env || !*env) return;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0) throw CLI::ValidationError("BELLBOUND_GUARD", "must be a positive integer");
  g.guard = static_cast<std::size_t>(v);
}

/// A bipartite inequality viewed on K_{n+m}, with the right party's directions reversed.
inline std::pair<PairwiseInequality, UnitVectorConfig> transported(const PairwiseInequality& ineq,
                                                                   const UnitVectorConfig& config) {
  if (ineq.mode() == Mode::complete) return {ineq, config};
  if (config.size() != ineq.variable_count())
    throw DimensionError("vector count does not match the inequality");
  UnitVectorConfig flipped = config;
  for (std::size_t k = ineq.n_left(); k < config.size(); ++k) flipped = flipped.with_negated(k);
  return {as_complete(ineq), flipped};
}

inline std::string json_error_type(const std::exception& e) {
  if (dynamic_cast<const DimensionError*>(&e)) return "DimensionError";
  if (dynamic_cast<const ParameterError*>(&e)) return "ParameterError";
  if (dynamic_cast<const ResourceLimitError*>(&e)) return "ResourceLimitError";
  if (dynamic_cast<const ConvergenceError*>(&e)) return "ConvergenceError";
  return "Error";
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bell-inequality bounds, quantum violations and noise thresholds", "bellbound"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--guard", g.guard, "Largest variable count for exhaustive enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", g.workers, "Threads for enumeration and restarts")->check(CLI::Range(1U, 256U));

  std::function<Output()> action;

  // web / cliqueweb
  WebSpec web_spec;
  bool antiweb = false, cut_form = false;
  auto add_pqr = [&](CLI::App* sub) {
    sub->add_option("--p", web_spec.p)->required();
    sub->add_option("--q", web_spec.q)->required();
    sub->add_option("--r", web_spec.r)->required();
  };
  auto* web = app.add_subcommand("web", "Edge set of the web W_p^r (or its complement)");
  add_pqr(web);
  web->add_flag("--antiweb", antiweb);
  web->callback([&] {
    action = [&] {
      web_spec.validate();
      const auto edges = antiweb ? antiweb_edges(web_spec) : web_edges(web_spec);
      return Output{json(edges)};
    };
  });

  auto* cw = app.add_subcommand("cliqueweb", "Clique-web inequality JSON");
  add_pqr(cw);
  cw->add_flag("--cut-form", cut_form, "Emit the 0/1 cut form instead");
  cw->callback([&] {
    action = [&] {
      return cut_form ? Output{json(clique_web_cut_inequality(web_spec))}
                      : Output{json(clique_web_inequality(web_spec))};
    };
  });

  // bouquet
  std::size_t bq_p = 0, bq_q = 0;
  std::optional<double> theta, theta_pi;
  double phase = 0.0;
  auto* bq = app.add_subcommand("bouquet", "Bouquet unit-vector configuration");
  bq->add_option("--p", bq_p)->required();
  bq->add_option("--q", bq_q)->required();
  auto* theta_opt = bq->add_option("--theta", theta, "Polar angle in radians");
  auto* theta_pi_opt = bq->add_option("--theta-pi", theta_pi, "Polar angle as a multiple of pi");
  theta_opt->excludes(theta_pi_opt);
  bq->add_option("--phase", phase, "Ring rotation in radians");
  bq->callback([&] {
    if (!theta && !theta_pi) throw CLI::RequiredError("--theta or --theta-pi");
    action = [&] {
      const double t = theta ? *theta : *theta_pi * M_PI;
      return Output{json(bouquet(bq_p, bq_q, t, phase))};
    };
  });

  // qvalue
  std::string ineq_arg, vectors_path, point_path, polytope_name;
  bool force_transported = false;
  auto* qv = app.add_subcommand("qvalue", "Normalized quantum value of an inequality");
  qv->add_option("--ineq", ineq_arg)->required();
  qv->add_option("--vectors", vectors_path)->required();
  qv->add_flag("--transported", force_transported, "Use x_i.x_j correlations for every pair");
  qv->callback([&] {
    action = [&] {
      const auto ineq = load_inequality(ineq_arg);
      const auto config = load_vectors(vectors_path);
      const auto report = force_transported ? quantum_value(ineq, config, true) : quantum_value(ineq, config);
      return Output{json(report)};
    };
  });

  // classical-bound
  auto* cb = app.add_subcommand("classical-bound", "Exact classical bound by enumeration");
  cb->add_option("--ineq", ineq_arg)->required();
  cb->callback([&] {
    action = [&] {
      const auto ineq = load_inequality(ineq_arg);
      json j = classical_bound(ineq, g.enumeration());
      j["rhs"] = ineq.rhs();
      j["satisfied"] = j["max_value"].get<double>() <= ineq.rhs() + 1e-12;
      return Output{j};
    };
  });

  // member
  std::size_t max_iter = detail::HullProjectionOptions{}.max_iterations;
  auto* mb = app.add_subcommand("member", "Polytope membership with a certificate");
  mb->add_option("--polytope", polytope_name, "bell<n>, bell<n><m>, bell<n>x<m>, cut<n> or cor<n>")->required();
  mb->add_option("--point", point_path)->required();
  mb->add_option("--max-iter", max_iter)->check(CLI::PositiveNumber);
  mb->callback([&] {
    action = [&] {
      const auto spec = parse_polytope(polytope_name);
      const auto point = load_point(point_path);
      json j = membership(spec, point, max_iter);
      j["polytope"] = spec.name();
      return Output{j};
    };
  });

  // facet-check
  auto* fc = app.add_subcommand("facet-check", "Validity and facet test in correlation coordinates");
  fc->add_option("--ineq", ineq_arg)->required();
  fc->callback([&] {
    action = [&] {
      const auto ineq = load_inequality(ineq_arg);
      const auto spec = bell_polytope_of(ineq);
      json j = facet_check(spec, bell_coordinates(ineq), ineq.rhs());
      j["polytope"] = spec.name();
      return Output{j};
    };
  });

  // tsirelson
  bool dump_matrices = false;
  auto* ts = app.add_subcommand("tsirelson", "Explicit operator realization of a vector configuration");
  ts->add_option("--vectors", vectors_path)->required();
  ts->add_flag("--dump-matrices", dump_matrices, "Include the operators and the state");
  ts->callback([&] {
    action = [&] {
      const auto config = load_vectors(vectors_path);
      const auto real = realize(config);
      const auto report = verify_realization(real, config);
      json j = report;
      if (dump_matrices) j["realization"] = real;
      return Output{j, std::nullopt, report.passed() ? ok : failure};
    };
  });

  // werner
  std::optional<double> eta;
  std::size_t steps = 20;
  auto* wn = app.add_subcommand("werner", "Werner-state noise threshold and V(eta) table");
  wn->add_option("--ineq", ineq_arg)->required();
  wn->add_option("--vectors", vectors_path)->required();
  wn->add_option("--eta", eta)->check(CLI::Range(0.0, 1.0));
  wn->add_option("--steps", steps, "Rows in the eta table")->check(CLI::PositiveNumber);
  wn->callback([&] {
    action = [&] {
      const auto [raw, config] = transported(load_inequality(ineq_arg), load_vectors(vectors_path));
      const auto b = normalized_to_classical_bound(raw, g.enumeration());
      json j;
      j["threshold"] = partitioned_threshold(b, config, g.enumeration());
      std::vector<double> etas;
      if (eta)
        etas.push_back(*eta);
      else
        for (std::size_t k = 1; k <= steps; ++k) etas.push_back(static_cast<double>(k) / static_cast<double>(steps));
      Table t{{"eta", "violation"}, {}};
      json rows = json::array();
      for (double e : etas) {
        const double v = noisy_violation(b, config, e, g.enumeration());
        rows.push_back({{"eta", e}, {"violation", v}});
        t.rows.push_back({format_number(e), format_number(v)});
      }
      j["table"] = std::move(rows);
      return Output{j, t};
    };
  });

  // maxcut
  auto* mc = app.add_subcommand("maxcut", "Noise quantity N{b}: minimum same-side weight");
  mc->add_option("--ineq", ineq_arg)->required();
  mc->callback([&] {
    action = [&] { return Output{json(noise_quantity(as_complete(load_inequality(ineq_arg)), g.enumeration()))}; };
  });

  // scan-theta
  std::string family_name = "b12";
  std::size_t family_k = 5, points = 200;
  auto* st = app.add_subcommand("scan-theta", "Scan a bouquet family over theta");
  st->add_option("--family", family_name)->check(CLI::IsMember({"b12", "b2k1"}));
  st->add_option("--k", family_k, "k for the (2k+1)-bouquet")->check(CLI::PositiveNumber);
  st->add_option("--points", points)->check(CLI::Range(std::size_t{10}, std::size_t{1000000}));
  st->callback([&] {
    action = [&] {
      const auto family = family_name == "b12" ? BouquetFamily::twelve() : BouquetFamily::odd(family_k);
      const auto result = scan_theta(family, points);
      json j = result;
      j["family"] = family.name();
      Table t{{"theta", "value"}, {}};
      for (const auto& [th, v] : result.grid) t.rows.push_back({format_number(th), format_number(v)});
      return Output{j, t};
    };
  });

  // gram
  GramAscentOptions gram_opt;
  auto* gr = app.add_subcommand("gram", "Maximize sum a_ij x_i.x_j over unit vectors by coordinate ascent");
  gr->add_option("--ineq", ineq_arg)->required();
  gr->add_option("--dim", gram_opt.dim)->check(CLI::PositiveNumber);
  gr->add_option("--restarts", gram_opt.restarts)->check(CLI::PositiveNumber);
  gr->callback([&] {
    action = [&] {
      gram_opt.seed = g.seed;
      gram_opt.workers = g.workers;
      gram_opt.enumeration = g.enumeration();
      return Output{json(gram_ascent(load_inequality(ineq_arg), gram_opt))};
    };
  });

  // reproduce-paper
  auto* rp = app.add_subcommand("reproduce-paper", "Regenerate every reference value as a pass/fail table");
  rp->callback([&] {
    action = [&] {
      const auto rows = reproduce_paper(g.seed);
      Table t{{"claim", "source", "expected", "computed", "tolerance", "result", "description"}, {}};
      json list = json::array();
      for (const auto& r : rows) {
        json row{{"claim_id", r.claim_id},   {"description", r.description}, {"expected", r.expected},
                 {"computed", r.computed},   {"tolerance", r.tolerance},     {"pass", r.pass},
                 {"source_tag", to_string(r.source_tag)}};
        if (!r.error.empty()) row["error"] = r.error;
        list.push_back(std::move(row));
        t.rows.push_back({r.claim_id, to_string(r.source_tag), format_number(r.expected), format_number(r.computed),
                          format_number(r.tolerance), r.pass ? "PASS" : "FAIL",
                          r.error.empty() ? r.description : r.description + " [" + r.error + "]"});
      }
      const bool pass = all_pass(rows);
      return Output{json{{"rows", std::move(list)}, {"all_pass", pass}}, t, pass ? ok : failure};
    };
  });

  try {
    app.parse(argc, argv);
    apply_guard_env(g);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    const Output output = action();
    render(output, g.format, out);
    return output.exit_code;
  } catch (const std::exception& e) {
    json j{{"error", {{"type", json_error_type(e)}, {"message", e.what()}}}};
    if (const auto* ce = dynamic_cast<const ConvergenceError*>(&e)) j["error"]["best_so_far"] = ce->best_so_far();
    err << j.dump() << '\n';
    return failure;
  }
}

}  // namespace bellbound::cli
