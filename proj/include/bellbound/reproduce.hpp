#pragma once

// Regenerates every numeric claim the library is built around as a table of
// expected vs computed values.

#include <bellbound/inequality.hpp>
#include <bellbound/noise.hpp>
#include <bellbound/optimizer.hpp>
#include <bellbound/polytopes.hpp>
#include <bellbound/quantum.hpp>
#include <bellbound/tsirelson.hpp>
#include <bellbound/vectors.hpp>
#include <bellbound/webs.hpp>

#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <vector>

namespace bellbound {

enum class SourceTag { paper, derived, trivial };

inline std::string to_string(SourceTag tag) {
  switch (tag) {
    case SourceTag::paper: return "PAPER";
    case SourceTag::derived: return "DERIVED";
    case SourceTag::trivial: return "TRIVIAL";
  }
  return {};
}

struct ReproductionRow {
  std::string claim_id;
  std::string description;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;  // 0 means exact
  bool pass = false;
  SourceTag source_tag = SourceTag::paper;
  std::string error;  // set when the computation itself failed
};

/// The CHSH measurement directions x1, x2, y1, y2 used for the sqrt 2 violation.
inline UnitVectorConfig chsh_vectors() {
  const double h = std::sqrt(2.0) / 2.0;
  return UnitVectorConfig(3, {{-h, h, 0.0}, {h, h, 0.0}, {0.0, -1.0, 0.0}, {1.0, 0.0, 0.0}});
}

/// CHSH placed on K_4 with partner directions reversed, so the transported sum is sqrt 2.
inline PairwiseInequality chsh_on_k4() { return as_complete(chsh()); }

inline UnitVectorConfig chsh_vectors_transported() {
  return chsh_vectors().with_negated(2).with_negated(3);
}

namespace detail {

inline double flag(bool b) { return b ? 1.0 : 0.0; }

}  // namespace detail

inline std::vector<ReproductionRow> reproduce_paper(std::uint64_t seed = 0) {
  std::vector<ReproductionRow> rows;
  auto add = [&](std::string id, std::string description, SourceTag tag, double expected, double tolerance,
                 const std::function<double()>& compute) {
    ReproductionRow row{std::move(id), std::move(description), expected, 0.0, tolerance, false, tag, {}};
    try {
      row.computed = compute();
      row.pass = tolerance == 0.0 ? row.computed == expected : std::abs(row.computed - expected) <= tolerance;
    } catch (const std::exception& e) {
      row.computed = std::nan("");
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  };
  const double sqrt2 = std::sqrt(2.0);

  // Two-party and one-party inequalities with the singlet.
  add("chsh-classical", "classical bound of CHSH by enumeration", SourceTag::paper, 1.0, 0.0,
      [] { return classical_bound(chsh()).max_value; });
  add("chsh-sqrt2", "CHSH quantum value with the four reference directions", SourceTag::paper, sqrt2, 1e-9,
      [] { return quantum_value(chsh(), chsh_vectors(), false).quantum_value; });
  add("singlet-same-direction", "singlet correlation for x = y", SourceTag::paper, -1.0, 1e-15, [] {
    const Eigen::Vector3d x(0.6, 0.0, 0.8);
    return singlet_correlation(x, x);
  });
  add("singlet-eq5-pair", "-x1.y1 for the CHSH directions", SourceTag::paper, sqrt2 / 2.0, 1e-15, [] {
    const auto v = chsh_vectors();
    return singlet_correlation(v[0], v[2]);
  });
  add("triangle-classical", "classical bound of the triangle inequality", SourceTag::paper, 1.0, 0.0,
      [] { return classical_bound(triangle()).max_value; });
  add("triangle-3-2", "triangle value with coplanar directions 120 degrees apart", SourceTag::paper, 1.5, 1e-12,
      [] { return quantum_value(triangle(), planar_star(3)).quantum_value; });
  add("triangle-beyond-kg2", "3/2 exceeds K_G(2) = sqrt 2", SourceTag::paper, 1.0, 0.0, [&] {
    return detail::flag(quantum_value(triangle(), planar_star(3)).quantum_value > GrothendieckBounds::kg2);
  });

  // Webs and clique-web bounds.
  add("web-12-3-4-edges", "|W_12^4| = 18", SourceTag::paper, 18.0, 0.0,
      [] { return static_cast<double>(web_edges({12, 3, 4}).size()); });
  add("web-8-3-2-edges", "|W_8^2| = 12", SourceTag::paper, 12.0, 0.0,
      [] { return static_cast<double>(web_edges({8, 3, 2}).size()); });
  for (const WebSpec spec : {WebSpec{5, 2, 1}, WebSpec{7, 2, 2}, WebSpec{12, 3, 4}}) {
    const std::string tag = std::to_string(spec.p) + "-" + std::to_string(spec.q) + "-" + std::to_string(spec.r);
    add("cliqueweb-bound-" + tag, "classical bound of the clique-web inequality equals q(r+1)", SourceTag::paper,
        static_cast<double>(spec.q * (spec.r + 1)), 0.0,
        [spec] { return classical_bound(clique_web_inequality(spec)).max_value; });
  }
  add("cliqueweb-cut-form", "+-1 clique-web inequality maps to the 0/1 cut form at (5,2,1)", SourceTag::paper, 1.0,
      0.0, [&] {
        const WebSpec spec{5, 2, 1};
        const auto converted = to_cut_form(clique_web_inequality(spec));
        const auto direct = clique_web_cut_inequality(spec);
        bool same = converted.n == direct.n && converted.rhs == 2.0 * direct.rhs;
        for (std::uint32_t mask = 0; same && mask < (1U << direct.n); ++mask) {
          std::vector<std::uint8_t> bits(direct.n);
          for (std::size_t k = 0; k < direct.n; ++k) bits[k] = (mask >> k) & 1U;
          const bool a = evaluate_cut(converted, bits) <= converted.rhs;
          const bool b = evaluate_cut(direct, bits) <= direct.rhs;
          same = a == b;
        }
        return detail::flag(same);
      });
  add("alon-theorem", "antiweb cut sizes: violations over all p <= 12, r <= 3", SourceTag::paper, 0.0, 0.0, [] {
    double violations = 0.0;
    for (std::size_t r = 1; r <= 3; ++r)
      for (std::size_t p = 2 * r + 3; p <= 12; ++p)
        violations += static_cast<double>(verify_alon_theorem(WebSpec::from_pr(p, r)).violations);
    return violations;
  });

  // Bouquets.
  add("bouquet12-opposite", "x_i.x_{i+6} = cos 2t on the 12-bouquet (t = 0.3)", SourceTag::paper, std::cos(0.6),
      1e-12, [] {
        const auto b = bouquet(12, 3, 0.3);
        return b[0].dot(b[6]);
      });
  add("bouquet12-offset5", "x_i.x_{i+5} = 1 - 2cos^2(pi/12)sin^2 t (t = 0.3)", SourceTag::paper,
      1.0 - 2.0 * std::pow(std::cos(M_PI / 12.0) * std::sin(0.3), 2), 1e-12, [] {
        const auto b = bouquet(12, 3, 0.3);
        return b[1].dot(b[6]);
      });
  add("bouquet11-offsetk", "x_i.x_{i+k} = 1 - 2cos^2(pi/(4k+2))sin^2 t (k = 5, t = 0.3)", SourceTag::paper,
      1.0 - 2.0 * std::pow(std::cos(M_PI / 22.0) * std::sin(0.3), 2), 1e-12, [] {
        const auto b = bouquet(11, 2, 0.3);
        return b[0].dot(b[5]);
      });
  add("v12-0.32477pi", "V_12^4(0.32477 pi)", SourceTag::paper, 1.5209, 5e-4,
      [] { return v12_formula(0.32477 * M_PI); });
  add("v12-construction", "clique-web(12,3,4) on the 12-bouquet at 0.32477 pi", SourceTag::paper, 1.5209, 5e-4, [] {
    return quantum_value(clique_web_inequality({12, 3, 4}), bouquet(12, 3, 0.32477 * M_PI)).quantum_value;
  });
  add("v12-scan-max", "theta-scan maximum of V_12^4", SourceTag::paper, 1.5209, 5e-4,
      [] { return scan_theta(BouquetFamily::twelve(), 200).best_value; });
  add("v12-beyond-kg3", "max V_12^4 exceeds the K_G(3) upper bound 1.5163", SourceTag::paper, 1.0, 0.0, [&] {
    return detail::flag(scan_theta(BouquetFamily::twelve(), 200).best_value > GrothendieckBounds::kg3_upper);
  });
  add("v11-0.3303pi", "V_11^4(0.3303 pi)", SourceTag::paper, 1.5168, 5e-4,
      [] { return v2k1_formula(5, 0.3303 * M_PI); });
  add("v11-scan-max", "theta-scan maximum of V_11^4", SourceTag::paper, 1.5168, 5e-4,
      [] { return scan_theta(BouquetFamily::odd(5), 200).best_value; });
  add("v11-beyond-kg3", "V_11^4(0.3303 pi) exceeds 1.5163", SourceTag::paper, 1.0, 0.0,
      [&] { return detail::flag(v2k1_formula(5, 0.3303 * M_PI) > GrothendieckBounds::kg3_upper); });
  add("bouquet-limit", "2cos t - cos 2t at t = pi/3", SourceTag::paper, 1.5, 1e-12,
      [] { return v2k1_limit(M_PI / 3.0); });
  add("bouquet-k1000-max", "scan maximum of V_{2k+1}^{k-1} at k = 1000", SourceTag::paper, 1.5, 2e-3,
      [] { return scan_theta(BouquetFamily::odd(1000), 200).best_value; });
  add("bouquet-k1000-theta", "argmax theta at k = 1000 (target pi/3)", SourceTag::paper, M_PI / 3.0, 2e-3,
      [] { return scan_theta(BouquetFamily::odd(1000), 200).best_theta; });

  // Operator realizations and vector optimization.
  add("tsirelson-self-correlation", "tr[W(A_1 (x) B_1)] = 1 for a single direction", SourceTag::paper, 1.0, 1e-12,
      [seed] {
        Rng rng(seed, 7);
        const auto config = rng.unit_config(1, 5);
        const auto real = realize(config);
        return detail::expectation(
                   Eigen::Map<const ComplexMatrix>(real.state.data(), static_cast<Eigen::Index>(real.d),
                                                   static_cast<Eigen::Index>(real.d))
                       .transpose(),
                   real.a_ops[0], real.b_ops[0])
            .real();
      });
  add("tsirelson-verify", "max deviation of a random realization (n = 6) below 1e-10", SourceTag::paper, 1.0, 0.0,
      [seed] {
        Rng rng(seed, 8);
        const auto config = rng.unit_config(6, 6);
        return detail::flag(verify_realization(realize(config), config).passed(1e-10));
      });
  add("gram-triangle", "coordinate ascent on the triangle in the plane", SourceTag::paper, 1.5, 1e-8, [seed] {
    GramAscentOptions opt;
    opt.dim = 2;
    opt.seed = seed;
    return gram_ascent(triangle(), opt).ratio;
  });
  add("gram-chsh", "coordinate ascent on CHSH placed on K_4, in the plane", SourceTag::paper, sqrt2, 1e-8, [seed] {
    GramAscentOptions opt;
    opt.dim = 2;
    opt.seed = seed;
    return gram_ascent(chsh_on_k4(), opt).ratio;
  });

  // Polytopes.
  add("bell22-outside", "CHSH correlation point lies outside BELL(2,2) with a verified separator", SourceTag::paper,
      1.0, 0.0, [&] {
        const double h = sqrt2 / 2.0;
        const std::vector<double> point{h, h, h, -h};
        const auto cert = membership(PolytopeSpec::bell(2, 2), point);
        return detail::flag(!cert.inside && cert.separating.has_value());
      });
  add("bell3-outside", "(-1/2,-1/2,-1/2) lies outside BELL(3) with a verified separator", SourceTag::paper, 1.0, 0.0,
      [&] {
        const std::vector<double> point{-0.5, -0.5, -0.5};
        const auto cert = membership(PolytopeSpec::bell(3), point);
        return detail::flag(!cert.inside && cert.separating.has_value());
      });
  add("chsh-facet", "CHSH is a facet of BELL(2,2)", SourceTag::paper, 1.0, 0.0, [&] {
    const auto c = bell_coordinates(chsh());
    return detail::flag(facet_check(PolytopeSpec::bell(2, 2), c, chsh().rhs()).is_facet);
  });
  add("triangle-facet", "the triangle inequality is a facet of BELL(3)", SourceTag::paper, 1.0, 0.0, [&] {
    const auto c = bell_coordinates(triangle());
    return detail::flag(facet_check(PolytopeSpec::bell(3), c, triangle().rhs()).is_facet);
  });

  // Werner states.
  add("werner-same-direction", "Werner correlation for x = y at eta = 0.8", SourceTag::paper, -0.8, 1e-15, [] {
    const Eigen::Vector3d x(0.0, 0.0, 1.0);
    return werner_correlation(0.8, x, x);
  });
  add("symmetry-band-pure", "band width at eta = 1 (perfect transport)", SourceTag::paper, 0.0, 1e-15, [] {
    const auto band = symmetry_band(1.0, -0.3);
    return band.hi - band.lo;
  });
  add("werner-0.8", "triangle noise threshold", SourceTag::paper, 0.8, 1e-12,
      [] { return triangle_threshold().eta_threshold; });
  add("werner-cliqueweb-k500", "clique-web threshold along the (2k+1)-bouquet at k = 500", SourceTag::paper, 0.8,
      1e-3, [] {
        const std::size_t k = 500;
        const double v = scan_theta(BouquetFamily::odd(k), 200).best_value;
        return cliqueweb_threshold(WebSpec{2 * k + 1, 2, k - 1}, v).eta_threshold;
      });
  add("noise-bipartite-zero", "N{b} = 0 for bipartite-supported coefficients", SourceTag::paper, 0.0, 0.0,
      [] { return noise_quantity(chsh_on_k4()).value; });
  add("werner-chsh", "partitioned threshold of CHSH on K_4", SourceTag::paper, 1.0 / sqrt2, 1e-9,
      [] { return partitioned_threshold(chsh_on_k4(), chsh_vectors_transported()).eta_threshold; });
  add("noisy-triangle-0.9", "V(0.9) for the triangle at 120 degrees", SourceTag::derived, 1.25, 1e-12,
      [] { return noisy_violation(triangle(), planar_star(3), 0.9); });
  add("maxcut-triangle", "N{b} for unit weights on K_3", SourceTag::derived, 1.0, 0.0,
      [] { return noise_quantity(triangle()).value; });
  add("werner-cliqueweb-12", "clique-web threshold for (12,3,4) at V = 1.5209", SourceTag::derived,
      12.0 / (5.0 * 1.5209 + 7.0), 1e-12, [] { return cliqueweb_threshold({12, 3, 4}, 1.5209).eta_threshold; });

  return rows;
}

inline bool all_pass(const std::vector<ReproductionRow>& rows) {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

}  // namespace bellbound
