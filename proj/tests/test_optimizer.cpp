#include <bellbound/optimizer.hpp>
#include <bellbound/reproduce.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace bellbound;

TEST(GoldenSection, FindsInteriorMaximum) {
  const double t = golden_section_maximize([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0, 1e-12);
  EXPECT_NEAR(t, 0.3, 1e-6);
  EXPECT_NEAR(golden_section_maximize([](double x) { return std::sin(x); }, 0.0, 3.0), M_PI / 2, 1e-6);
}

TEST(ScanTheta, TwelveBouquetMaximum) {
  const auto r = scan_theta(BouquetFamily::twelve(), 200);
  EXPECT_EQ(r.grid.size(), 200U);
  EXPECT_GE(r.best_value, 1.5209 - 5e-4);
  EXPECT_NEAR(r.best_value, 1.5209, 5e-4);
  EXPECT_NEAR(r.best_theta / M_PI, 0.32477, 1e-3);
  EXPECT_GT(r.best_value, GrothendieckBounds::kg3_upper);
  for (const auto& [theta, v] : r.grid) EXPECT_LE(v, r.best_value + 1e-15);
  ASSERT_TRUE(r.violation_interval.has_value());
  const auto [lo, hi] = *r.violation_interval;
  EXPECT_LT(lo, r.best_theta);
  EXPECT_GT(hi, r.best_theta);
  EXPECT_NEAR(v12_formula(lo), 1.0, 1e-9);
  EXPECT_NEAR(v12_formula(hi), 1.0, 1e-9);
}

TEST(ScanTheta, OddBouquetsApproachThreeHalvesAtPiOverThree) {
  const auto r11 = scan_theta(BouquetFamily::odd(5), 200);
  EXPECT_NEAR(r11.best_value, 1.5168, 5e-4);
  const auto r = scan_theta(BouquetFamily::odd(1000), 200);
  EXPECT_NEAR(r.best_value, 1.5, 2e-3);
  EXPECT_NEAR(r.best_theta, M_PI / 3, 2e-3);
  const auto limit = golden_section_maximize(v2k1_limit, 0.0, M_PI / 2);
  EXPECT_NEAR(limit, M_PI / 3, 1e-6);
}

TEST(ScanTheta, ArgumentChecks) {
  EXPECT_THROW(scan_theta(BouquetFamily::twelve(), 5), ParameterError);
  EXPECT_THROW(BouquetFamily::odd(0), ParameterError);
  EXPECT_EQ(BouquetFamily::twelve().name(), "b12");
}

TEST(ScanTheta, SmallestOddBouquetPeaksAtFiveQuarters) {
  // k = 1: V(theta) = (-4.5 cos^2 + 6 cos + 0.5) / 2, maximal at cos theta = 2/3.
  const auto r = scan_theta(BouquetFamily::odd(1), 100);
  EXPECT_NEAR(r.best_value, 1.25, 1e-9);
  EXPECT_NEAR(std::cos(r.best_theta), 2.0 / 3.0, 1e-5);
  ASSERT_TRUE(r.violation_interval.has_value());
  EXPECT_LT(r.violation_interval->first, r.best_theta);
  EXPECT_GT(r.violation_interval->second, r.best_theta);
}

TEST(GramAscent, TriangleReachesThreeHalves) {
  GramAscentOptions opt;
  opt.dim = 2;
  const auto r = gram_ascent(triangle(), opt);
  EXPECT_NEAR(r.ratio, 1.5, 1e-8);
  EXPECT_TRUE(r.converged);
  EXPECT_TRUE(r.monotone);
  EXPECT_EQ(r.classical, 1.0);
}

TEST(GramAscent, ChshReachesSqrtTwo) {
  GramAscentOptions opt;
  opt.dim = 2;
  const auto r = gram_ascent(chsh_on_k4(), opt);
  EXPECT_NEAR(r.ratio, std::sqrt(2.0), 1e-8);
  const auto rb = gram_ascent(chsh(), opt);
  EXPECT_NEAR(rb.ratio, std::sqrt(2.0), 1e-8);
}

TEST(GramAscent, EveryStepIsMonotone) {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_sign_coefficients(6, rng);
    GramAscentOptions opt;
    opt.dim = 3;
    opt.restarts = 4;
    opt.seed = static_cast<std::uint64_t>(trial);
    std::vector<double> last(opt.restarts, -1e300);
    bool ok = true;
    std::size_t steps = 0;
    opt.on_step = [&](std::size_t restart, double value) {
      if (value < last[restart] - 1e-12) ok = false;
      last[restart] = value;
      ++steps;
    };
    const auto r = gram_ascent(a, opt);
    EXPECT_TRUE(ok);
    EXPECT_TRUE(r.monotone);
    EXPECT_GT(steps, 0U);
  }
}

TEST(GramAscent, DeterministicAcrossWorkerCounts) {
  const auto a = clique_web_inequality({7, 2, 2});
  GramAscentOptions opt;
  opt.dim = 3;
  opt.restarts = 12;
  opt.seed = 123;
  const auto serial = gram_ascent(a, opt);
  opt.workers = 4;
  const auto parallel = gram_ascent(a, opt);
  EXPECT_EQ(serial.objective, parallel.objective);
  EXPECT_EQ(serial.config.vectors(), parallel.config.vectors());
}

TEST(GramAscent, VectorValueNeverBelowClassical) {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_sign_coefficients(5, rng);
    GramAscentOptions opt;
    opt.dim = 5;
    opt.restarts = 8;
    opt.seed = static_cast<std::uint64_t>(trial);
    EXPECT_GE(gram_ascent(a, opt).ratio, 1.0 - 1e-9);
  }
}

TEST(GramAscent, ArgumentChecks) {
  GramAscentOptions opt;
  opt.dim = 4;
  EXPECT_THROW(gram_ascent(triangle(), opt), ParameterError);
  opt.dim = 0;
  EXPECT_THROW(gram_ascent(triangle(), opt), ParameterError);
  opt.dim = 2;
  opt.restarts = 0;
  EXPECT_THROW(gram_ascent(triangle(), opt), ParameterError);
}

TEST(RatioProbe, ExhaustiveThreeFindsTheTriangle) {
  const auto s = ratio_probe_exhaustive(3, 0);
  EXPECT_EQ(s.instances, 8U);
  EXPECT_NEAR(s.max_ratio, 1.5, 1e-8);
  EXPECT_TRUE(s.lhv_violation_found);
  EXPECT_TRUE(s.exceeds_kg2);
  EXPECT_FALSE(s.exceeds_kg3_upper);
  EXPECT_THROW(ratio_probe_exhaustive(7, 0), ResourceLimitError);
}

TEST(RatioProbe, SeededRunsAreReproducible) {
  const auto a = ratio_probe(5, 20, 42);
  const auto b = ratio_probe(5, 20, 42);
  EXPECT_EQ(a.ratios, b.ratios);
  EXPECT_EQ(a.max_ratio, b.max_ratio);
  const auto c = ratio_probe(5, 20, 43);
  EXPECT_NE(a.ratios, c.ratios);
}

TEST(RatioProbe, PlanarBipartiteNeverExceedsSqrtTwo) {
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = PairwiseInequality::bipartite(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a.set(i, j, rng.gaussian());
    GramAscentOptions opt;
    opt.dim = 2;
    opt.restarts = 8;
    opt.seed = static_cast<std::uint64_t>(trial);
    EXPECT_LE(gram_ascent(a, opt).ratio, std::sqrt(2.0) + 1e-9);
  }
}

TEST(Grothendieck, ConstantsAreOrdered) {
  EXPECT_DOUBLE_EQ(GrothendieckBounds::kg2, std::sqrt(2.0));
  EXPECT_LT(GrothendieckBounds::kg3_lower, GrothendieckBounds::kg3_upper);
  EXPECT_LT(GrothendieckBounds::kg3_upper, GrothendieckBounds::kg_lower);
  EXPECT_NEAR(GrothendieckBounds::kg_upper, M_PI / (2.0 * std::log(1.0 + std::sqrt(2.0))), 1e-4);
}
