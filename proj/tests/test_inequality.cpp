#include "oracles.hpp"

#include <bellbound/inequality.hpp>
#include <bellbound/random.hpp>
#include <bellbound/webs.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace bellbound;

namespace {

PairwiseInequality random_complete(std::size_t n, Rng& rng, bool half_integer) {
  auto ineq = PairwiseInequality::complete(n, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = half_integer ? 0.5 * static_cast<double>(static_cast<int>(rng.bits() % 9) - 4)
                                    : 2.0 * rng.uniform() - 1.0;
      if (v != 0.0) ineq.set(i, j, v);
    }
  return ineq;
}

PairwiseInequality random_bipartite(std::size_t nl, std::size_t nr, Rng& rng) {
  auto ineq = PairwiseInequality::bipartite(nl, nr, 1.0);
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nr; ++j) ineq.set(i, j, rng.gaussian());
  return ineq;
}

}  // namespace

TEST(ClassicalBound, ChshIsOneExactly) {
  const auto r = classical_bound(chsh());
  EXPECT_EQ(r.max_value, 1.0);
  ASSERT_TRUE(r.exact_twice_max.has_value());
  EXPECT_EQ(*r.exact_twice_max, 2);
  EXPECT_EQ(r.evaluations, 8U);
  EXPECT_EQ(evaluate(chsh(), r.argmax), 1.0);
}

TEST(ClassicalBound, TriangleIsOneExactly) {
  const auto r = classical_bound(triangle());
  EXPECT_EQ(r.max_value, 1.0);
  EXPECT_EQ(evaluate(triangle(), r.argmax), 1.0);
  EXPECT_EQ(r.argmax[0], 1);
}

TEST(ClassicalBound, MatchesBruteForceOnRandomInstances) {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 9);
    const auto ineq = random_complete(n, rng, trial % 2 == 0);
    const auto r = classical_bound(ineq);
    EXPECT_NEAR(r.max_value, oracle::brute_force_max(ineq), 1e-12) << "trial " << trial;
    EXPECT_NEAR(evaluate(ineq, r.argmax), r.max_value, 1e-12);
  }
  for (int trial = 0; trial < 20; ++trial) {
    const auto ineq = random_bipartite(1 + trial % 4, 2 + trial % 3, rng);
    EXPECT_NEAR(classical_bound(ineq).max_value, oracle::brute_force_max(ineq), 1e-12);
  }
}

TEST(ClassicalBound, SignFlipSymmetry) {
  Rng rng(5);
  const auto ineq = random_complete(7, rng, false);
  const auto r = classical_bound(ineq);
  EXPECT_DOUBLE_EQ(evaluate(ineq, r.argmax), evaluate(ineq, r.argmax.flipped()));
  EXPECT_EQ(r.argmax[0], 1);
}

TEST(ClassicalBound, ParallelSplitGivesIdenticalResult) {
  Rng rng(99);
  const auto ineq = random_complete(16, rng, true);
  const auto serial = classical_bound(ineq, {24, 1});
  for (unsigned workers : {2U, 3U, 8U}) {
    const auto parallel = classical_bound(ineq, {24, workers});
    EXPECT_EQ(parallel.max_value, serial.max_value);
    EXPECT_EQ(parallel.argmax, serial.argmax);
    EXPECT_EQ(parallel.evaluations, serial.evaluations);
  }
}

TEST(ClassicalBound, EvaluationCountIsHalfTheCube) {
  const auto ineq = clique_web_inequality({12, 3, 4});
  EXPECT_EQ(classical_bound(ineq).evaluations, 1ULL << 14);
}

TEST(ClassicalBound, GuardRaisesResourceLimit) {
  auto big = PairwiseInequality::complete(30);
  EXPECT_THROW(classical_bound(big), ResourceLimitError);
  EXPECT_THROW(classical_bound(triangle(), {2, 1}), ResourceLimitError);
}

TEST(ClassicalBound, EmptyAndSingleVariable) {
  EXPECT_EQ(classical_bound(PairwiseInequality::complete(1)).max_value, 0.0);
  EXPECT_EQ(classical_bound(PairwiseInequality::complete(0)).max_value, 0.0);
}

TEST(PairwiseInequality, RejectsBadKeysAndValues) {
  auto c = PairwiseInequality::complete(3);
  EXPECT_THROW(c.set(1, 1, 1.0), ParameterError);
  EXPECT_THROW(c.set(0, 3, 1.0), DimensionError);
  EXPECT_THROW(c.set(0, 1, std::nan("")), ParameterError);
  EXPECT_THROW(c.set_rhs(INFINITY), ParameterError);
  c.set(2, 0, 0.25);
  EXPECT_EQ(c.coefficient(0, 2), 0.25);
  EXPECT_EQ(c.coefficients().count({0, 2}), 1U);

  auto b = PairwiseInequality::bipartite(2, 3);
  EXPECT_THROW(b.set(2, 0, 1.0), DimensionError);
  EXPECT_THROW(b.set(0, 3, 1.0), DimensionError);
  b.set(1, 2, 1.0);
  EXPECT_EQ(b.flat({1, 2}), (IndexPair{1, 4}));
}

TEST(PairwiseInequality, EvaluateChecksLength) {
  EXPECT_THROW(evaluate(chsh(), SignAssignment{1, 1, 1}), DimensionError);
  EXPECT_THROW(SignAssignment({1, 0}), ParameterError);
  EXPECT_EQ(evaluate(chsh(), SignAssignment{1, 1, 1, 1}), 1.0);
  EXPECT_EQ(evaluate(chsh(), SignAssignment{1, 1, -1, -1}), -1.0);
}

TEST(CutForm, RoundTripPreservesInequality) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ineq = random_complete(3 + trial % 5, rng, true);
    const auto back = from_cut_form(to_cut_form(ineq));
    EXPECT_EQ(back, ineq);
  }
}

TEST(CutForm, AgreesWithPlusMinusFormOnEveryAssignment) {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 5);
    const auto ineq = random_complete(n, rng, false);
    const auto cut = to_cut_form(ineq);
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<std::int8_t> s(n);
      std::vector<std::uint8_t> bits(n);
      for (std::size_t k = 0; k < n; ++k) {
        bits[k] = (mask >> k) & 1U;
        s[k] = bits[k] ? -1 : 1;
      }
      const double lhs = evaluate(ineq, SignAssignment(s));
      const double cut_lhs = evaluate_cut(cut, bits);
      // sum a X X - rhs == cut_lhs - cut.rhs
      EXPECT_NEAR(lhs - ineq.rhs(), cut_lhs - cut.rhs, 1e-12);
    }
  }
}

TEST(CutForm, TriangleIsTheUsualTriangleCutInequality) {
  const auto cut = to_cut_form(triangle());
  EXPECT_EQ(cut.rhs, 4.0);
  for (const auto& [key, value] : cut.coefficients) EXPECT_EQ(value, 2.0);
  EXPECT_THROW(to_cut_form(chsh()), ParameterError);
}

TEST(Transforms, CollapseMovesDiagonalIntoRhs) {
  auto b = PairwiseInequality::bipartite(2, 2, 3.0);
  b.set(0, 0, 1.0).set(1, 1, 0.5).set(0, 1, 2.0).set(1, 0, -1.0);
  const auto c = collapse_bipartite(b);
  EXPECT_EQ(c.mode(), Mode::complete);
  EXPECT_EQ(c.coefficient(0, 1), 1.0);
  EXPECT_EQ(c.rhs(), 1.5);
  EXPECT_THROW(collapse_bipartite(PairwiseInequality::bipartite(2, 3)), DimensionError);
  EXPECT_THROW(collapse_bipartite(triangle()), ParameterError);
}

TEST(Transforms, AsCompleteKeepsClassicalBound) {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const auto b = random_bipartite(2 + trial % 3, 2 + trial % 2, rng);
    const auto c = as_complete(b);
    EXPECT_EQ(c.variable_count(), b.variable_count());
    EXPECT_NEAR(classical_bound(c).max_value, classical_bound(b).max_value, 1e-12);
  }
}

TEST(Transforms, ScaledRejectsNonPositive) {
  const auto s = scaled(triangle(), 2.0);
  EXPECT_EQ(s.rhs(), 2.0);
  EXPECT_EQ(s.coefficient(0, 1), -2.0);
  EXPECT_THROW(scaled(triangle(), 0.0), ParameterError);
}
