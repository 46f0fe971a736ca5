#include <bellbound/inequality.hpp>
#include <bellbound/polytopes.hpp>
#include <bellbound/random.hpp>
#include <bellbound/webs.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace bellbound;

namespace {

std::vector<double> to_double(const IntPoint& v) { return {v.begin(), v.end()}; }

/// Scalar product test of a certificate against every vertex, done here rather than trusted.
void expect_separates(const PolytopeSpec& spec, const MembershipCertificate& cert, std::span<const double> point) {
  ASSERT_TRUE(cert.separating.has_value());
  const auto& h = *cert.separating;
  double at_point = 0.0;
  for (std::size_t k = 0; k < point.size(); ++k) at_point += h.normal[k] * point[k];
  EXPECT_GT(at_point, h.offset);
  for (const auto& v : vertices(spec)) {
    double s = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) s += h.normal[k] * v[k];
    EXPECT_LE(s, h.offset + 1e-12);
  }
}

}  // namespace

TEST(Vertices, CountsAndDimensions) {
  EXPECT_EQ(vertices(PolytopeSpec::bell(3)).size(), 4U);
  EXPECT_EQ(vertices(PolytopeSpec::bell(5)).size(), 16U);
  EXPECT_EQ(vertices(PolytopeSpec::cut(4)).size(), 8U);
  EXPECT_EQ(vertices(PolytopeSpec::bell(2, 2)).size(), 8U);
  EXPECT_EQ(vertices(PolytopeSpec::bell(2, 3)).size(), 16U);
  EXPECT_EQ(vertices(PolytopeSpec::cor(3)).size(), 8U);
  EXPECT_EQ(PolytopeSpec::bell(4).ambient_dim(), 6U);
  EXPECT_EQ(PolytopeSpec::cor(3).ambient_dim(), 6U);
  EXPECT_EQ(PolytopeSpec::bell(2, 3).ambient_dim(), 6U);
}

TEST(Vertices, GuardAndParsing) {
  EXPECT_THROW(vertices(PolytopeSpec::bell(17)), ResourceLimitError);
  EXPECT_THROW(vertices(PolytopeSpec::bell(9, 9)), ResourceLimitError);
  EXPECT_THROW(vertices(PolytopeSpec::bell(0)), ParameterError);
  EXPECT_EQ(parse_polytope("bell3"), PolytopeSpec::bell(3));
  EXPECT_EQ(parse_polytope("bell22"), PolytopeSpec::bell(2, 2));
  EXPECT_EQ(parse_polytope("bell2x3"), PolytopeSpec::bell(2, 3));
  EXPECT_EQ(parse_polytope("cut4"), PolytopeSpec::cut(4));
  EXPECT_EQ(parse_polytope("cor3"), PolytopeSpec::cor(3));
  EXPECT_THROW(parse_polytope("sphere3"), ParameterError);
  EXPECT_THROW(parse_polytope("bellx"), ParameterError);
}

TEST(Membership, ChshPointIsOutsideBell22) {
  const double h = std::sqrt(2.0) / 2.0;
  const std::vector<double> point{h, h, h, -h};
  const auto spec = PolytopeSpec::bell(2, 2);
  const auto cert = membership(spec, point);
  EXPECT_FALSE(cert.inside);
  expect_separates(spec, cert, point);
  // The nearest point lies on the CHSH facet; the normal is parallel to (1,1,1,-1).
  const auto& n = cert.separating->normal;
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(n[k]) / std::abs(n[0]), 1.0, 1e-9);
  EXPECT_LT(n[3] * n[0], 0.0);
  EXPECT_NEAR(cert.distance, std::sqrt(2.0) - 1.0, 1e-9);
}

TEST(Membership, NegativeHalfPointIsOutsideBell3) {
  const std::vector<double> point{-0.5, -0.5, -0.5};
  const auto spec = PolytopeSpec::bell(3);
  const auto cert = membership(spec, point);
  EXPECT_FALSE(cert.inside);
  expect_separates(spec, cert, point);
  // Distance to the triangle facet -u12 - u13 - u23 <= 1 is (3/2 - 1)/sqrt 3.
  EXPECT_NEAR(cert.distance, 0.5 / std::sqrt(3.0), 1e-9);
}

TEST(Membership, EmbeddedPointIsOutsideBell33) {
  const std::vector<double> u{-0.5, -0.5, -0.5};
  const auto v = bell_embed(u);
  const auto spec = PolytopeSpec::bell(3, 3);
  const auto cert = membership(spec, v);
  EXPECT_FALSE(cert.inside);
  expect_separates(spec, cert, v);
}

TEST(Membership, VerticesAndCentroidAreInside) {
  for (const auto& spec : {PolytopeSpec::bell(4), PolytopeSpec::bell(2, 3), PolytopeSpec::cut(4),
                           PolytopeSpec::cor(3)}) {
    const auto verts = vertices(spec);
    std::vector<double> centroid(spec.ambient_dim(), 0.0);
    for (const auto& v : verts) {
      const auto p = to_double(v);
      const auto cert = membership(spec, p);
      EXPECT_TRUE(cert.inside);
      EXPECT_LT(cert.distance, 1e-10);
      for (std::size_t k = 0; k < p.size(); ++k) centroid[k] += p[k] / static_cast<double>(verts.size());
    }
    EXPECT_TRUE(membership(spec, centroid).inside) << spec.name();
  }
}

TEST(Membership, RandomConvexCombinationsAreInside) {
  Rng rng(17);
  const auto spec = PolytopeSpec::bell(5);
  const auto verts = vertices(spec);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> point(spec.ambient_dim(), 0.0);
    double total = 0.0;
    std::vector<double> w(verts.size());
    for (auto& x : w) total += (x = rng.uniform());
    for (std::size_t c = 0; c < verts.size(); ++c)
      for (std::size_t k = 0; k < point.size(); ++k) point[k] += w[c] / total * verts[c][k];
    EXPECT_TRUE(membership(spec, point).inside);
  }
}

TEST(Membership, OutsideVerdictAgreesWithAViolatedFacet) {
  // Points violating the triangle facet on variables 0, 1, 2 of BELL(4).
  const auto spec = PolytopeSpec::bell(4);
  for (double t : {1.01, 1.2, 2.0}) {
    // -(u01 + u02 + u12) = t > 1
    const std::vector<double> p{-t / 3.0, -t / 3.0, 0.0, -t / 3.0, 0.0, 0.0};
    const auto cert = membership(spec, p);
    EXPECT_FALSE(cert.inside) << t;
    expect_separates(spec, cert, p);
  }
}

TEST(Membership, DimensionAndIterationCap) {
  EXPECT_THROW(membership(PolytopeSpec::bell(3), std::vector<double>{0.0, 0.0}), DimensionError);
  const double h = std::sqrt(2.0) / 2.0;
  const std::vector<double> point{h, h, h, -h};
  EXPECT_THROW(membership(PolytopeSpec::bell(2, 2), point, 1), ConvergenceError);
}

TEST(Facets, ChshAndTriangleAreFacets) {
  const auto c = facet_check(PolytopeSpec::bell(2, 2), bell_coordinates(chsh()), chsh().rhs());
  EXPECT_TRUE(c.valid);
  EXPECT_TRUE(c.is_facet);
  EXPECT_TRUE(c.exact_arithmetic);
  EXPECT_EQ(c.affine_rank, 3U);
  EXPECT_EQ(c.tight_count, 4U);  // 8 of 16 assignments, halved by the global flip

  const auto t = facet_check(PolytopeSpec::bell(3), bell_coordinates(triangle()), triangle().rhs());
  EXPECT_TRUE(t.is_facet);
  EXPECT_EQ(t.tight_count, 3U);
}

TEST(Facets, NonFacetsAndInvalidInequalities) {
  // u01 <= 1 is valid on BELL(3) but only tight on an edge.
  const auto weak = facet_check(PolytopeSpec::bell(3), std::vector<double>{1.0, 0.0, 0.0}, 1.0);
  EXPECT_TRUE(weak.valid);
  EXPECT_FALSE(weak.is_facet);
  EXPECT_EQ(weak.affine_rank, 1U);

  const auto loose = facet_check(PolytopeSpec::bell(3), bell_coordinates(triangle()), 2.0);
  EXPECT_TRUE(loose.valid);
  EXPECT_EQ(loose.tight_count, 0U);
  EXPECT_FALSE(loose.is_facet);

  const auto invalid = facet_check(PolytopeSpec::bell(3), bell_coordinates(triangle()), 0.5);
  EXPECT_FALSE(invalid.valid);
  EXPECT_FALSE(invalid.is_facet);
  EXPECT_GT(invalid.max_excess, 0.0);

  EXPECT_THROW(facet_check(PolytopeSpec::bell(3), std::vector<double>{1.0}, 1.0), DimensionError);
}

TEST(Facets, PentagonalCliqueWebIsAFacetOfBell7) {
  const auto ineq = clique_web_inequality({5, 2, 1});
  const auto r = facet_check(PolytopeSpec::bell(7), bell_coordinates(ineq), ineq.rhs());
  EXPECT_TRUE(r.valid);
  EXPECT_TRUE(r.is_facet);
}

TEST(Facets, CutFormOfTriangleIsAFacetOfCut3) {
  const auto cut = to_cut_form(triangle());
  const auto r = facet_check(PolytopeSpec::cut(3), cut_coordinates(cut), cut.rhs);
  EXPECT_TRUE(r.is_facet);
}

TEST(Coordinates, CutAndBellMapsAreMutuallyInverse) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> c(10);
    for (auto& x : c) x = rng.uniform();
    const auto back = bell_to_cut(cut_to_bell(c));
    for (std::size_t k = 0; k < c.size(); ++k) EXPECT_NEAR(back[k], c[k], 1e-15);
    std::vector<double> v(10);
    for (auto& x : v) x = 2.0 * rng.uniform() - 1.0;
    const auto back_v = cut_to_bell(bell_to_cut(v));
    for (std::size_t k = 0; k < v.size(); ++k) EXPECT_NEAR(back_v[k], v[k], 1e-15);
  }
}

TEST(Coordinates, CutVerticesMapToBellVertices) {
  const auto cut = vertices(PolytopeSpec::cut(4));
  const auto bell = vertices(PolytopeSpec::bell(4));
  ASSERT_EQ(cut.size(), bell.size());
  for (std::size_t k = 0; k < cut.size(); ++k) {
    const auto mapped = cut_to_bell(to_double(cut[k]));
    EXPECT_EQ(mapped, to_double(bell[k]));
  }
}

TEST(Coordinates, PairIndexAndEmbedding) {
  EXPECT_EQ(pair_index(4, 0, 1), 0U);
  EXPECT_EQ(pair_index(4, 0, 3), 2U);
  EXPECT_EQ(pair_index(4, 1, 2), 3U);
  EXPECT_EQ(pair_index(4, 2, 3), 5U);
  EXPECT_EQ(triangular_root(6), 4U);
  EXPECT_THROW(triangular_root(5), DimensionError);
  const auto v = bell_embed(std::vector<double>{0.1, 0.2, 0.3});
  const std::vector<double> expected{1.0, 0.1, 0.2, 0.1, 1.0, 0.3, 0.2, 0.3, 1.0};
  EXPECT_EQ(v, expected);
}

TEST(Coordinates, BellCoordinatesOfChsh) {
  EXPECT_EQ(bell_coordinates(chsh()), (std::vector<double>{0.5, 0.5, 0.5, -0.5}));
  EXPECT_EQ(bell_polytope_of(chsh()), PolytopeSpec::bell(2, 2));
  EXPECT_EQ(bell_polytope_of(triangle()), PolytopeSpec::bell(3));
}
