#include <gtest/gtest.h>

#include "colorful/generate.hpp"
#include "colorful/numeric.hpp"
#include "oracles.hpp"

namespace colorful {
namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(to_string(parse_rational("6/-4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("7")), "7/1");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0/1");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(SolveLinear, Identity) {
  Matrix a(2, 2);
  a(0, 0) = 1;
  a(1, 1) = 1;
  EXPECT_EQ(*solve_linear(a, {3, 4}), (Vector{3, 4}));
}

TEST(SolveLinear, InconsistentRows) {
  Matrix a(2, 2);
  a(0, 0) = 1, a(0, 1) = 1, a(1, 0) = 2, a(1, 1) = 2;
  EXPECT_FALSE(solve_linear(a, {1, 3}).has_value());
}

TEST(SolveLinear, UnderdeterminedZeroesFreeVariables) {
  Matrix a(2, 2);
  a(0, 0) = 1, a(0, 1) = 1, a(1, 0) = 2, a(1, 1) = 2;
  EXPECT_EQ(*solve_linear(a, {1, 2}), (Vector{1, 0}));
}

TEST(NullSpace, IndependentPointsHaveNone) {
  std::vector<Vector> pts = {{1, 0}, {0, 1}};
  EXPECT_FALSE(null_space_vector(pts).has_value());
}

TEST(NullSpace, CollinearPair) {
  std::vector<Vector> pts = {{1, 0}, {2, 0}};
  const auto mu = null_space_vector(pts);
  ASSERT_TRUE(mu.has_value());
  EXPECT_EQ((*mu)[0] / (*mu)[1], q(-2));
  EXPECT_TRUE(combination(pts, *mu, 2).is_zero());
}

TEST(NullSpace, RandomOverdeterminedSets) {
  SplitMix64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + t % 5;
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < d + 2; ++i) pts.push_back(oracle::random_vector(rng, d, 9));
    const auto mu = null_space_vector(pts);
    ASSERT_TRUE(mu.has_value());
    EXPECT_TRUE(std::any_of(mu->begin(), mu->end(), [](const Rational& x) { return x != 0; }));
    EXPECT_TRUE(combination(pts, *mu, d).is_zero());
  }
}

TEST(ProjectComplement, AxisCases) {
  std::vector<Vector> p1 = {{1, 1}}, b1 = {{1, 0}};
  EXPECT_EQ(project_complement(p1, b1).points[0], (Vector{0, 1}));
  std::vector<Vector> p2 = {{2, 3, 5}}, b2 = {{1, 0, 0}, {0, 1, 0}};
  const auto proj = project_complement(p2, b2);
  EXPECT_EQ(proj.points[0], (Vector{0, 0, 5}));
  EXPECT_EQ(proj.reduced[0], (Vector{5}));
}

TEST(ProjectComplement, RejectsZeroBasis) {
  std::vector<Vector> p = {{1, 1}}, b = {{0, 0}};
  EXPECT_THROW(project_complement(p, b), std::invalid_argument);
}

TEST(ProjectComplement, RandomPostconditionsAndIdempotence) {
  SplitMix64 rng(5);
  for (int t = 0; t < 100; ++t) {
    std::vector<Vector> pts, basis;
    for (int i = 0; i < 3; ++i) pts.push_back(oracle::random_vector(rng, 4, 7));
    for (int i = 0; i < 2; ++i) basis.push_back(oracle::random_vector(rng, 4, 7));
    if (span_dimension(basis, 4) == 0) continue;
    const auto proj = project_complement(pts, basis);
    ASSERT_EQ(proj.complement_basis.size(), 4 - span_dimension(basis, 4));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (const auto& b : basis) EXPECT_EQ(dot(proj.points[i], b), 0);
      // p - p~ lies in lsp(basis): adding it to the basis keeps the rank.
      std::vector<Vector> ext = basis;
      ext.push_back(pts[i] - proj.points[i]);
      EXPECT_EQ(span_dimension(ext, 4), span_dimension(basis, 4));
      // Reduced coordinates reproduce the projection.
      Vector back(4);
      for (std::size_t k = 0; k < proj.complement_basis.size(); ++k)
        back += proj.reduced[i][k] * proj.complement_basis[k];
      EXPECT_EQ(back, proj.points[i]);
    }
    const auto again = project_complement(proj.points, basis);
    EXPECT_EQ(again.points, proj.points);
    EXPECT_EQ(complement_coordinates(pts, basis), proj.reduced);
  }
}

TEST(Primitive, ScalesToCoprimeIntegers) {
  EXPECT_EQ(primitive(Vector{q(1, 2), q(-3, 4)}), (Vector{2, -3}));
  EXPECT_EQ(primitive(Vector{6, 0, 9}), (Vector{2, 0, 3}));
  EXPECT_EQ(primitive(Vector{0, 0}), (Vector{0, 0}));
}

TEST(OriginInHull, SymmetricPair) {
  std::vector<Vector> pts = {{1, 0}, {-1, 0}};
  const auto c = origin_in_hull(pts);
  ASSERT_TRUE(c.inside());
  EXPECT_EQ(c.coefficients, (std::vector<Rational>{q(1, 2), q(1, 2)}));
  EXPECT_TRUE(certificate_valid(pts, c));
}

TEST(OriginInHull, SeparatedPair) {
  std::vector<Vector> pts = {{1, 0}, {0, 1}};
  const auto c = origin_in_hull(pts);
  ASSERT_FALSE(c.inside());
  for (const auto& p : pts) EXPECT_GT(dot(c.separator, p), 0);
  EXPECT_TRUE(certificate_valid(pts, c));
}

TEST(OriginInHull, MatchesSubsetOracle) {
  SplitMix64 rng(11);
  for (int t = 0; t < 300; ++t) {
    std::vector<Vector> pts;
    for (int i = 0; i < 10; ++i) pts.push_back(oracle::random_vector(rng, 3, 4));
    const auto c = origin_in_hull(pts);
    EXPECT_EQ(c.inside(), oracle::origin_in_hull(pts));
    EXPECT_TRUE(certificate_valid(pts, c));
  }
}

TEST(OriginInHull, CertificateCheckerRejectsForgeries) {
  std::vector<Vector> pts = {{1, 0}, {-1, 0}};
  HullCertificate bad;
  bad.kind = HullCertificate::Kind::Inside;
  bad.coefficients = {q(1, 3), q(2, 3)};
  EXPECT_FALSE(certificate_valid(pts, bad));
  HullCertificate sep;
  sep.separator = Vector{1, 0};
  EXPECT_FALSE(certificate_valid(pts, sep));
}

TEST(SolveNonnegative, DegenerateSystemsTerminate) {
  // Many redundant rows and a degenerate vertex.
  Matrix a(4, 3);
  const long rows[4][3] = {{1, 1, 0}, {1, 1, 0}, {0, 1, 1}, {1, 2, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = rows[i][j];
  const auto res = solve_nonnegative(a, {0, 0, 0, 0});
  ASSERT_TRUE(res.solution.has_value());
  EXPECT_EQ(a * *res.solution, (Vector{0, 0, 0, 0}));
  const auto infeasible = solve_nonnegative(a, {1, 1, -1, 0});
  EXPECT_FALSE(infeasible.solution.has_value());
  const Vector yA = a.transposed() * infeasible.farkas;
  for (const auto& x : yA) EXPECT_LE(x, 0);
  EXPECT_GT(dot(infeasible.farkas, Vector{1, 1, -1, 0}), 0);
}

TEST(InCone, Basics) {
  std::vector<Vector> gens = {{1, 0}, {0, 1}};
  EXPECT_TRUE(in_cone(gens, Vector{2, 3}, 2));
  EXPECT_FALSE(in_cone(gens, Vector{-1, 3}, 2));
  EXPECT_TRUE(in_cone({}, Vector{0, 0}, 2));
  EXPECT_FALSE(in_cone({}, Vector{1, 0}, 2));
}

TEST(MinNormPoint, Segment) {
  std::vector<Vector> pts = {{1, -1}, {1, 1}};
  const auto r = min_norm_point(pts);
  EXPECT_EQ(r.point, (Vector{1, 0}));
  EXPECT_EQ(r.squared_distance, 1);
}

TEST(MinNormPoint, OriginIsAVertex) {
  std::vector<Vector> pts = {{0, 0}, {5, 7}};
  const auto r = min_norm_point(pts);
  EXPECT_EQ(r.point, (Vector{0, 0}));
  EXPECT_EQ(r.squared_distance, 0);
}

TEST(MinNormPoint, MatchesFaceEnumeration) {
  SplitMix64 rng(13);
  for (int t = 0; t < 200; ++t) {
    std::vector<Vector> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(oracle::random_vector(rng, 2, 6));
    const auto got = min_norm_point(pts);
    const auto want = oracle::min_norm_point(pts);
    EXPECT_EQ(got.squared_distance, want.squared_distance);
    EXPECT_EQ(got.point, want.point);
  }
}

TEST(MinNormPoint, ZeroExactlyWhenInside) {
  SplitMix64 rng(17);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t d = 1 + t % 5;
    std::vector<Vector> pts;
    const std::size_t k = 1 + rng.uniform(0, static_cast<long>(d) + 2);
    for (std::size_t i = 0; i < k; ++i) pts.push_back(oracle::random_vector(rng, d, 3));
    EXPECT_EQ(sgn(min_norm_point(pts).squared_distance) == 0, origin_in_hull(pts).inside());
  }
}

}  // namespace
}  // namespace colorful
