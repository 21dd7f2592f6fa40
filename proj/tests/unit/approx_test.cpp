#include <gtest/gtest.h>

#include <algorithm>

#include "colorful/approx.hpp"
#include "colorful/generate.hpp"
#include "colorful/model.hpp"
#include "oracles.hpp"

namespace colorful {
namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

Instance random_instance(std::uint64_t seed, std::size_t d, std::size_t classes) {
  GenerateOptions g;
  g.seed = seed;
  g.dimension = d;
  g.classes = classes;
  g.points_per_class = d + 1;
  return generate_instance(g);
}

void expect_choice(const Instance& inst, const ColorfulChoice& c, std::size_t bound) {
  EXPECT_LE(c.m, bound);
  EXPECT_EQ(max_multiplicity(c, inst), c.m);
  const auto pts = gather(inst, c.selections);
  EXPECT_TRUE(oracle::origin_in_hull(pts));
}

TEST(LineInCone, OneDimension) {
  std::vector<Vector> pts = {{1}, {-1}};
  const std::vector<std::size_t> a = {0}, b = {1};
  EXPECT_EQ(line_in_cone(pts, a, b), (Vector{q(1, 2)}));
}

TEST(LineInCone, Triangle) {
  std::vector<Vector> pts = {{1, 0}, {-1, 1}, {-1, -1}};
  const std::vector<Rational> w = {q(1, 2), q(1, 4), q(1, 4)};
  const std::vector<std::size_t> part1 = {0};
  EXPECT_EQ(line_in_cone(pts, w, part1), (Vector{q(1, 2), 0}));
  const std::vector<std::size_t> a = {0}, b = {1, 2};
  EXPECT_EQ(line_in_cone(pts, a, b), (Vector{q(1, 2), 0}));
}

TEST(LineInCone, RejectsBadInput) {
  std::vector<Vector> pts = {{1, 0}, {2, 0}, {-1, 0}};
  const std::vector<std::size_t> a = {0}, b = {1, 2};
  EXPECT_THROW(line_in_cone(pts, a, b), std::invalid_argument);
  std::vector<Vector> tri = {{1, 0}, {-1, 1}, {-1, -1}};
  const std::vector<std::size_t> overlap = {0, 1};
  EXPECT_THROW(line_in_cone(tri, overlap, b), std::invalid_argument);
}

TEST(LineInCone, RandomSplitsLieInBothCones) {
  SplitMix64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 2 + t % 3;
    const auto inst = random_instance(rng.next(), d, 1);
    const auto& pts = inst.classes()[0].points;
    std::vector<std::size_t> a, b;
    for (std::size_t i = 0; i < pts.size(); ++i) (i % 2 ? b : a).push_back(i);
    const Vector v = line_in_cone(pts, a, b);
    std::vector<Vector> pa, pb;
    for (auto i : a) pa.push_back(pts[i]);
    for (auto i : b) pb.push_back(pts[i]);
    EXPECT_FALSE(v.is_zero());
    EXPECT_TRUE(oracle::in_cone(pa, v));
    EXPECT_TRUE(oracle::in_cone(pb, -v));
  }
}

TEST(Representatives, Singletons) {
  std::vector<Vector> pts = {{1, 0}, {-1, 1}, {-1, -1}};
  const auto r = representatives(pts, {{0}, {1}, {2}});
  ASSERT_EQ(r.reps.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(r.reps[i], r.weights[i] * pts[i]);
}

TEST(Representatives, TwoParts) {
  std::vector<Vector> pts = {{1, 0}, {-1, 1}, {-1, -1}};
  const auto r = representatives(pts, {{0}, {1, 2}});
  EXPECT_EQ(r.reps, (std::vector<Vector>{{q(1, 2), 0}, {q(-1, 2), 0}}));
}

TEST(Representatives, RejectsSinglePart) {
  std::vector<Vector> pts = {{1, 0}, {-1, 1}, {-1, -1}};
  EXPECT_THROW(representatives(pts, {{0, 1, 2}}), std::invalid_argument);
  EXPECT_THROW(representatives(pts, {{0}, {1}}), std::invalid_argument);
}

TEST(ReplaceRepresentative, DropsTheFirstReplaceable) {
  std::vector<Vector> reps = {{1, 0, 0}, {-1, 0, 0}};
  std::vector<Vector> qs = {{5, 1, 0}, {3, -1, 1}, {2, 0, -1}};
  const auto r = replace_representative(reps, qs);
  EXPECT_EQ(r.index, 0u);
  EXPECT_EQ(r.q, (Vector{q(10, 3), 0, 0}));
  EXPECT_EQ(r.alphas, (std::vector<Rational>{q(10, 3)}));
  std::vector<Vector> rest = qs;
  rest.push_back(reps[1]);
  EXPECT_TRUE(oracle::origin_in_hull(rest));
}

TEST(ReplaceRepresentative, ProjectionMustContainOrigin) {
  std::vector<Vector> reps = {{1, 0, 0}, {-1, 0, 0}};
  std::vector<Vector> qs = {{5, 1, 0}, {3, 1, 1}};
  EXPECT_THROW(replace_representative(reps, qs), std::invalid_argument);
}

// Three triangles in the plane split as one point against two.
TEST(SelectByKernel, ThreeTriangles) {
  const std::vector<std::vector<Vector>> sets = {
      {{q(-2), q(-9, 5)}, {q(2), q(4, 5)}, {q(-3, 2), q(1)}},
      {{q(-3, 2), q(-1)}, {q(7, 10), q(-6, 5)}, {q(-3, 10), q(6, 5)}},
      {{q(-9, 5), q(3, 10)}, {q(6, 5), q(-9, 10)}, {q(11, 10), q(1)}}};
  const std::vector<std::vector<std::size_t>> part1 = {{0}, {2}, {0}}, part2 = {{1, 2}, {0, 1}, {1, 2}};
  Instance inst(2, {{0, sets[0]}, {1, sets[1]}, {2, sets[2]}}, InstanceKind::Caratheodory);

  std::vector<SplitSet> splits;
  for (std::size_t c = 0; c < 3; ++c) {
    SplitSet s;
    for (auto i : part1[c]) s.part1.push_back({c, i});
    for (auto i : part2[c]) s.part2.push_back({c, i});
    s.v = line_in_cone(sets[c], part1[c], part2[c]);
    splits.push_back(s);
  }
  auto got = select_by_kernel(splits);
  std::sort(got.begin(), got.end());
  const std::vector<PointRef> one = {{0, 0}, {1, 2}, {2, 1}, {2, 2}};
  const std::vector<PointRef> other = {{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}};
  EXPECT_TRUE(got == one || got == other);
  EXPECT_TRUE(oracle::origin_in_hull(gather(inst, got)));
  EXPECT_TRUE(oracle::origin_in_hull(gather(inst, one)));
}

TEST(SelectByKernel, IndependentVectorsAreRejected) {
  std::vector<SplitSet> splits(2);
  splits[0].v = Vector{1, 0};
  splits[1].v = Vector{0, 1};
  EXPECT_THROW(select_by_kernel(splits), std::invalid_argument);
}

TEST(HullMeetsRay, LiftsThroughTheRightSide) {
  std::vector<Vector> p = {{q(-6, 5), 0}, {q(11, 10), q(-11, 10)}, {q(17, 10), q(11, 5)}};
  std::vector<Vector> qs = {{q(-19, 10), q(-9, 5)}, {q(-13, 5), q(13, 10)}};
  const std::vector<std::size_t> a = {0}, b = {1, 2};
  const Vector v = line_in_cone(p, a, b);
  ASSERT_TRUE(hull_meets_ray(qs, v));
  std::vector<Vector> lifted = qs;
  lifted.push_back(p[1]);
  lifted.push_back(p[2]);
  EXPECT_TRUE(oracle::origin_in_hull(lifted));
  EXPECT_FALSE(hull_meets_ray(qs, -v));
}

TEST(HalfLinalg, RandomInstances) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t d = 1 + seed % 5;
    const auto inst = random_instance(seed, d, d + 1);
    expect_choice(inst, half_linalg(inst), (d + 2) / 2);
  }
}

TEST(HalfDimreduce, RandomInstances) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t d = 1 + seed % 5;
    const auto inst = random_instance(seed, d, d / 2 + 1);
    expect_choice(inst, half_dimreduce(inst), (d + 1) / 2 + 1);
  }
}

TEST(CheckFeasible, EpsilonHalfIsClean) {
  const auto p = epsilon_params(100, q(1, 2));
  EXPECT_TRUE(check_feasible(p, 100, p.depths()).empty());
}

TEST(CheckFeasible, FlagsViolations) {
  ParameterFunctions flat{{5, 5}, {10, 5}, 2};
  EXPECT_FALSE(check_feasible(flat, 10, 2).empty());
  ParameterFunctions shifted{{5, 3}, {9, 5}, 2};
  EXPECT_FALSE(check_feasible(shifted, 10, 2).empty());
}

TEST(EpsilonParams, FirstDepth) {
  const auto half = epsilon_params(7, q(1, 2));
  EXPECT_EQ(half.M.front(), 4);
  EXPECT_EQ(half.D.front(), 7);
  EXPECT_EQ(half.d0, 48);
  EXPECT_EQ(epsilon_params(99, q(1, 4)).M.front(), 25);
  EXPECT_THROW(epsilon_params(5, q(0)), std::invalid_argument);
  EXPECT_THROW(epsilon_params(5, q(1)), std::invalid_argument);
}

TEST(EpsilonParams, FeasibleAcrossDimensions) {
  for (const auto& eps : {q(1, 2), q(1, 3), q(1, 4)}) {
    for (std::size_t d = 1; d <= 200; ++d) {
      const auto p = epsilon_params(d, eps);
      EXPECT_TRUE(check_feasible(p, d, p.depths()).empty()) << "d=" << d;
    }
  }
}

TEST(SqrtLowerBound, Dyadic) {
  const Rational s = sqrt_lower_bound(q(1, 2), 20);
  EXPECT_LE(s * s, q(1, 2));
  const Rational next = s + q(1, 1 << 20);
  EXPECT_GT(next * next, q(1, 2));
  EXPECT_EQ(sqrt_lower_bound(q(1, 4), 20), q(1, 2));
}

TEST(Rebalance, RecursesWithCustomSchedule) {
  ParameterFunctions p{{7, 5}, {12, 6}, 6};
  ASSERT_TRUE(check_feasible(p, 12, p.depths()).empty());
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto inst = random_instance(seed, 12, 13);
    const auto r = rebalance(inst, p);
    expect_choice(inst, r.choice, 7);
    EXPECT_GE(r.stats.base_cases, 1u);
  }
}

TEST(Rebalance, BaseCaseSolversAgreeOnValidity) {
  const auto inst = random_instance(4, 4, 5);
  const auto p = epsilon_params(4, q(1, 2));
  for (auto solver : {BaseCaseSolver::BruteForce, BaseCaseSolver::LocalSearch}) {
    const auto r = rebalance(inst, p, {solver});
    expect_choice(inst, r.choice, 3);
  }
}

TEST(TwoColorBound, Sixteen) {
  const auto b = two_color_bound(16);
  EXPECT_EQ(b.bound, 13);
  EXPECT_EQ(b.k, 4);
  const auto g = two_color_guarantee(16);
  EXPECT_EQ(g.bound, 14);
}

TEST(TwoColor, GuaranteeHolds) {
  for (std::size_t d : {1u, 2u, 5u, 9u}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto inst = random_instance(seed, d, 2);
      const auto r = two_color(inst);
      expect_choice(inst, r.choice, static_cast<std::size_t>(two_color_guarantee(d).bound));
    }
  }
}

}  // namespace
}  // namespace colorful
