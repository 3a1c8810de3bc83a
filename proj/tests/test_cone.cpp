#include <gtest/gtest.h>

#include "support.hpp"

using namespace setopt;
using testing_support::any_cone;
using testing_support::code_of;
using testing_support::small_set;
using testing_support::small_vector;

TEST(BuildCone, OrthantIsSimplicial) {
  const Cone c = build_cone({{Vector{{1, 0}}}, {Vector{{0, 1}}}}, Vector{{1, 1}}, Vector{{1, 1}});
  EXPECT_EQ(c.dim(), 2u);
  EXPECT_TRUE(c.simplicial());
}

TEST(BuildCone, RedundantGeneratorIsNotSimplicial) {
  const Cone c =
      build_cone({{Vector{{1, 0}}}, {Vector{{0, 1}}}, {Vector{{1, 1}}}}, Vector{{1, 1}}, Vector{{1, 1}});
  EXPECT_FALSE(c.simplicial());
}

TEST(BuildCone, HalfSpacePairIsNotInterior) {
  EXPECT_EQ(code_of([] { build_cone({{Vector{{1, 0}}}, {Vector{{-1, 0}}}}, Vector{{1, 1}}, Vector{{1, 1}}); }),
            ErrorCode::NotInterior);
}

TEST(BuildCone, Errors) {
  EXPECT_EQ(code_of([] { build_cone({}, Vector{{1, 1}}, Vector{{1, 1}}); }), ErrorCode::EmptyDescription);
  // a single functional in R^2 cannot describe a pointed cone
  EXPECT_EQ(code_of([] { build_cone({{Vector{{1, 1}}}}, Vector{{1, 1}}, Vector{{1, 1}}); }), ErrorCode::NotPointed);
  EXPECT_EQ(code_of([] { build_cone({{Vector{{1, 0}}}, {Vector{{0, 1}}}}, Vector{{1, 1}}, Vector{{1, 1, 1}}); }),
            ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { build_cone({{Vector{{1, 0}}}, {Vector{{0, 1}}}}, Vector{{1, 1}}, Vector{{1, 0}}); }),
            ErrorCode::NotInterior);
}

TEST(BuildCone, NormalizedCaches) {
  const Cone c = build_cone({{Vector{{2, 0}}}, {Vector{{1, 3}}}}, Vector{{1, 1}}, Vector{{2, 1}});
  for (const auto& f : c.e_normalized()) EXPECT_NEAR(f(c.e()), 1.0, 1e-15);
  for (const auto& f : c.w_normalized()) EXPECT_NEAR(f(c.w()), 1.0, 1e-15);
}

TEST(Membership, Examples) {
  const Cone c = orthant(2);
  EXPECT_FALSE(membership(c, Vector{{1, 0}}, Region::IntC));
  EXPECT_TRUE(membership(c, Vector{{1, 0}}, Region::C));
  EXPECT_TRUE(membership(c, Vector{{1, 1}}, Region::IntC));
  EXPECT_TRUE(membership(c, Vector{{-1, -2}}, Region::NegIntC));
  EXPECT_FALSE(membership(c, Vector{{-1, 2}}, Region::NegC));
  EXPECT_EQ(code_of([&] { membership(c, Vector{{1, 1, 1}}, Region::C); }), ErrorCode::DimensionMismatch);
}

TEST(SupPoint, Examples) {
  const Cone c = orthant(2);
  EXPECT_TRUE(approx_equal(sup_point(c, FiniteSet{Vector{{0, 2}}, Vector{{2, 0}}}), Vector{{2, 2}}, 1e-12));
  EXPECT_TRUE(approx_equal(sup_point(c, FiniteSet{Vector{{1, 1}}}), Vector{{1, 1}}, 1e-12));
  EXPECT_TRUE(approx_equal(sup_point(c, FiniteSet{Vector{{0, 0}}, Vector{{1, 3}}, Vector{{3, 1}}}), Vector{{3, 3}},
                           1e-12));
}

TEST(SupPoint, RejectsGeneralPolyhedralCone) {
  const Cone c =
      build_cone({{Vector{{1, 0}}}, {Vector{{0, 1}}}, {Vector{{1, 1}}}}, Vector{{1, 1}}, Vector{{1, 1}});
  EXPECT_EQ(code_of([&] { sup_point(c, FiniteSet{Vector{{0, 0}}}); }), ErrorCode::NotSimplicial);
}

TEST(ConeProperties, RandomCones) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Cone c = any_cone(rng);
    EXPECT_TRUE(membership(c, c.e(), Region::IntC));
    EXPECT_TRUE(membership(c, c.w(), Region::IntC));
    const Vector y = small_vector(rng, c.dim());
    if (membership(c, y, Region::C) && membership(c, y, Region::NegC)) {
      EXPECT_LE(y.cwiseAbs().maxCoeff(), c.epsilon()) << "pointedness";
    }
    if (!c.simplicial()) continue;
    const FiniteSet a = small_set(rng, c.dim());
    const Vector s = sup_point(c, a);
    for (const auto& p : a) EXPECT_TRUE(membership(c, s - p, Region::C)) << "sup dominance";
    for (const auto& f : c.dual_generators()) {
      double slack = std::numeric_limits<double>::infinity();
      for (const auto& p : a) slack = std::min(slack, f(s - p));
      EXPECT_LE(std::abs(slack), 1e-9) << "sup minimality";
    }
  }
}

// Independent oracle: on the orthant the apex is the componentwise maximum.
TEST(SupPoint, OrthantComponentwiseMax) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = testing_support::pick_dim(rng);
    const FiniteSet a = small_set(rng, m, 8);
    Vector expect = a[0];
    for (const auto& p : a) expect = expect.cwiseMax(p);
    EXPECT_TRUE(approx_equal(sup_point(orthant(m), a), expect, 1e-12));
  }
}
