#include <gtest/gtest.h>

#include "support.hpp"

using namespace setopt;
using testing_support::any_cone;
using testing_support::half_vector;
using testing_support::small_set;

TEST(PhiL, Examples) {
  const Cone c = orthant(2);
  EXPECT_DOUBLE_EQ(phi_l(c, FiniteSet{Vector{{0, 0}}}, Vector{{2, 3}}).value, -2.0);
  EXPECT_DOUBLE_EQ(phi_l(c, FiniteSet{Vector{{0, 0}}}, Vector{{0, 0}}).value, 0.0);
  const auto r = phi_l(c, FiniteSet{Vector{{0, 0}}, Vector{{3, -1}}}, Vector{{2, 3}});
  EXPECT_DOUBLE_EQ(r.value, -2.0);
  EXPECT_EQ(r.witness_inner, 0u);
}

TEST(GE, Examples) {
  const Cone c = orthant(2);
  const FiniteSet a{Vector{{0, 0}}};
  const auto r = sup_phi_l(c, a, FiniteSet{Vector{{1, 1}}, Vector{{2, 0}}});
  EXPECT_DOUBLE_EQ(r.value, 0.0);
  EXPECT_EQ(r.witness_outer, 1u);
  EXPECT_DOUBLE_EQ(sup_phi_l(c, a, FiniteSet{Vector{{1, 1}}}).value, -1.0);
  EXPECT_TRUE(relate(c, a, FiniteSet{Vector{{1, 1}}}, OrderKind(Order::L, true)));
}

TEST(PhiU, Examples) {
  const Cone c = orthant(2);
  EXPECT_DOUBLE_EQ(phi_u(c, FiniteSet{Vector{{1, 1}}}, Vector{{0, 0}}).value, -1.0);
  EXPECT_DOUBLE_EQ(phi_u(c, FiniteSet{Vector{{1, 1}}}, Vector{{1, 1}}).value, 0.0);
  EXPECT_DOUBLE_EQ(phi_u(c, FiniteSet{Vector{{1, 1}}, Vector{{0, 2}}}, Vector{{2, 1}}).value, 1.0);
}

TEST(HW, Examples) {
  const Cone c = orthant(2);
  EXPECT_DOUBLE_EQ(sup_phi_u(c, FiniteSet{Vector{{0, 0}}}, FiniteSet{Vector{{1, 1}}}).value, -1.0);
  EXPECT_DOUBLE_EQ(sup_phi_u(c, FiniteSet{Vector{{2, 0}}, Vector{{0, 2}}}, FiniteSet{Vector{{1, 1}}}).value, 1.0);
}

TEST(Oracle, Examples) {
  const Cone c = orthant(2);
  EXPECT_NEAR(bisection_oracle(c, FiniteSet{Vector{{0, 0}}}, Vector{{2, 3}}, Order::L), -2.0, 1e-9);
  EXPECT_NEAR(bisection_oracle(c, FiniteSet{Vector{{1, 1}}}, Vector{{0, 0}}, Order::U), -1.0, 1e-9);
  EXPECT_NEAR(bisection_oracle(c, FiniteSet{Vector{{5, -2}}}, Vector{{5, -2}}, Order::L), 0.0, 1e-9);
  EXPECT_EQ(testing_support::code_of([&] { bisection_oracle(c, FiniteSet{Vector{{0, 0}}}, Vector{{0, 0}}, Order::P); }),
            ErrorCode::InvalidArgument);
}

TEST(Oracle, ClosedFormsAgree) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Cone c = any_cone(rng);
    const FiniteSet s = small_set(rng, c.dim());
    const Vector y = half_vector(rng, c.dim());
    EXPECT_NEAR(phi_l(c, s, y).value, bisection_oracle(c, s, y, Order::L), 1e-8);
    EXPECT_NEAR(phi_u(c, s, y).value, bisection_oracle(c, s, y, Order::U), 1e-8);
  }
}

TEST(Scalar, WitnessesReproduceValue) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const Cone c = any_cone(rng);
    const FiniteSet a = small_set(rng, c.dim());
    const FiniteSet b = small_set(rng, c.dim());
    const auto g = sup_phi_l(c, a, b);
    EXPECT_NEAR(phi_l(c, FiniteSet{a[g.witness_inner]}, b[*g.witness_outer]).value, g.value, 1e-12);
    const auto h = sup_phi_u(c, a, b);
    EXPECT_NEAR(phi_u(c, FiniteSet{b[h.witness_inner]}, a[*h.witness_outer]).value, h.value, 1e-12);
  }
}

TEST(Scalar, TranslationLaws) {
  Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const Cone c = any_cone(rng);
    const FiniteSet s = small_set(rng, c.dim());
    const Vector y = half_vector(rng, c.dim());
    const double t = setopt::uniform_int(rng, -6, 6) * 0.25;
    EXPECT_NEAR(phi_l(c, s, y + t * c.e()).value, phi_l(c, s, y).value - t, 1e-12);
    EXPECT_NEAR(phi_u(c, s, y + t * c.w()).value, phi_u(c, s, y).value + t, 1e-12);
  }
}

TEST(Scalar, OrderBridges) {
  Rng rng(34);
  for (int trial = 0; trial < 500; ++trial) {
    const Cone c = any_cone(rng);
    const FiniteSet a = small_set(rng, c.dim(), 4, 2);
    const FiniteSet b = small_set(rng, c.dim(), 4, 2);
    const double eps = c.epsilon();
    EXPECT_EQ(sup_phi_l(c, a, b).value < -eps, relate(c, a, b, OrderKind(Order::L, true)));
    EXPECT_EQ(sup_phi_u(c, a, b).value < -eps, relate(c, a, b, OrderKind(Order::U, true)));
    if (relate(c, a, b, OrderKind(Order::L, false))) EXPECT_LE(sup_phi_l(c, a, b).value, eps);
    EXPECT_NEAR(sup_phi_l(c, a, a).value, 0.0, 1e-12);
    EXPECT_NEAR(sup_phi_u(c, a, a).value, 0.0, 1e-12);
  }
}

TEST(ClassifyLevel, Examples) {
  const Cone c = orthant(2);
  const FiniteSet b{Vector{{1, 1}}};
  auto r = classify_level(c, b, Vector{{0, 0}}, 0.0);
  EXPECT_EQ(r.relation(), LevelSetClass::Relation::Below);
  EXPECT_TRUE(r.routes_agree());
  r = classify_level(c, b, Vector{{1, 1}}, 0.0);
  EXPECT_EQ(r.relation(), LevelSetClass::Relation::OnBoundary);
  EXPECT_TRUE(r.on_boundary && r.routes_agree());
  r = classify_level(c, b, Vector{{3, 0}}, 0.0);
  EXPECT_TRUE(r.at_least && r.above && r.routes_agree());
  EXPECT_DOUBLE_EQ(r.value, 2.0);
}

TEST(ClassifyLevel, ConsistentAndRoutesAgree) {
  Rng rng(35);
  for (int trial = 0; trial < 300; ++trial) {
    const Cone c = any_cone(rng);
    const FiniteSet b = small_set(rng, c.dim());
    const Vector y = half_vector(rng, c.dim());
    const double v = phi_u(c, b, y).value;
    for (double r : {v - 1.0, v, v + 1.0, std::round(v), 0.0}) {
      const auto cls = classify_level(c, b, y, r);
      EXPECT_TRUE(cls.routes_agree()) << "r = " << r << ", value = " << v;
      if (cls.below) EXPECT_TRUE(cls.at_most);
      if (cls.above) EXPECT_TRUE(cls.at_least);
      EXPECT_EQ(cls.on_boundary, cls.at_most && cls.at_least && !cls.below && !cls.above);
    }
  }
}
