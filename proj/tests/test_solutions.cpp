#include <gtest/gtest.h>

#include "support.hpp"

using namespace setopt;
using testing_support::code_of;

namespace {

using Ids = std::vector<std::string>;

Instance singletons(const std::vector<Vector>& values, Cone cone = orthant(2)) {
  std::vector<DecisionPoint> pts;
  std::vector<FiniteSet> vals;
  for (std::size_t i = 0; i < values.size(); ++i) {
    pts.push_back({"x" + std::to_string(i + 1), Vector{{static_cast<double>(i)}}});
    vals.push_back(FiniteSet{values[i]});
  }
  return Instance(std::move(cone), std::move(pts), std::move(vals));
}

Instance three_point() { return singletons({Vector{{0, 2}}, Vector{{2, 0}}, Vector{{3, 3}}}); }

Instance random_instance(Rng& rng, bool simplicial_only = false) {
  GenParams p;
  p.m = testing_support::pick_dim(rng);
  p.points = static_cast<std::size_t>(uniform_int(rng, 1, 9));
  p.set_size = static_cast<std::size_t>(uniform_int(rng, 1, 4));
  p.cone = testing_support::pick_kind(rng, simplicial_only);
  return generate("random-sets", p, rng());
}

}  // namespace

TEST(Solutions, ThreePointAllRoutes) {
  const Instance inst = three_point();
  const Ids expect{"x1", "x2"};
  EXPECT_EQ(solve_bruteforce(inst, Order::L, SolutionKind::WeakMinimal).members, expect);
  EXPECT_EQ(solve_bruteforce(inst, Order::L, SolutionKind::Minimal).members, expect);
  EXPECT_EQ(solve_bruteforce(inst, Order::U, SolutionKind::WeakMinimal).members, expect);
  EXPECT_EQ(weak_minimal_characterized(inst, Order::L).members, expect);
  EXPECT_EQ(weak_minimal_characterized(inst, Order::U).members, expect);
  const auto r = solve_bruteforce(inst, Order::L, SolutionKind::WeakMinimal);
  ASSERT_EQ(r.exclusions.size(), 1u);
  EXPECT_EQ(r.exclusions[0].id, "x3");
  EXPECT_EQ(r.exclusions[0].dominator, "x1");
  EXPECT_TRUE(replay_exclusion(inst, r.exclusions[0]));
}

TEST(Solutions, SingletonK) {
  const Instance inst = singletons({Vector{{4, -1}}});
  for (Order o : {Order::L, Order::U, Order::P})
    for (SolutionKind k : {SolutionKind::Minimal, SolutionKind::WeakMinimal})
      EXPECT_EQ(solve_bruteforce(inst, o, k).members, Ids{"x1"});
}

TEST(Solutions, EqualValuesGiveAllOfK) {
  const Instance inst = singletons({Vector{{1, 1}}, Vector{{1, 1}}, Vector{{1, 1}}});
  const Ids all{"x1", "x2", "x3"};
  EXPECT_EQ(weak_minimal_characterized(inst, Order::L).members, all);
  EXPECT_EQ(weak_minimal_characterized(inst, Order::U).members, all);
  EXPECT_EQ(vop_solve(inst, VopKind::Efficient).members, all);
  EXPECT_EQ(vop_solve(inst, VopKind::WeaklyEfficient).members, all);
}

TEST(Solutions, HOrderIsRejected) {
  EXPECT_EQ(code_of([] { solve_bruteforce(three_point(), Order::H, SolutionKind::Minimal); }),
            ErrorCode::InvalidArgument);
}

TEST(Solutions, RouteEqualityAndReplay) {
  Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const Instance inst = random_instance(rng);
    for (Order o : {Order::L, Order::U}) {
      const auto brute = solve_bruteforce(inst, o, SolutionKind::WeakMinimal);
      EXPECT_EQ(brute.members, weak_minimal_characterized(inst, o).members);
      EXPECT_EQ(brute.members.size() + brute.exclusions.size(), inst.size());
      for (const auto& ex : brute.exclusions) EXPECT_TRUE(replay_exclusion(inst, ex));
      const auto minimal = solve_bruteforce(inst, o, SolutionKind::Minimal);
      for (const auto& id : minimal.members) EXPECT_TRUE(brute.contains(id)) << "E within W";
    }
  }
}

// Reversing the point order must not change members or certificates.
TEST(Solutions, IndependentOfInputOrder) {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = random_instance(rng, true);
    std::vector<DecisionPoint> pts(inst.points().rbegin(), inst.points().rend());
    std::vector<FiniteSet> vals(inst.values().rbegin(), inst.values().rend());
    const Instance rev(inst.cone(), pts, vals);
    for (Order o : {Order::L, Order::U, Order::P}) {
      const auto a = solve_bruteforce(inst, o, SolutionKind::WeakMinimal);
      const auto b = solve_bruteforce(rev, o, SolutionKind::WeakMinimal);
      EXPECT_EQ(a.members, b.members);
      ASSERT_EQ(a.exclusions.size(), b.exclusions.size());
      for (std::size_t i = 0; i < a.exclusions.size(); ++i) EXPECT_EQ(a.exclusions[i].dominator, b.exclusions[i].dominator);
    }
  }
}

TEST(FSolutions, Examples) {
  const Instance inst = three_point();
  EXPECT_EQ(f_solution_set(inst, {Vector{{0.5, 0.5}}}), (Ids{"x1", "x2"}));
  EXPECT_EQ(f_solution_set(inst, {Vector{{1, 0}}}), Ids{"x1"});
  EXPECT_EQ(f_solution_set(singletons({Vector{{7, 7}}}), {Vector{{1, 0}}}), Ids{"x1"});
}

TEST(FSolutions, Errors) {
  const Instance inst = three_point();
  EXPECT_EQ(code_of([&] { f_solution_set(inst, {Vector{{1.5, -0.5}}}); }), ErrorCode::NotInDualCone);
  EXPECT_EQ(code_of([&] { f_solution_set(inst, {Vector{{1, 1}}}); }), ErrorCode::NotInDualCone);
  const Cone poly =
      build_cone({{Vector{{1, 0}}}, {Vector{{0, 1}}}, {Vector{{1, 1}}}}, Vector{{1, 1}}, Vector{{1, 1}});
  const Instance p = singletons({Vector{{0, 0}}}, poly);
  EXPECT_EQ(code_of([&] { f_solution_set(p, {Vector{{0.5, 0.5}}}); }), ErrorCode::NotSimplicial);
  EXPECT_EQ(code_of([&] { dual_base_grid(poly, 4); }), ErrorCode::NotSimplicial);
}

TEST(DualGrid, Examples) {
  const Cone c = orthant(2);
  const auto g = dual_base_grid(c, 2);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_TRUE(approx_equal(g[0].coeffs, Vector{{1, 0}}, 1e-15));
  EXPECT_TRUE(approx_equal(g[1].coeffs, Vector{{0.5, 0.5}}, 1e-15));
  EXPECT_TRUE(approx_equal(g[2].coeffs, Vector{{0, 1}}, 1e-15));

  const Cone s = build_cone({{Vector{{2, 1}}}, {Vector{{-1, 3}}}}, Vector{{1, 1}}, Vector{{1, 1}});
  const auto n1 = dual_base_grid(s, 1);
  ASSERT_EQ(n1.size(), 2u);
  EXPECT_TRUE(approx_equal(n1[0].coeffs, Vector{{2.0 / 3, 1.0 / 3}}, 1e-15));
}

TEST(DualGrid, CountNormalizationAndAdjacency) {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const Cone c = testing_support::any_cone(rng, true);
    const int n = uniform_int(rng, 1, 12);
    const auto g = dual_base_grid(c, n);
    const std::size_t expect = c.dim() == 2 ? static_cast<std::size_t>(n + 1)
                                            : static_cast<std::size_t>((n + 1) * (n + 2) / 2);
    EXPECT_EQ(g.size(), expect);
    for (const auto& f : g) {
      EXPECT_NEAR(f(c.e()), 1.0, c.epsilon());
      EXPECT_GE(c.dual_coordinates(f.coeffs).minCoeff(), -1e-12);
    }
    // neighbours along the path move one grid step of weight between two slots
    const auto gens = c.dual_generators();
    auto weights = [&](const DualFunctional& f) {
      Vector mu = c.dual_coordinates(f.coeffs);
      for (std::size_t j = 0; j < gens.size(); ++j) mu[static_cast<Eigen::Index>(j)] *= gens[j](c.e());
      return mu;
    };
    for (std::size_t k = 1; k < g.size(); ++k)
      EXPECT_NEAR((weights(g[k]) - weights(g[k - 1])).cwiseAbs().sum(), 2.0 / n, 1e-9);
  }
}

TEST(WeakPUnion, ThreePoint) {
  const auto r = weak_p_union(three_point(), 10);
  EXPECT_EQ(r.union_members, (Ids{"x1", "x2"}));
  EXPECT_EQ(r.weak_p_members, (Ids{"x1", "x2"}));
  EXPECT_TRUE(r.union_equal());
}

TEST(WeakPUnion, SingletonK) {
  const Instance inst = singletons({Vector{{2, 5}}});
  for (int n : {1, 3, 17}) {
    const auto r = weak_p_union(inst, n);
    EXPECT_EQ(r.union_members, Ids{"x1"});
    EXPECT_TRUE(r.union_equal());
    EXPECT_TRUE(r.all_singleton);
  }
}

TEST(Vop, ExamplesAndErrors) {
  const Instance inst = three_point();
  EXPECT_EQ(vop_solve(inst, VopKind::Efficient).members, (Ids{"x1", "x2"}));
  EXPECT_EQ(vop_solve(inst, VopKind::WeaklyEfficient).members, (Ids{"x1", "x2"}));
  std::vector<DecisionPoint> pts{{"x1", Vector{{0.0}}}};
  const Instance multi(orthant(2), pts, {FiniteSet{Vector{{0, 1}}, Vector{{1, 0}}}});
  EXPECT_EQ(code_of([&] { vop_solve(multi, VopKind::Efficient); }), ErrorCode::NotSingleValued);
}
