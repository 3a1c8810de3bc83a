#pragma once

#include <algorithm>
#include <cstddef>
#include <cmath>
#include <functional>
#include <iterator>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "setopt/cone.hpp"
#include "setopt/error.hpp"
#include "setopt/instance.hpp"
#include "setopt/parallel.hpp"
#include "setopt/scalarization.hpp"
#include "setopt/set_relations.hpp"

namespace setopt {

enum class SolutionKind { Minimal, WeakMinimal };
enum class Method { BruteForce, Scalarization };

inline const char* to_string(SolutionKind k) { return k == SolutionKind::Minimal ? "minimal" : "weakMinimal"; }
inline const char* to_string(Method m) { return m == Method::BruteForce ? "bruteforce" : "scalarization"; }

/// Why a decision point is not a solution: F(dominator) relates to F(id)
/// under `relation` while the reverse relation fails.
struct Exclusion {
  std::string id;
  std::string dominator;
  OrderKind relation;
};

struct SolutionReport {
  OrderKind order;
  SolutionKind kind = SolutionKind::Minimal;
  Method method = Method::BruteForce;
  std::vector<std::string> members;  // natural id order
  std::vector<Exclusion> exclusions;  // natural id order

  bool contains(const std::string& id) const {
    return std::find(members.begin(), members.end(), id) != members.end();
  }
};

/// Re-checks one exclusion certificate against relate().
inline bool replay_exclusion(const Instance& inst, const Exclusion& ex) {
  const auto& mine = inst.value(ex.id);
  const auto& theirs = inst.value(ex.dominator);
  return relate(inst.cone(), theirs, mine, ex.relation) && !relate(inst.cone(), mine, theirs, ex.relation);
}

namespace detail {

inline void require_solution_order(Order order) {
  if (order == Order::H) raise(ErrorCode::InvalidArgument, "solution sets are defined for the l, u and p orders");
}

// Assembles a report from per-candidate dominators (nullopt = member).
inline SolutionReport assemble(const Instance& inst, OrderKind relation, SolutionKind kind, Method method,
                               const std::vector<std::optional<std::size_t>>& dominator) {
  SolutionReport report{relation, kind, method, {}, {}};
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (!dominator[i]) {
      report.members.push_back(inst.id(i));
    } else {
      report.exclusions.push_back({inst.id(i), inst.id(*dominator[i]), relation});
    }
  }
  sort_ids(report.members);
  std::sort(report.exclusions.begin(), report.exclusions.end(),
            [](const Exclusion& a, const Exclusion& b) { return natural_less(a.id, b.id); });
  return report;
}

// Keeps the candidate whose id sorts first, so certificates do not depend on
// the order of points in the instance.
inline void keep_first_id(const Instance& inst, std::optional<std::size_t>& slot, std::size_t candidate) {
  if (!slot || natural_less(inst.id(candidate), inst.id(*slot))) slot = candidate;
}

}  // namespace detail

/// Solutions straight from the definition: x0 is a solution iff every x
/// with F(x) related to F(x0) is also related the other way round. Strict
/// relations are used for weak minimality.
inline SolutionReport solve_bruteforce(const Instance& inst, Order order, SolutionKind kind) {
  detail::require_solution_order(order);
  if (order == Order::P) inst.cone().require_simplicial("p-type solution sets");
  const OrderKind relation(order, kind == SolutionKind::WeakMinimal);
  const std::size_t n = inst.size();

  std::vector<char> rel(n * n, 0);
  parallel_for(n, [&](std::size_t x) {
    for (std::size_t y = 0; y < n; ++y) rel[x * n + y] = relate(inst.cone(), inst.value(x), inst.value(y), relation);
  });

  std::vector<std::optional<std::size_t>> dominator(n);
  for (std::size_t x0 = 0; x0 < n; ++x0)
    for (std::size_t x = 0; x < n; ++x)
      if (rel[x * n + x0] && !rel[x0 * n + x]) detail::keep_first_id(inst, dominator[x0], x);
  return detail::assemble(inst, relation, kind, Method::BruteForce, dominator);
}

/// Weak minimal solutions through the scalar characterization: x0 is weakly
/// minimal iff the lifted functional of (F(y), F(x0)) is >= -eps for all y.
inline SolutionReport weak_minimal_characterized(const Instance& inst, Order order) {
  if (order != Order::L && order != Order::U)
    raise(ErrorCode::InvalidArgument, "scalar characterization exists for the l and u orders only");
  const auto& cone = inst.cone();
  const double eps = cone.epsilon();
  const std::size_t n = inst.size();
  std::vector<std::optional<std::size_t>> dominator(n);
  parallel_for(n, [&](std::size_t x0) {
    for (std::size_t y = 0; y < n; ++y) {
      const double v = order == Order::L ? sup_phi_l(cone, inst.value(y), inst.value(x0)).value
                                         : sup_phi_u(cone, inst.value(y), inst.value(x0)).value;
      if (v < -eps) detail::keep_first_id(inst, dominator[x0], y);
    }
  });
  return detail::assemble(inst, OrderKind(order, true), SolutionKind::WeakMinimal, Method::Scalarization, dominator);
}

namespace detail {

inline void require_dual_base_member(const Cone& cone, const DualFunctional& f) {
  cone.require_simplicial("f-solution sets");
  require_dim(cone, f.coeffs, "functional");
  const Vector mu = cone.dual_coordinates(f.coeffs);
  if (mu.minCoeff() < -cone.epsilon()) raise(ErrorCode::NotInDualCone, "functional has a negative dual weight");
  if (std::abs(f(cone.e()) - 1.0) > cone.epsilon())
    raise(ErrorCode::NotInDualCone, "functional is not normalized at e (f(e) = " + std::to_string(f(cone.e())) + ")");
}

inline std::vector<Vector> apexes(const Instance& inst) {
  std::vector<Vector> out;
  out.reserve(inst.size());
  for (const auto& v : inst.values()) out.push_back(sup_point(inst.cone(), v));
  return out;
}

// Indices of Q(f): sup f over F(x) <= min over y of f(sigma(F(y))).
inline std::vector<std::size_t> f_solution_indices(const Instance& inst, const DualFunctional& f,
                                                   const std::vector<Vector>& apex) {
  double floor = std::numeric_limits<double>::infinity();
  for (const auto& s : apex) floor = std::min(floor, f(s));
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < inst.size(); ++x) {
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& a : inst.value(x)) top = std::max(top, f(a));
    if (top <= floor + inst.cone().epsilon()) out.push_back(x);
  }
  return out;
}

inline std::vector<std::string> ids_of(const Instance& inst, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(inst.id(i));
  sort_ids(out);
  return out;
}

}  // namespace detail

/// Q(f): decision points whose whole value lies, along f, below every A_C.
/// Uses inf over A_C of f = f(sigma(A)), valid for f in C* on simplicial cones.
inline std::vector<std::string> f_solution_set(const Instance& inst, const DualFunctional& f) {
  detail::require_dual_base_member(inst.cone(), f);
  return detail::ids_of(inst, detail::f_solution_indices(inst, f, detail::apexes(inst)));
}

namespace detail {

// Compositions of `total` into `parts` nonnegative integers, ordered so that
// consecutive entries differ by moving one unit between two slots.
inline void snake_compositions(int total, int parts, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int step = 0; step <= total; ++step) {
    const int k = total - step;
    prefix.push_back(k);
    const std::size_t first = out.size();
    snake_compositions(total - k, parts - 1, prefix, out);
    if (step % 2 == 1) std::reverse(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
    prefix.pop_back();
  }
}

}  // namespace detail

/// Uniform simplex grid of denominator N on the base {f in C* : f(e) = 1},
/// listed along a path where neighbours are adjacent grid nodes.
inline std::vector<DualFunctional> dual_base_grid(const Cone& cone, int resolution) {
  cone.require_simplicial("dual_base_grid");
  if (resolution <= 0) raise(ErrorCode::InvalidArgument, "grid resolution must be positive");
  std::vector<std::vector<int>> weights;
  std::vector<int> prefix;
  detail::snake_compositions(resolution, static_cast<int>(cone.dim()), prefix, weights);
  const auto base = cone.e_normalized();
  std::vector<DualFunctional> out;
  out.reserve(weights.size());
  for (const auto& mu : weights) {
    Vector c = Vector::Zero(static_cast<Eigen::Index>(cone.dim()));
    for (std::size_t j = 0; j < mu.size(); ++j)
      c += (static_cast<double>(mu[j]) / resolution) * base[j].coeffs;
    out.push_back({std::move(c)});
  }
  return out;
}

struct FunctionalSolutions {
  Vector coeffs;
  std::vector<std::string> members;
};

/// Union of Q(f) over a dual grid, compared with brute-force weak p-minimal
/// solutions. `max_jump` is the largest decision-space distance between the
/// solutions of consecutive grid functionals, reported only when every Q(f)
/// is a singleton.
struct PUnionReport {
  int resolution = 0;
  std::vector<std::string> union_members;
  std::vector<std::string> weak_p_members;
  std::vector<std::string> union_minus_weak_p;
  std::vector<std::string> weak_p_minus_union;
  std::size_t tie_count = 0;    // functionals with |Q(f)| > 1
  std::size_t empty_count = 0;  // functionals with Q(f) empty
  bool all_singleton = false;
  std::optional<double> max_jump;
  std::vector<FunctionalSolutions> path;

  bool union_included() const { return union_minus_weak_p.empty(); }
  bool union_equal() const { return union_minus_weak_p.empty() && weak_p_minus_union.empty(); }
};

inline PUnionReport weak_p_union(const Instance& inst, int resolution) {
  inst.cone().require_simplicial("weak_p_union");
  const auto grid = dual_base_grid(inst.cone(), resolution);
  const auto apex = detail::apexes(inst);

  std::vector<std::vector<std::size_t>> q(grid.size());
  parallel_for(grid.size(), [&](std::size_t k) { q[k] = detail::f_solution_indices(inst, grid[k], apex); });

  PUnionReport report;
  report.resolution = resolution;
  std::vector<char> in_union(inst.size(), 0);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    for (auto x : q[k]) in_union[x] = 1;
    if (q[k].size() > 1) ++report.tie_count;
    if (q[k].empty()) ++report.empty_count;
    report.path.push_back({grid[k].coeffs, detail::ids_of(inst, q[k])});
  }
  report.all_singleton = report.tie_count == 0 && report.empty_count == 0;
  if (report.all_singleton) {
    double jump = 0.0;
    for (std::size_t k = 1; k < grid.size(); ++k)
      jump = std::max(jump, distance(inst.coords(q[k - 1].front()), inst.coords(q[k].front())));
    report.max_jump = jump;
  }

  report.weak_p_members = solve_bruteforce(inst, Order::P, SolutionKind::WeakMinimal).members;
  for (std::size_t x = 0; x < inst.size(); ++x)
    if (in_union[x]) report.union_members.push_back(inst.id(x));
  sort_ids(report.union_members);
  std::set_difference(report.union_members.begin(), report.union_members.end(), report.weak_p_members.begin(),
                      report.weak_p_members.end(), std::back_inserter(report.union_minus_weak_p), natural_less);
  std::set_difference(report.weak_p_members.begin(), report.weak_p_members.end(), report.union_members.begin(),
                      report.union_members.end(), std::back_inserter(report.weak_p_minus_union), natural_less);
  return report;
}

enum class VopKind { Efficient, WeaklyEfficient };

/// Efficient / weakly efficient solutions of the single-valued problem
/// min f(x), checked pairwise from the definition.
inline SolutionReport vop_solve(const Instance& inst, VopKind kind) {
  if (!inst.single_valued()) raise(ErrorCode::NotSingleValued, "vector optimization needs singleton values");
  const auto& cone = inst.cone();
  const double eps = cone.epsilon();
  const bool weak = kind == VopKind::WeaklyEfficient;
  const std::size_t n = inst.size();
  std::vector<std::optional<std::size_t>> dominator(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Vector& fx = inst.value(x)[0];
    for (std::size_t y = 0; y < n; ++y) {
      const Vector d = inst.value(y)[0] - fx;
      const bool bad = weak ? membership(cone, d, Region::NegIntC)
                            : membership(cone, d, Region::NegC) && d.cwiseAbs().maxCoeff() > eps;
      if (bad) detail::keep_first_id(inst, dominator[x], y);
    }
  }
  return detail::assemble(inst, OrderKind(Order::L, weak),
                          weak ? SolutionKind::WeakMinimal : SolutionKind::Minimal, Method::BruteForce, dominator);
}

}  // namespace setopt
