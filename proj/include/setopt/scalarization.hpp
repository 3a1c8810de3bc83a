#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>

#include "setopt/cone.hpp"
#include "setopt/error.hpp"
#include "setopt/finite_set.hpp"
#include "setopt/set_relations.hpp"

namespace setopt {

/// Value of a scalarizing functional together with the points attaining it.
///
/// For the point functionals only `witness_inner` is set: the index of the
/// set point attaining the min. For the set liftings `witness_outer` is the
/// index attaining the outer sup (a point of B for sup_phi_l, a point of A
/// for sup_phi_u) and `witness_inner` the inner argmin for that point.
struct ScalarResult {
  double value = 0.0;
  std::optional<std::size_t> witness_outer;
  std::size_t witness_inner = 0;
};

namespace detail {

inline double max_level(std::span<const DualFunctional> gens, const Vector& v) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& f : gens) best = std::max(best, f(v));
  return best;
}

}  // namespace detail

/// Lower-type Gerstewitz functional of A at y: the smallest t with
/// y + t*e in A + C. Closed form min_a max_j fhat_j(a - y) with fhat_j the
/// generators normalized at e.
///
/// The orientation is y + t*e, not y in t*e + A + C: the latter t-set is
/// unbounded below for e in int C. With this orientation phi_l < 0 exactly
/// when y lies in A + int C, and phi_l is monotone in A along C.
inline ScalarResult phi_l(const Cone& cone, const FiniteSet& a, const Vector& y) {
  require_dim(cone, a, "set");
  require_dim(cone, y, "point");
  ScalarResult out{std::numeric_limits<double>::infinity(), std::nullopt, 0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double v = detail::max_level(cone.e_normalized(), a[i] - y);
    if (v < out.value) {
      out.value = v;
      out.witness_inner = i;
    }
  }
  return out;
}

/// Upper-type functional of B at y: the smallest t with y in t*w + B - C,
/// i.e. min_b max_j ghat_j(y - b) with ghat_j normalized at w.
inline ScalarResult phi_u(const Cone& cone, const FiniteSet& b, const Vector& y) {
  require_dim(cone, b, "set");
  require_dim(cone, y, "point");
  ScalarResult out{std::numeric_limits<double>::infinity(), std::nullopt, 0};
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double v = detail::max_level(cone.w_normalized(), y - b[i]);
    if (v < out.value) {
      out.value = v;
      out.witness_inner = i;
    }
  }
  return out;
}

/// sup over b in B of phi_l(A, b). Negative exactly when A <<^l B.
inline ScalarResult sup_phi_l(const Cone& cone, const FiniteSet& a, const FiniteSet& b) {
  require_dim(cone, b, "right set");
  ScalarResult out{-std::numeric_limits<double>::infinity(), std::nullopt, 0};
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto r = phi_l(cone, a, b[i]);
    if (r.value > out.value) out = {r.value, i, r.witness_inner};
  }
  return out;
}

/// sup over a in A of phi_u(B, a). Negative exactly when A <<^u B.
inline ScalarResult sup_phi_u(const Cone& cone, const FiniteSet& a, const FiniteSet& b) {
  require_dim(cone, a, "left set");
  ScalarResult out{-std::numeric_limits<double>::infinity(), std::nullopt, 0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto r = phi_u(cone, b, a[i]);
    if (r.value > out.value) out = {r.value, i, r.witness_inner};
  }
  return out;
}

/// Threshold of the monotone predicate t -> [y + t*e in S + C] (Order::L) or
/// t -> [y in t*w + S - C] (Order::U), found by bisection using nothing but
/// exact cone membership. Serves as an independent check of the closed forms.
inline double bisection_oracle(const Cone& cone, const FiniteSet& s, const Vector& y, Order mode) {
  require_dim(cone, s, "set");
  require_dim(cone, y, "point");
  if (mode != Order::L && mode != Order::U)
    raise(ErrorCode::InvalidArgument, "bisection oracle supports the l and u modes only");

  const Vector& dir = mode == Order::L ? cone.e() : cone.w();
  auto holds = [&](double t) {
    return std::any_of(s.begin(), s.end(), [&](const Vector& p) {
      const Vector v = mode == Order::L ? Vector(y + t * dir - p) : Vector(t * dir + p - y);
      return membership(cone, v, Region::C, 0.0);
    });
  };

  // Bracket from coordinate bounds: |f(p - y)| <= |f|_1 * |p - y|_inf.
  double radius = 0.0;
  for (const auto& p : s) radius = std::max(radius, (p - y).cwiseAbs().maxCoeff());
  double reach = 0.0;
  for (const auto& f : cone.dual_generators()) reach = std::max(reach, f.coeffs.lpNorm<1>() / f(dir));
  const double bound = 1.0 + 2.0 * radius * reach;

  double lo = -bound;
  double hi = bound;
  if (holds(lo) || !holds(hi)) raise(ErrorCode::BracketFailure, "membership predicate is not monotone on the bracket");
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (holds(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Position of y relative to the level r of phi_u(B, .), computed twice: from
/// the functional value and from direct membership in r*w + B - int C and
/// r*w + (B - C). For finite B the closure of B - C is B - C itself.
struct LevelSetClass {
  double r = 0.0;
  double value = 0.0;
  bool below = false;
  bool at_most = false;
  bool at_least = false;
  bool above = false;
  bool on_boundary = false;
  bool geometric_below = false;
  bool geometric_at_most = false;
  bool geometric_at_least = false;
  bool geometric_above = false;
  bool geometric_on_boundary = false;

  bool routes_agree() const {
    return below == geometric_below && at_most == geometric_at_most && at_least == geometric_at_least &&
           above == geometric_above && on_boundary == geometric_on_boundary;
  }

  enum class Relation { Below, OnBoundary, Above };
  Relation relation() const {
    if (below) return Relation::Below;
    if (above) return Relation::Above;
    return Relation::OnBoundary;
  }
};

inline LevelSetClass classify_level(const Cone& cone, const FiniteSet& b, const Vector& y, double r) {
  const double eps = cone.epsilon();
  LevelSetClass out;
  out.r = r;
  out.value = phi_u(cone, b, y).value;
  out.below = out.value < r - eps;
  out.at_most = out.value <= r + eps;
  out.at_least = !out.below;
  out.above = !out.at_most;
  out.on_boundary = out.at_most && out.at_least;

  bool open = false;
  bool closed = false;
  for (const auto& q : b) {
    const Vector v = r * cone.w() + q - y;
    open = open || membership(cone, v, Region::IntC);
    closed = closed || membership(cone, v, Region::C);
  }
  out.geometric_below = open;
  out.geometric_at_most = closed;
  out.geometric_at_least = !open;
  out.geometric_above = !closed;
  out.geometric_on_boundary = closed && !open;
  return out;
}

}  // namespace setopt
