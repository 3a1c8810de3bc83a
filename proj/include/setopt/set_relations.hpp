#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "setopt/cone.hpp"
#include "setopt/error.hpp"
#include "setopt/finite_set.hpp"

namespace setopt {

/// Set order families. L: lower set less, U: upper set less, H: comparison
/// through the upper Minkowski intersection A_C, P: H made reflexive by an
/// equality branch.
enum class Order { L, U, H, P };

inline const char* to_string(Order o) {
  switch (o) {
    case Order::L: return "l";
    case Order::U: return "u";
    case Order::H: return "h";
    case Order::P: return "p";
  }
  return "?";
}

/// An order family plus strictness. Strict forms use int C in place of C.
/// There is no strict H relation; the strict comparison through A_C is P.
struct OrderKind {
  Order tag = Order::L;
  bool strict = false;

  constexpr OrderKind() = default;
  constexpr OrderKind(Order t, bool s) : tag(t), strict(s) {
    if (t == Order::H && s) throw Error(ErrorCode::InvalidArgument, "the h relation has no strict form");
  }

  friend constexpr bool operator==(const OrderKind&, const OrderKind&) = default;
};

inline std::string to_string(OrderKind k) { return std::string(to_string(k.tag)) + (k.strict ? "-strict" : ""); }

namespace detail {

inline void require_pair_dims(const Cone& cone, const FiniteSet& a, const FiniteSet& b) {
  require_dim(cone, a, "left set");
  require_dim(cone, b, "right set");
}

// Some b in B lies in sigma(A) + C (or + int C).
inline bool apex_relation(const Cone& cone, const FiniteSet& a, const FiniteSet& b, Region region) {
  const Vector apex = sup_point(cone, a);
  return std::any_of(b.begin(), b.end(), [&](const Vector& q) { return membership(cone, q - apex, region); });
}

}  // namespace detail

/// Decides A <=^s B (or A <<^s B when kind.strict) by exhaustive scan.
inline bool relate(const Cone& cone, const FiniteSet& a, const FiniteSet& b, OrderKind kind) {
  detail::require_pair_dims(cone, a, b);
  const Region region = kind.strict ? Region::IntC : Region::C;
  switch (kind.tag) {
    case Order::L:
      // B subset of A + C
      return std::all_of(b.begin(), b.end(), [&](const Vector& q) {
        return std::any_of(a.begin(), a.end(), [&](const Vector& p) { return membership(cone, q - p, region); });
      });
    case Order::U:
      // A subset of B - C
      return std::all_of(a.begin(), a.end(), [&](const Vector& p) {
        return std::any_of(b.begin(), b.end(), [&](const Vector& q) { return membership(cone, q - p, region); });
      });
    case Order::H:
      return detail::apex_relation(cone, a, b, Region::C);
    case Order::P:
      cone.require_simplicial("the p relation");
      if (kind.strict) return detail::apex_relation(cone, a, b, Region::IntC);
      return same_points(a, b, cone.epsilon()) || detail::apex_relation(cone, a, b, Region::C);
  }
  return false;
}

enum class Extremal { Min, WMin, Max, WMax };

/// Minimal, weak minimal, maximal or weak maximal points of A. Never empty
/// for a finite A.
inline FiniteSet extremal_points(const Cone& cone, const FiniteSet& a, Extremal which) {
  require_dim(cone, a, "set");
  const double eps = cone.epsilon();
  std::vector<Vector> keep;
  for (const auto& p : a) {
    bool dominated = false;
    for (const auto& q : a) {
      // Min: (A - p) meets -C outside 0, i.e. p - q in C \ {0}. Max mirrors with q - p.
      const Vector d = (which == Extremal::Min || which == Extremal::WMin) ? Vector(p - q) : Vector(q - p);
      if (which == Extremal::Min || which == Extremal::Max) {
        dominated = membership(cone, d, Region::C) && !approx_equal(p, q, eps);
      } else {
        dominated = membership(cone, d, Region::IntC);
      }
      if (dominated) break;
    }
    if (!dominated) keep.push_back(p);
  }
  return FiniteSet(std::move(keep));
}

}  // namespace setopt
