#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "setopt/cone.hpp"
#include "setopt/error.hpp"
#include "setopt/instance.hpp"
#include "setopt/interval.hpp"
#include "setopt/parallel.hpp"
#include "setopt/set_relations.hpp"

namespace setopt {

/// Generalized convexity hypotheses on F over K, each relative to an order:
/// SConvexlike: for all x1, x2 and t in (0,1) some x3 has F(x3) <= tF(x1) + (1-t)F(x2).
/// StrictSConvexlike: same with << and x1 != x2.
/// StrictQuasiSConvexlike: for x1 != x2 some x3 and some t in [0,1] give <<.
enum class Property { SConvexlike, StrictSConvexlike, StrictQuasiSConvexlike };

inline const char* to_string(Property p) {
  switch (p) {
    case Property::SConvexlike: return "sConvexlike";
    case Property::StrictSConvexlike: return "strictSConvexlike";
    case Property::StrictQuasiSConvexlike: return "strictQuasiSConvexlike";
  }
  return "?";
}

/// Gaps in a coverage sweep narrower than this are merged over. Strict
/// constraints shift interval endpoints by eps/|slope|, so coverage uses a
/// looser tolerance than pointwise comparisons.
inline constexpr double kCoverageTolerance = 1e-6;

namespace detail {

inline TInterval segment_interval(const Cone& cone, const Vector& a1, const Vector& a2, const Vector& a3,
                                  bool strict) {
  // f_j(t*a1 + (1-t)*a2 - a3) = t * f_j(a1 - a2) + f_j(a2 - a3)
  const auto gens = cone.dual_generators();
  std::vector<double> slopes(gens.size());
  std::vector<double> offsets(gens.size());
  const Vector d = a1 - a2;
  const Vector c = a2 - a3;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    slopes[j] = gens[j](d);
    offsets[j] = gens[j](c);
  }
  // Tighter than relate() on both sides, so a witness replays with margin
  // instead of landing on the tolerance boundary.
  const double eps = cone.epsilon();
  return affine_feasible(slopes, offsets, strict, strict ? 2.0 * eps : 0.5 * eps);
}

// Values of t in [0,1] where t*F1 + (1-t)*F2 equals F3 as a set.
inline std::vector<TInterval> equality_points(const Cone& cone, const FiniteSet& f1, const FiniteSet& f2,
                                              const FiniteSet& f3) {
  const double eps = cone.epsilon();
  std::vector<double> candidates{0.0, 1.0};
  const Vector& anchor = f3[0];
  for (const auto& a1 : f1) {
    for (const auto& a2 : f2) {
      const Vector d = a1 - a2;
      Eigen::Index k;
      if (d.cwiseAbs().maxCoeff(&k) <= eps) {
        if (approx_equal(a2, anchor, eps) && f1.size() == 1 && f2.size() == 1 && f3.size() == 1) return {kUnitInterval};
        continue;
      }
      const double t = (anchor[k] - a2[k]) / d[k];
      if (t >= 0.0 && t <= 1.0 && approx_equal(t * a1 + (1.0 - t) * a2, anchor, eps)) candidates.push_back(t);
    }
  }
  std::vector<TInterval> out;
  for (double t : candidates)
    if (same_points(combine(t, f1, f2), f3, eps)) out.push_back({t, t, false, false});
  return normalize(std::move(out));
}

}  // namespace detail

/// Exact set of t in [0,1] for which F3 relates to t*F1 + (1-t)*F2:
/// l: the combination lies in F3 + C (int C when strict);
/// u: F3 lies in the combination - C (- int C when strict);
/// p: some combination point lies in sigma(F3) + int C (strict), or in
///    sigma(F3) + C or equals F3 (non-strict).
/// Each constraint is affine in t, so every piece is an interval.
inline std::vector<TInterval> feasible_t_set(const Cone& cone, const FiniteSet& f1, const FiniteSet& f2,
                                             const FiniteSet& f3, Order order, bool strict) {
  require_dim(cone, f1, "first set");
  require_dim(cone, f2, "second set");
  require_dim(cone, f3, "third set");
  std::vector<TInterval> result{kUnitInterval};
  switch (order) {
    case Order::L:
      for (const auto& a1 : f1) {
        for (const auto& a2 : f2) {
          std::vector<TInterval> pieces;
          for (const auto& a3 : f3) pieces.push_back(detail::segment_interval(cone, a1, a2, a3, strict));
          result = intersect(result, normalize(std::move(pieces)));
          if (result.empty()) return result;
        }
      }
      return result;
    case Order::U:
      for (const auto& a3 : f3) {
        std::vector<TInterval> pieces;
        for (const auto& a1 : f1)
          for (const auto& a2 : f2) pieces.push_back(detail::segment_interval(cone, a1, a2, a3, strict));
        result = intersect(result, normalize(std::move(pieces)));
        if (result.empty()) return result;
      }
      return result;
    case Order::P: {
      const Vector apex = sup_point(cone, f3);
      std::vector<TInterval> pieces;
      for (const auto& a1 : f1)
        for (const auto& a2 : f2) pieces.push_back(detail::segment_interval(cone, a1, a2, apex, strict));
      auto out = normalize(std::move(pieces));
      if (!strict) out = unite(std::move(out), detail::equality_points(cone, f1, f2, f3));
      return out;
    }
    case Order::H:
      break;
  }
  raise(ErrorCode::InvalidArgument, "feasible_t_set supports the l, u and p orders");
}

struct TWitness {
  std::string x3;
  TInterval t;
};

/// Outcome for one pair (x1, x2). A passing pair carries the witnesses that
/// establish it; a failing pair carries the stretch of t left uncovered.
struct PairCertificate {
  std::string x1;
  std::string x2;
  bool holds = false;
  std::vector<TWitness> witnesses;
  std::optional<TInterval> uncovered;
};

struct ConvexlikeCertificate {
  Property property = Property::StrictQuasiSConvexlike;
  Order order = Order::L;
  std::vector<PairCertificate> pairs;

  bool holds() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const PairCertificate& p) { return p.holds; });
  }
  std::size_t failure_count() const {
    return static_cast<std::size_t>(
        std::count_if(pairs.begin(), pairs.end(), [](const PairCertificate& p) { return !p.holds; }));
  }
};

/// Parameter value used to replay a witness interval: its midpoint, which is
/// interior whenever the interval has positive length.
inline double replay_point(const TInterval& t) { return t.lo == t.hi ? t.lo : t.midpoint(); }

/// True when F(x3) relates to t*F(x1) + (1-t)*F(x2) under the given order.
inline bool combination_relates(const Instance& inst, std::size_t x1, std::size_t x2, std::size_t x3, double t,
                                OrderKind kind) {
  return relate(inst.cone(), inst.value(x3), combine(t, inst.value(x1), inst.value(x2)), kind);
}

inline ConvexlikeCertificate certify(const Instance& inst, Property property, Order order) {
  if (order == Order::H) raise(ErrorCode::InvalidArgument, "convexlikeness is certified for the l, u and p orders");
  if (order == Order::P) inst.cone().require_simplicial("p-type convexlikeness");
  const auto& cone = inst.cone();
  const bool strict = property != Property::SConvexlike;
  const std::size_t n = inst.size();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = property == Property::SConvexlike ? i : i + 1; j < n; ++j) pairs.emplace_back(i, j);

  ConvexlikeCertificate cert;
  cert.property = property;
  cert.order = order;
  cert.pairs.resize(pairs.size());
  parallel_for(
      pairs.size(),
      [&](std::size_t k) {
        const auto [i, j] = pairs[k];
        PairCertificate pc{inst.id(i), inst.id(j), false, {}, std::nullopt};
        if (property == Property::StrictQuasiSConvexlike) {
          for (std::size_t x3 = 0; x3 < n && !pc.holds; ++x3) {
            const auto set = feasible_t_set(cone, inst.value(i), inst.value(j), inst.value(x3), order, true);
            if (!set.empty()) {
              pc.holds = true;
              pc.witnesses.push_back({inst.id(x3), set.front()});
            }
          }
          if (!pc.holds) pc.uncovered = kUnitInterval;
        } else {
          std::vector<TInterval> all;
          for (std::size_t x3 = 0; x3 < n; ++x3) {
            for (const auto& piece : feasible_t_set(cone, inst.value(i), inst.value(j), inst.value(x3), order, strict)) {
              pc.witnesses.push_back({inst.id(x3), piece});
              all.push_back(piece);
            }
          }
          pc.uncovered = first_gap_in_open_unit(all, kCoverageTolerance);
          pc.holds = !pc.uncovered.has_value();
        }
        cert.pairs[k] = std::move(pc);
      },
      8);
  return cert;
}

/// Replays a certificate with relate(): every witness must hold at its
/// replay point, and for every failing pair no x3 may satisfy the relation at
/// 101 equispaced t (over [0,1] or over the reported gap).
inline bool replay_certificate(const Instance& inst, const ConvexlikeCertificate& cert) {
  const OrderKind kind(cert.order, cert.property != Property::SConvexlike);
  for (const auto& pc : cert.pairs) {
    const auto i = inst.index_of(pc.x1);
    const auto j = inst.index_of(pc.x2);
    for (const auto& w : pc.witnesses)
      if (!combination_relates(inst, i, j, inst.index_of(w.x3), replay_point(w.t), kind)) return false;
    if (pc.holds) continue;
    if (!pc.uncovered) return false;
    const TInterval gap = *pc.uncovered;
    for (int s = 0; s <= 100; ++s) {
      const double u = s / 100.0;
      // stay inside open gaps: sample their interior only
      const double t = gap == kUnitInterval ? u : gap.lo + (gap.hi - gap.lo) * (0.005 + 0.99 * u);
      for (std::size_t x3 = 0; x3 < inst.size(); ++x3)
        if (combination_relates(inst, i, j, x3, t, kind)) return false;
    }
  }
  return true;
}

struct ScalarPairWitness {
  std::string x1;
  std::string x2;
  std::optional<std::string> x3;
  double lambda = 0.0;

  bool holds() const { return x3.has_value(); }
};

/// Strict quasi convexlikeness of a scalar function on a finite set: for each
/// pair some x3 has v(x3) < lambda*v(x1) + (1-lambda)*v(x2). Putting lambda at
/// the endpoint with the larger value, this reduces to min v < max(v1, v2).
inline std::vector<ScalarPairWitness> scalar_strict_quasi_convexlike(
    const std::vector<std::pair<std::string, double>>& values, double eps = kDefaultEpsilon) {
  std::vector<ScalarPairWitness> out;
  if (values.empty()) return out;
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k].second < values[best].second) best = k;
  const double low = values[best].second;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const double v1 = values[i].second;
      const double v2 = values[j].second;
      ScalarPairWitness w{values[i].first, values[j].first, std::nullopt, v1 >= v2 ? 1.0 : 0.0};
      if (low < std::max(v1, v2) - eps) w.x3 = values[best].first;
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace setopt
