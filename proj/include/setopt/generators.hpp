#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "setopt/cone.hpp"
#include "setopt/error.hpp"
#include "setopt/instance.hpp"

namespace setopt {

enum class ConeKind { Orthant, Simplicial, Polyhedral };

inline const char* to_string(ConeKind k) {
  switch (k) {
    case ConeKind::Orthant: return "orthant";
    case ConeKind::Simplicial: return "simplicial";
    case ConeKind::Polyhedral: return "polyhedral";
  }
  return "?";
}

inline ConeKind parse_cone_kind(std::string_view s) {
  if (s == "orthant") return ConeKind::Orthant;
  if (s == "simplicial") return ConeKind::Simplicial;
  if (s == "polyhedral") return ConeKind::Polyhedral;
  raise(ErrorCode::BadParams, "unknown cone kind '" + std::string(s) + "'");
}

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Vector random_int_vector(Rng& rng, std::size_t m, int lo, int hi) {
  Vector v(static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) v[static_cast<Eigen::Index>(i)] = uniform_int(rng, lo, hi);
  return v;
}

/// Random cone with small integer dual generators. e is the all-ones vector
/// (every row has f_j(e) >= 1); w is a random positive integer vector that is
/// also interior, falling back to e.
inline Cone random_cone(Rng& rng, std::size_t m, ConeKind kind) {
  const Vector ones = Vector::Ones(static_cast<Eigen::Index>(m));
  if (kind == ConeKind::Orthant) return orthant(m);
  const std::size_t rows = kind == ConeKind::Simplicial ? m : m + static_cast<std::size_t>(uniform_int(rng, 1, 2));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<DualFunctional> gens;
    while (gens.size() < rows) {
      Vector f = random_int_vector(rng, m, -1, 3);
      if (f.sum() >= 1.0) gens.push_back({f});
    }
    Vector w = random_int_vector(rng, m, 1, 3);
    if (!std::all_of(gens.begin(), gens.end(), [&](const DualFunctional& f) { return f(w) >= 1.0; })) w = ones;
    try {
      return build_cone(std::move(gens), ones, w);
    } catch (const Error&) {
      // rank deficient draw; try again
    }
  }
  raise(ErrorCode::BadParams, "could not draw a pointed cone");
}

/// Small integer point of C (int C when `interior`), found by rejection.
inline Vector random_cone_point(Rng& rng, const Cone& cone, int bound, bool interior) {
  const Region region = interior ? Region::IntC : Region::C;
  for (int attempt = 0; attempt < 200; ++attempt) {
    Vector v = random_int_vector(rng, cone.dim(), -bound, bound);
    if (membership(cone, v, region)) return v;
  }
  return interior ? cone.e() : Vector(Vector::Zero(static_cast<Eigen::Index>(cone.dim())));
}

struct GenParams {
  std::size_t m = 2;
  std::size_t points = 5;        // per axis for grid families, total otherwise
  std::size_t decision_dim = 1;  // 1 or 2
  std::optional<std::size_t> set_size;
  ConeKind cone = ConeKind::Orthant;
};

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"quad-l", "apex-u", "singleton-p", "random-sets", "random-singleton",
                                              "line-1d"};
  return names;
}

namespace detail {

inline void check_params(const std::string& family, const GenParams& p, std::size_t total) {
  if (p.m != 2 && p.m != 3) raise(ErrorCode::BadParams, "m must be 2 or 3");
  if (p.decision_dim != 1 && p.decision_dim != 2) raise(ErrorCode::BadParams, "decision_dim must be 1 or 2");
  if (p.points == 0) raise(ErrorCode::BadParams, "points must be positive");
  if (total > 512) raise(ErrorCode::BadParams, family + ": |K| = " + std::to_string(total) + " exceeds 512");
  if (p.set_size && (*p.set_size == 0 || *p.set_size > 32)) raise(ErrorCode::BadParams, "set_size must lie in [1, 32]");
}

inline std::vector<DecisionPoint> grid_points(std::size_t per_axis, std::size_t d, double step) {
  std::vector<DecisionPoint> out;
  std::size_t k = 0;
  if (d == 1) {
    for (std::size_t i = 0; i < per_axis; ++i) out.push_back({"x" + std::to_string(++k), Vector{{i * step}}});
  } else {
    for (std::size_t i = 0; i < per_axis; ++i)
      for (std::size_t j = 0; j < per_axis; ++j)
        out.push_back({"x" + std::to_string(++k), Vector{{i * step, j * step}}});
  }
  return out;
}

inline std::vector<DecisionPoint> scattered_points(Rng& rng, std::size_t n, std::size_t d) {
  std::vector<DecisionPoint> out;
  const int hi = static_cast<int>(4 * n);
  while (out.size() < n) {
    Vector x = random_int_vector(rng, d, 0, hi);
    const bool fresh = std::none_of(out.begin(), out.end(), [&](const DecisionPoint& p) { return p.coords == x; });
    if (fresh) out.push_back({"x" + std::to_string(out.size() + 1), x});
  }
  return out;
}

inline std::size_t middle_index(std::size_t per_axis, std::size_t d) {
  const std::size_t mid = per_axis / 2;
  return d == 1 ? mid : mid * per_axis + mid;
}

}  // namespace detail

/// Deterministic instance generator. Families and the hypotheses they aim at
/// (certification still has to be run):
///   quad-l            F(x) = base + q(x)(alpha*e + u_x) + S, q(x) = |x - c|^2,
///                     u_x in C, S a shared shape; strictly quasi l-convexlike.
///   apex-u            F(x) = {a0(x)} u {a0(x) - c_i}, c_i in C, a0 as above;
///                     -C-convex values, strictly quasi u-convexlike.
///   singleton-p       quad-l with S = {0} on a simplicial cone; for the p order.
///   random-sets       scattered K, random integer sets. No hypotheses.
///   random-singleton  scattered K, random integer singletons.
///   line-1d           grid on [0,1], F(x) = {(x, 1 - x)} on R^2_+.
inline Instance generate(const std::string& family, const GenParams& p, std::uint64_t seed) {
  Rng rng(seed);
  const bool singleton = family == "singleton-p" || family == "random-singleton" || family == "line-1d";
  if (singleton && p.set_size && *p.set_size != 1) raise(ErrorCode::BadParams, family + " has singleton values");
  const std::size_t set_size = singleton ? 1 : p.set_size.value_or(3);
  const bool grid = family == "quad-l" || family == "apex-u" || family == "singleton-p" || family == "line-1d";
  const std::size_t total = grid && p.decision_dim == 2 ? p.points * p.points : p.points;
  detail::check_params(family, p, total);

  Provenance prov{family, seed, to_string(p.cone),
                  {{"m", static_cast<double>(p.m)},
                   {"points", static_cast<double>(p.points)},
                   {"decision_dim", static_cast<double>(p.decision_dim)},
                   {"set_size", static_cast<double>(set_size)}}};

  if (family == "line-1d") {
    if (p.m != 2 || p.cone != ConeKind::Orthant || p.decision_dim != 1)
      raise(ErrorCode::BadParams, "line-1d lives on R^2_+ with a 1-D grid");
    if (p.points < 2) raise(ErrorCode::BadParams, "line-1d needs at least 2 points");
    const double step = 1.0 / static_cast<double>(p.points - 1);
    auto pts = detail::grid_points(p.points, 1, step);
    pts.back().coords[0] = 1.0;
    std::vector<FiniteSet> values;
    for (const auto& pt : pts) values.push_back(FiniteSet{Vector{{pt.coords[0], 1.0 - pt.coords[0]}}});
    Instance inst(orthant(2), std::move(pts), std::move(values), "x1");
    inst.set_spacing(step);
    inst.set_provenance(std::move(prov));
    return inst;
  }

  if (family == "quad-l" || family == "apex-u" || family == "singleton-p") {
    if (family == "singleton-p" && p.cone == ConeKind::Polyhedral)
      raise(ErrorCode::BadParams, "singleton-p needs a simplicial cone");
    const Cone cone = random_cone(rng, p.m, p.cone);
    auto pts = detail::grid_points(p.points, p.decision_dim, 1.0);
    const std::size_t c = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(pts.size()) - 1));
    const double alpha = uniform_int(rng, 1, 2);
    const Vector base = random_int_vector(rng, p.m, -3, 3);
    std::vector<Vector> shape{Vector::Zero(static_cast<Eigen::Index>(p.m))};
    if (family == "quad-l")
      while (shape.size() < set_size) shape.push_back(random_int_vector(rng, p.m, -3, 3));

    std::vector<FiniteSet> values;
    for (const auto& pt : pts) {
      const double q = (pt.coords - pts[c].coords).squaredNorm();
      const Vector apex = base + q * (alpha * cone.e() + random_cone_point(rng, cone, 2, false));
      std::vector<Vector> members;
      if (family == "apex-u") {
        members.push_back(apex);
        for (std::size_t i = 1; i < set_size; ++i) members.push_back(apex - random_cone_point(rng, cone, 3, true));
      } else {
        for (const auto& s : shape) members.push_back(apex + s);
      }
      values.emplace_back(std::move(members));
    }
    const std::string center = pts[detail::middle_index(p.points, p.decision_dim)].id;
    Instance inst(cone, std::move(pts), std::move(values), center);
    inst.set_spacing(1.0);
    inst.set_provenance(std::move(prov));
    return inst;
  }

  if (family == "random-sets" || family == "random-singleton") {
    const Cone cone = random_cone(rng, p.m, p.cone);
    auto pts = detail::scattered_points(rng, p.points, p.decision_dim);
    std::vector<FiniteSet> values;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto k = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(set_size)));
      std::vector<Vector> members;
      for (std::size_t j = 0; j < k; ++j) members.push_back(random_int_vector(rng, p.m, -4, 4));
      values.emplace_back(std::move(members));
    }
    Instance inst(cone, std::move(pts), std::move(values));
    inst.set_provenance(std::move(prov));
    return inst;
  }

  raise(ErrorCode::BadParams, "unknown family '" + family + "'");
}

/// True when every value has a top point a0 with A within a0 - C, the shape
/// produced by the apex family.
inline bool has_apex_values(const Instance& inst) {
  const auto& cone = inst.cone();
  for (const auto& value : inst.values()) {
    const bool top = std::any_of(value.begin(), value.end(), [&](const Vector& a0) {
      return std::all_of(value.begin(), value.end(),
                         [&](const Vector& a) { return membership(cone, a0 - a, Region::C); });
    });
    if (!top) return false;
  }
  return true;
}

}  // namespace setopt
