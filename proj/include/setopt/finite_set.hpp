#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "setopt/error.hpp"

namespace setopt {

/// Points of the outcome space R^m and of the decision space R^d.
using Vector = Eigen::VectorXd;

/// Comparison tolerance used when a cone or set is built without an explicit one.
inline constexpr double kDefaultEpsilon = 1e-9;

/// True when every coordinate of `a` and `b` differs by at most `eps`.
inline bool approx_equal(const Vector& a, const Vector& b, double eps) {
  if (a.size() != b.size()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= eps;
}

inline bool lex_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

inline double distance(const Vector& a, const Vector& b) { return (a - b).norm(); }

inline bool all_finite(const Vector& v) { return v.allFinite(); }

/// A nonempty finite point set in R^m, deduplicated on construction.
///
/// Finite sets are automatically C-compact, C-closed, C-bounded and C-proper
/// for any pointed cone C, so every compactness side condition of the
/// scalarization and solution-set results holds for values of this type.
class FiniteSet {
 public:
  FiniteSet(std::initializer_list<Vector> points) : FiniteSet(std::vector<Vector>(points)) {}

  explicit FiniteSet(std::vector<Vector> points, double eps = kDefaultEpsilon) {
    if (points.empty()) raise(ErrorCode::InvalidArgument, "finite set must be nonempty");
    const auto m = points.front().size();
    if (m == 0) raise(ErrorCode::InvalidArgument, "points must have positive dimension");
    points_.reserve(points.size());
    for (auto& p : points) {
      if (p.size() != m) {
        raise(ErrorCode::DimensionMismatch, "finite set mixes dimensions " + std::to_string(m) +
                                                " and " + std::to_string(p.size()));
      }
      if (!all_finite(p)) raise(ErrorCode::InvalidArgument, "finite set contains a non-finite coordinate");
      const bool dup = std::any_of(points_.begin(), points_.end(),
                                   [&](const Vector& q) { return approx_equal(p, q, eps); });
      if (!dup) points_.push_back(std::move(p));
    }
  }

  std::size_t size() const noexcept { return points_.size(); }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(points_.front().size()); }
  const Vector& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Vector>& points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  FiniteSet translated(const Vector& shift) const {
    std::vector<Vector> out;
    out.reserve(points_.size());
    for (const auto& p : points_) out.push_back(p + shift);
    return FiniteSet(std::move(out));
  }

  FiniteSet scaled(double factor) const {
    std::vector<Vector> out;
    out.reserve(points_.size());
    for (const auto& p : points_) out.push_back(p * factor);
    return FiniteSet(std::move(out));
  }

  FiniteSet negated() const { return scaled(-1.0); }

 private:
  std::vector<Vector> points_;
};

/// Minkowski combination t*A + (1-t)*B = { t*a + (1-t)*b }. Only exact
/// duplicates are merged: near-equal points near t = 0 or 1 may sit on
/// opposite sides of a tolerance boundary.
inline FiniteSet combine(double t, const FiniteSet& a, const FiniteSet& b) {
  if (a.dim() != b.dim()) raise(ErrorCode::DimensionMismatch, "Minkowski combination of mismatched sets");
  std::vector<Vector> out;
  out.reserve(a.size() * b.size());
  for (const auto& p : a)
    for (const auto& q : b) out.push_back(t * p + (1.0 - t) * q);
  return FiniteSet(std::move(out), 0.0);
}

/// Set equality up to `eps` per coordinate.
inline bool same_points(const FiniteSet& a, const FiniteSet& b, double eps) {
  if (a.dim() != b.dim()) return false;
  auto covered = [eps](const FiniteSet& x, const FiniteSet& y) {
    return std::all_of(x.begin(), x.end(), [&](const Vector& p) {
      return std::any_of(y.begin(), y.end(), [&](const Vector& q) { return approx_equal(p, q, eps); });
    });
  };
  return covered(a, b) && covered(b, a);
}

}  // namespace setopt
