#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "setopt/error.hpp"
#include "setopt/finite_set.hpp"

namespace setopt {

/// Linear functional f(y) = <coeffs, y>.
struct DualFunctional {
  Vector coeffs;

  double operator()(const Vector& y) const { return coeffs.dot(y); }
};

enum class Region { C, IntC, NegC, NegIntC };

/// Polyhedral ordering cone C = { y : f_j(y) >= 0 for all j } given by its
/// dual description, together with two interior directions e and w.
///
/// Build through build_cone(); a constructed Cone is always pointed, has e and
/// w in its interior, and caches the generators rescaled so that f_j(e) = 1
/// and f_j(w) = 1.
class Cone {
 public:
  std::size_t dim() const noexcept { return dim_; }
  std::span<const DualFunctional> dual_generators() const noexcept { return gens_; }
  std::span<const DualFunctional> e_normalized() const noexcept { return e_normalized_; }
  std::span<const DualFunctional> w_normalized() const noexcept { return w_normalized_; }
  const Vector& e() const noexcept { return e_; }
  const Vector& w() const noexcept { return w_; }
  bool simplicial() const noexcept { return simplicial_; }
  double epsilon() const noexcept { return eps_; }

  /// Same cone, different comparison tolerance.
  Cone with_epsilon(double eps) const {
    Cone copy = *this;
    copy.eps_ = eps;
    return copy;
  }

  /// Coordinates mu of `f` in the basis of the dual generators, f = sum mu_j f_j.
  Vector dual_coordinates(const Vector& f) const {
    require_simplicial("dual_coordinates");
    if (static_cast<std::size_t>(f.size()) != dim_) raise(ErrorCode::DimensionMismatch, "functional dimension");
    return inverse_.transpose() * f;
  }

  /// Solves f_j(y) = rhs_j for the m independent generators.
  Vector solve_levels(const Vector& rhs) const {
    require_simplicial("solve_levels");
    return inverse_ * rhs;
  }

  void require_simplicial(const char* what) const {
    if (!simplicial_) raise(ErrorCode::NotSimplicial, std::string(what) + " needs a simplicial cone");
  }

 private:
  friend Cone build_cone(std::vector<DualFunctional>, Vector, Vector, double);

  std::size_t dim_ = 0;
  std::vector<DualFunctional> gens_;
  std::vector<DualFunctional> e_normalized_;
  std::vector<DualFunctional> w_normalized_;
  Vector e_;
  Vector w_;
  Eigen::MatrixXd inverse_;  // inverse of the generator matrix, simplicial cones only
  bool simplicial_ = false;
  double eps_ = kDefaultEpsilon;
};

inline Cone build_cone(std::vector<DualFunctional> dual_generators, Vector e, Vector w,
                       double eps = kDefaultEpsilon) {
  if (dual_generators.empty()) raise(ErrorCode::EmptyDescription, "cone has no dual generators");
  const auto m = static_cast<std::size_t>(e.size());
  if (m == 0) raise(ErrorCode::DimensionMismatch, "interior direction e is empty");
  if (static_cast<std::size_t>(w.size()) != m)
    raise(ErrorCode::DimensionMismatch, "w has dimension " + std::to_string(w.size()) + ", expected " +
                                            std::to_string(m));
  if (!all_finite(e) || !all_finite(w)) raise(ErrorCode::InvalidArgument, "e and w must be finite");
  for (std::size_t j = 0; j < dual_generators.size(); ++j) {
    const auto& f = dual_generators[j].coeffs;
    if (static_cast<std::size_t>(f.size()) != m)
      raise(ErrorCode::DimensionMismatch, "dual generator " + std::to_string(j) + " has dimension " +
                                              std::to_string(f.size()) + ", expected " + std::to_string(m));
    if (!all_finite(f)) raise(ErrorCode::InvalidArgument, "dual generator " + std::to_string(j) + " is not finite");
  }
  for (std::size_t j = 0; j < dual_generators.size(); ++j) {
    const auto& f = dual_generators[j];
    if (f(e) <= eps) raise(ErrorCode::NotInterior, "f_" + std::to_string(j) + "(e) = " + std::to_string(f(e)));
    if (f(w) <= eps) raise(ErrorCode::NotInterior, "f_" + std::to_string(j) + "(w) = " + std::to_string(f(w)));
  }

  Eigen::MatrixXd rows(static_cast<Eigen::Index>(dual_generators.size()), static_cast<Eigen::Index>(m));
  for (std::size_t j = 0; j < dual_generators.size(); ++j) rows.row(static_cast<Eigen::Index>(j)) = dual_generators[j].coeffs;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(rows);
  lu.setThreshold(1e-12);
  if (static_cast<std::size_t>(lu.rank()) < m)
    raise(ErrorCode::NotPointed, "dual generators span a space of dimension " + std::to_string(lu.rank()) +
                                     " < " + std::to_string(m));

  Cone cone;
  cone.dim_ = m;
  cone.eps_ = eps;
  cone.simplicial_ = dual_generators.size() == m;
  if (cone.simplicial_) cone.inverse_ = rows.inverse();
  for (const auto& f : dual_generators) {
    cone.e_normalized_.push_back({f.coeffs / f(e)});
    cone.w_normalized_.push_back({f.coeffs / f(w)});
  }
  cone.gens_ = std::move(dual_generators);
  cone.e_ = std::move(e);
  cone.w_ = std::move(w);
  return cone;
}

/// Nonnegative orthant R^m_+ with e = w = (1, ..., 1).
inline Cone orthant(std::size_t m, double eps = kDefaultEpsilon) {
  std::vector<DualFunctional> gens;
  for (std::size_t j = 0; j < m; ++j) gens.push_back({Vector::Unit(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(j))});
  return build_cone(std::move(gens), Vector::Ones(static_cast<Eigen::Index>(m)),
                    Vector::Ones(static_cast<Eigen::Index>(m)), eps);
}

inline void require_dim(const Cone& cone, const Vector& y, const char* what) {
  if (static_cast<std::size_t>(y.size()) != cone.dim())
    raise(ErrorCode::DimensionMismatch, std::string(what) + " has dimension " + std::to_string(y.size()) +
                                            ", cone has " + std::to_string(cone.dim()));
}

inline void require_dim(const Cone& cone, const FiniteSet& s, const char* what) {
  if (s.dim() != cone.dim())
    raise(ErrorCode::DimensionMismatch, std::string(what) + " has dimension " + std::to_string(s.dim()) +
                                            ", cone has " + std::to_string(cone.dim()));
}

/// Membership of y in C, int C, -C or -int C, with an explicit tolerance:
/// C means f_j(y) >= -tol for all j, int C means f_j(y) > tol for all j.
inline bool membership(const Cone& cone, const Vector& y, Region region, double tol) {
  require_dim(cone, y, "point");
  const double sign = (region == Region::NegC || region == Region::NegIntC) ? -1.0 : 1.0;
  const bool interior = region == Region::IntC || region == Region::NegIntC;
  for (const auto& f : cone.dual_generators()) {
    const double v = sign * f(y);
    if (interior ? !(v > tol) : !(v >= -tol)) return false;
  }
  return true;
}

inline bool membership(const Cone& cone, const Vector& y, Region region) {
  return membership(cone, y, region, cone.epsilon());
}

/// Apex sigma(A) of A_C = intersection of (a + C) over a in A, so that
/// A_C = sigma(A) + C. Defined for simplicial cones only.
inline Vector sup_point(const Cone& cone, const FiniteSet& a) {
  cone.require_simplicial("sup_point");
  require_dim(cone, a, "set");
  const auto m = static_cast<Eigen::Index>(cone.dim());
  Vector levels = Vector::Constant(m, -std::numeric_limits<double>::infinity());
  const auto gens = cone.dual_generators();
  for (const auto& p : a)
    for (Eigen::Index j = 0; j < m; ++j) levels[j] = std::max(levels[j], gens[static_cast<std::size_t>(j)](p));
  return cone.solve_levels(levels);
}

}  // namespace setopt
