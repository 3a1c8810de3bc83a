#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "setopt/cone.hpp"
#include "setopt/error.hpp"
#include "setopt/finite_set.hpp"

namespace setopt {

/// Orders ids so that embedded numbers compare by value: x2 < x10.
inline bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      auto na = a.substr(i, ie - i);
      auto nb = b.substr(j, je - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

inline void sort_ids(std::vector<std::string>& ids) {
  std::sort(ids.begin(), ids.end(), [](const std::string& x, const std::string& y) { return natural_less(x, y); });
}

struct DecisionPoint {
  std::string id;
  Vector coords;
};

/// Which generator produced an instance, echoed into every report.
struct Provenance {
  std::string generator;
  std::uint64_t seed = 0;
  std::string cone_kind;
  std::vector<std::pair<std::string, double>> params;
};

/// A finite set optimization problem: decision points K with a set-valued
/// objective F(x), an ordering cone, and optional star-center metadata.
class Instance {
 public:
  Instance(Cone cone, std::vector<DecisionPoint> points, std::vector<FiniteSet> values,
           std::optional<std::string> star_center = std::nullopt)
      : cone_(std::move(cone)), points_(std::move(points)), values_(std::move(values)) {
    if (points_.empty()) raise(ErrorCode::ValidationError, "instance has no decision points");
    if (values_.size() != points_.size()) raise(ErrorCode::ValidationError, "points and values differ in count");
    const auto d = points_.front().coords.size();
    for (std::size_t i = 0; i < points_.size(); ++i) {
      const auto& p = points_[i];
      if (p.id.empty()) raise(ErrorCode::ValidationError, "decision point " + std::to_string(i) + " has an empty id");
      if (p.coords.size() != d || d == 0)
        raise(ErrorCode::ValidationError, "decision point '" + p.id + "' has inconsistent dimension");
      if (!all_finite(p.coords)) raise(ErrorCode::ValidationError, "decision point '" + p.id + "' is not finite");
      if (!index_.emplace(p.id, i).second) raise(ErrorCode::ValidationError, "duplicate id '" + p.id + "'");
      if (values_[i].dim() != cone_.dim())
        raise(ErrorCode::ValidationError, "value of '" + p.id + "' has dimension " +
                                              std::to_string(values_[i].dim()) + ", cone has " +
                                              std::to_string(cone_.dim()));
      for (std::size_t k = 0; k < i; ++k) {
        if (approx_equal(points_[k].coords, p.coords, cone_.epsilon()))
          raise(ErrorCode::ValidationError, "decision points '" + points_[k].id + "' and '" + p.id + "' coincide");
      }
    }
    if (star_center) set_star_center(*star_center);
  }

  const Cone& cone() const noexcept { return cone_; }
  std::size_t size() const noexcept { return points_.size(); }
  std::size_t decision_dim() const noexcept { return static_cast<std::size_t>(points_.front().coords.size()); }
  const std::vector<DecisionPoint>& points() const noexcept { return points_; }
  const std::string& id(std::size_t i) const { return points_[i].id; }
  const Vector& coords(std::size_t i) const { return points_[i].coords; }
  const FiniteSet& value(std::size_t i) const { return values_[i]; }
  const FiniteSet& value(std::string_view id) const { return values_[index_of(id)]; }
  const std::vector<FiniteSet>& values() const noexcept { return values_; }

  std::size_t index_of(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) raise(ErrorCode::InvalidArgument, "unknown decision point '" + std::string(id) + "'");
    return it->second;
  }
  bool contains(std::string_view id) const { return index_.count(std::string(id)) != 0; }

  const std::optional<std::string>& star_center() const noexcept { return star_center_; }
  void set_star_center(const std::string& id) {
    if (!contains(id)) raise(ErrorCode::ValidationError, "star center '" + id + "' is not a decision point");
    star_center_ = id;
  }

  std::optional<int> lambda_steps() const noexcept { return lambda_steps_; }
  void set_lambda_steps(int n) {
    if (n <= 0) raise(ErrorCode::ValidationError, "lambda_steps must be positive");
    lambda_steps_ = n;
  }

  std::optional<double> spacing() const noexcept { return spacing_; }
  void set_spacing(double delta) {
    if (!(delta > 0.0)) raise(ErrorCode::ValidationError, "spacing must be positive");
    spacing_ = delta;
  }

  const std::optional<Provenance>& provenance() const noexcept { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = std::move(p); }

  /// Same instance under a different comparison tolerance.
  Instance with_epsilon(double eps) const {
    Instance copy = *this;
    copy.cone_ = cone_.with_epsilon(eps);
    return copy;
  }

  bool single_valued() const {
    return std::all_of(values_.begin(), values_.end(), [](const FiniteSet& s) { return s.size() == 1; });
  }

 private:
  Cone cone_;
  std::vector<DecisionPoint> points_;
  std::vector<FiniteSet> values_;
  std::unordered_map<std::string, std::size_t> index_;
  std::optional<std::string> star_center_;
  std::optional<int> lambda_steps_;
  std::optional<double> spacing_;
  std::optional<Provenance> provenance_;
};

}  // namespace setopt
