#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "setopt/error.hpp"
#include "setopt/instance.hpp"
#include "setopt/parallel.hpp"
#include "setopt/scalarization.hpp"
#include "setopt/solution_sets.hpp"

namespace setopt {

/// Decision points of an instance viewed as a delta-grid with a star center.
/// Convex combinations are snapped to the nearest grid point, ties going to
/// the lexicographically smallest coordinates.
class GridDomain {
 public:
  /// Uses the instance spacing when present, otherwise the largest
  /// nearest-neighbour distance. Throws OutsideDomain when some segment
  /// towards the center leaves the grid by more than the spacing.
  explicit GridDomain(const Instance& inst) : eps_(inst.cone().epsilon()) {
    if (!inst.star_center()) raise(ErrorCode::InvalidArgument, "instance declares no star center");
    center_ = inst.index_of(*inst.star_center());
    for (std::size_t i = 0; i < inst.size(); ++i) coords_.push_back(inst.coords(i));
    if (inst.spacing()) {
      spacing_ = *inst.spacing();
    } else {
      spacing_ = 0.0;
      for (std::size_t i = 0; i < coords_.size(); ++i) {
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < coords_.size(); ++j)
          if (j != i) nearest = std::min(nearest, distance(coords_[i], coords_[j]));
        if (std::isfinite(nearest)) spacing_ = std::max(spacing_, nearest);
      }
      if (spacing_ <= 0.0) spacing_ = 1.0;
    }
    check_star(inst);
  }

  double spacing() const noexcept { return spacing_; }
  std::size_t center() const noexcept { return center_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const Vector& coords(std::size_t i) const { return coords_[i]; }

  std::size_t snap(const Vector& p) const {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      const double d = distance(p, coords_[i]);
      if (d < best_d - eps_ || (std::abs(d - best_d) <= eps_ && lex_less(coords_[i], coords_[best]))) {
        best = i;
        best_d = std::min(d, best_d);
      }
    }
    return best;
  }

  /// Snapped lambda*x + (1-lambda)*center.
  std::size_t eta(std::size_t x, double lambda) const {
    if (!(lambda >= 0.0 && lambda <= 1.0)) raise(ErrorCode::InvalidArgument, "lambda must lie in [0, 1]");
    if (lambda == 1.0) return x;
    if (lambda == 0.0) return center_;
    const Vector p = lambda * coords_.at(x) + (1.0 - lambda) * coords_[center_];
    const std::size_t s = snap(p);
    if (distance(p, coords_[s]) > spacing_ + eps_)
      raise(ErrorCode::OutsideDomain, "segment point is " + std::to_string(distance(p, coords_[s])) +
                                          " away from the grid (spacing " + std::to_string(spacing_) + ")");
    return s;
  }

 private:
  void check_star(const Instance& inst) const {
    for (std::size_t y = 0; y < coords_.size(); ++y) {
      for (int k = 1; k < 100; ++k) {
        const double lambda = k / 100.0;
        const Vector p = lambda * coords_[y] + (1.0 - lambda) * coords_[center_];
        if (distance(p, coords_[snap(p)]) > spacing_ + eps_)
          raise(ErrorCode::OutsideDomain, "star center '" + *inst.star_center() + "' does not see '" + inst.id(y) +
                                              "' within the grid");
      }
    }
  }

  std::vector<Vector> coords_;
  double spacing_ = 1.0;
  std::size_t center_ = 0;
  double eps_ = kDefaultEpsilon;
};

/// xi(v, y) = sup_phi_l(F(v), F(y)) for the l order, sup_phi_u(F(v), F(y)) for u.
inline double scalar_objective(const Instance& inst, Order order, std::size_t v, std::size_t y) {
  if (order == Order::L) return sup_phi_l(inst.cone(), inst.value(v), inst.value(y)).value;
  if (order == Order::U) return sup_phi_u(inst.cone(), inst.value(v), inst.value(y)).value;
  raise(ErrorCode::InvalidArgument, "contraction is defined for the l and u orders");
}

/// Argmin over K of v -> xi(v, target). `ties` counts the other points whose
/// value is within eps of the minimum.
struct ArgminCell {
  std::size_t h = 0;
  double value = 0.0;
  std::size_t ties = 0;
};

inline ArgminCell argmin_objective(const Instance& inst, Order order, std::size_t target) {
  const double eps = inst.cone().epsilon();
  std::vector<double> vals(inst.size());
  double low = std::numeric_limits<double>::infinity();
  for (std::size_t v = 0; v < inst.size(); ++v) {
    vals[v] = scalar_objective(inst, order, v, target);
    low = std::min(low, vals[v]);
  }
  ArgminCell cell{0, low, 0};
  bool found = false;
  for (std::size_t v = 0; v < inst.size(); ++v) {
    if (vals[v] > low + eps) continue;
    if (!found || lex_less(inst.coords(v), inst.coords(cell.h))) cell.h = v;
    if (found) ++cell.ties;
    found = true;
  }
  cell.value = vals[cell.h];
  return cell;
}

/// H(x, lambda): the minimizer of xi(., eta(x, lambda)) over K.
inline ArgminCell contraction_map(const Instance& inst, const GridDomain& domain, Order order, std::size_t x,
                                  double lambda) {
  return argmin_objective(inst, order, domain.eta(x, lambda));
}

struct ContractionRow {
  std::string x_id;
  double lambda = 0.0;
  std::string h_id;
  double xi_value = 0.0;
};

struct ContractionReport {
  Order order = Order::L;
  int steps = 0;
  std::string star_center;
  double spacing = 0.0;
  std::vector<double> lambdas;
  std::vector<std::string> weak_members;
  std::vector<ContractionRow> table;  // grouped by x, lambda ascending
  bool endpoint_identity = false;      // H(x, 1) = x
  bool constant_base = false;          // H(., 0) takes one value
  bool membership = false;             // every H(x, lambda) is weakly minimal
  double max_step = 0.0;
  std::size_t tie_events = 0;

  bool certified() const { return endpoint_identity && constant_base && membership && tie_events == 0; }
};

/// Fills H over W x {k/steps} where W is the brute-force weak minimal set.
inline ContractionReport trace_contraction(const Instance& inst, Order order, int steps) {
  if (order != Order::L && order != Order::U)
    raise(ErrorCode::InvalidArgument, "contraction is defined for the l and u orders");
  if (steps <= 0) raise(ErrorCode::InvalidArgument, "steps must be positive");
  const GridDomain domain(inst);
  const auto weak = solve_bruteforce(inst, order, SolutionKind::WeakMinimal);
  if (weak.members.empty()) raise(ErrorCode::EmptyWeakMinimalSet, "no weak minimal solutions");

  ContractionReport report;
  report.order = order;
  report.steps = steps;
  report.star_center = *inst.star_center();
  report.spacing = domain.spacing();
  report.weak_members = weak.members;
  for (int k = 0; k <= steps; ++k) report.lambdas.push_back(static_cast<double>(k) / steps);

  std::vector<std::size_t> members;
  for (const auto& id : weak.members) members.push_back(inst.index_of(id));

  const std::size_t cols = report.lambdas.size();
  std::vector<std::size_t> target(members.size() * cols);
  std::vector<char> needed(inst.size(), 0);
  for (std::size_t r = 0; r < members.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      target[r * cols + c] = domain.eta(members[r], report.lambdas[c]);
      needed[target[r * cols + c]] = 1;
    }
  }
  std::vector<std::optional<ArgminCell>> cache(inst.size());
  parallel_for(
      inst.size(), [&](std::size_t y) { if (needed[y]) cache[y] = argmin_objective(inst, order, y); }, 4);

  std::vector<char> is_member(inst.size(), 0);
  for (auto m : members) is_member[m] = 1;

  report.endpoint_identity = true;
  report.membership = true;
  std::optional<std::size_t> base;
  report.constant_base = true;
  for (std::size_t r = 0; r < members.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const ArgminCell& cell = *cache[target[r * cols + c]];
      report.table.push_back({inst.id(members[r]), report.lambdas[c], inst.id(cell.h), cell.value});
      if (cell.ties > 0) ++report.tie_events;
      if (!is_member[cell.h]) report.membership = false;
      if (c + 1 == cols && cell.h != members[r]) report.endpoint_identity = false;
      if (c == 0) {
        if (base && *base != cell.h) report.constant_base = false;
        base = cell.h;
      }
      if (c > 0) {
        const std::size_t prev = cache[target[r * cols + c - 1]]->h;
        report.max_step = std::max(report.max_step, distance(inst.coords(prev), inst.coords(cell.h)));
      }
    }
  }
  return report;
}

/// Discrete continuity diagnostic: refining the lambda schedule from n to 2n
/// steps must not raise the largest step by more than the grid spacing.
struct RefinementCheck {
  int steps = 0;
  double coarse_max_step = 0.0;
  double fine_max_step = 0.0;
  double spacing = 0.0;

  bool ok(double eps = kDefaultEpsilon) const { return fine_max_step <= coarse_max_step + spacing + eps; }
};

inline RefinementCheck refinement_check(const Instance& inst, Order order, int steps) {
  const auto coarse = trace_contraction(inst, order, steps);
  const auto fine = trace_contraction(inst, order, 2 * steps);
  return {steps, coarse.max_step, fine.max_step, coarse.spacing};
}

/// CSV with columns x_id, lambda, h_id, xi_value.
inline void write_contraction_csv(const ContractionReport& report, std::ostream& out) {
  out << "x_id,lambda,h_id,xi_value\n";
  const auto old = out.precision(17);
  for (const auto& row : report.table)
    out << row.x_id << ',' << row.lambda << ',' << row.h_id << ',' << row.xi_value << '\n';
  out.precision(old);
}

}  // namespace setopt
