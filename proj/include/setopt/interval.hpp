#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace setopt {

/// Interval of the combination parameter t, always inside [0, 1].
struct TInterval {
  double lo = 0.0;
  double hi = 1.0;
  bool lo_open = false;
  bool hi_open = false;

  bool empty() const { return lo > hi || (lo == hi && (lo_open || hi_open)); }

  bool contains(double t) const {
    if (empty()) return false;
    const bool above_lo = lo_open ? t > lo : t >= lo;
    const bool below_hi = hi_open ? t < hi : t <= hi;
    return above_lo && below_hi;
  }

  double midpoint() const { return 0.5 * (lo + hi); }

  friend bool operator==(const TInterval&, const TInterval&) = default;
};

inline constexpr TInterval kUnitInterval{0.0, 1.0, false, false};

/// Interval of t in [0, 1] where every affine form slope_j * t + offset_j is
/// > tol (strict) or >= -tol (non-strict). Slopes below tol in magnitude are
/// treated as constants.
inline TInterval affine_feasible(std::span<const double> slopes, std::span<const double> offsets, bool strict,
                                 double tol) {
  TInterval out = kUnitInterval;
  const double bound = strict ? tol : -tol;
  for (std::size_t j = 0; j < slopes.size(); ++j) {
    const double s = slopes[j];
    const double c = offsets[j];
    if (std::abs(s) < tol) {
      const bool ok = strict ? c > bound : c >= bound;
      if (!ok) return {1.0, 0.0, false, false};
      continue;
    }
    const double tau = (bound - c) / s;
    if (s > 0) {
      if (tau > out.lo) {
        out.lo = tau;
        out.lo_open = strict;
      } else if (tau == out.lo) {
        out.lo_open = out.lo_open || strict;
      }
    } else {
      if (tau < out.hi) {
        out.hi = tau;
        out.hi_open = strict;
      } else if (tau == out.hi) {
        out.hi_open = out.hi_open || strict;
      }
    }
    if (out.empty()) return out;
  }
  return out;
}

/// Sorted, disjoint, nonempty pieces with the same union as `parts`.
inline std::vector<TInterval> normalize(std::vector<TInterval> parts) {
  std::erase_if(parts, [](const TInterval& p) { return p.empty(); });
  std::sort(parts.begin(), parts.end(), [](const TInterval& a, const TInterval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return !a.lo_open && b.lo_open;
  });
  std::vector<TInterval> out;
  for (const auto& p : parts) {
    if (!out.empty()) {
      auto& last = out.back();
      const bool touches = p.lo < last.hi || (p.lo == last.hi && !(p.lo_open && last.hi_open));
      if (touches) {
        if (p.hi > last.hi) {
          last.hi = p.hi;
          last.hi_open = p.hi_open;
        } else if (p.hi == last.hi) {
          last.hi_open = last.hi_open && p.hi_open;
        }
        continue;
      }
    }
    out.push_back(p);
  }
  return out;
}

inline std::vector<TInterval> unite(std::vector<TInterval> a, const std::vector<TInterval>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return normalize(std::move(a));
}

inline TInterval intersect(const TInterval& a, const TInterval& b) {
  TInterval out;
  if (a.lo > b.lo || (a.lo == b.lo && a.lo_open)) {
    out.lo = a.lo;
    out.lo_open = a.lo_open;
  } else {
    out.lo = b.lo;
    out.lo_open = b.lo_open;
  }
  if (a.hi < b.hi || (a.hi == b.hi && a.hi_open)) {
    out.hi = a.hi;
    out.hi_open = a.hi_open;
  } else {
    out.hi = b.hi;
    out.hi_open = b.hi_open;
  }
  return out;
}

inline std::vector<TInterval> intersect(const std::vector<TInterval>& a, const std::vector<TInterval>& b) {
  std::vector<TInterval> out;
  for (const auto& p : a)
    for (const auto& q : b) out.push_back(intersect(p, q));
  return normalize(std::move(out));
}

/// First gap of `parts` inside the open interval (0, 1), or nullopt if the
/// pieces cover it. Gaps no wider than `tol` are merged over.
inline std::optional<TInterval> first_gap_in_open_unit(const std::vector<TInterval>& parts, double tol) {
  const auto pieces = normalize(parts);
  double reach = 0.0;  // (0, reach] is covered so far
  bool reach_open = true;
  bool started = false;
  for (const auto& p : pieces) {
    if (!started) {
      if (p.lo > tol) return TInterval{0.0, p.lo, true, !p.lo_open};
      started = true;
      reach = p.hi;
      reach_open = p.hi_open;
      continue;
    }
    if (p.lo > reach + tol) return TInterval{reach, p.lo, !reach_open, !p.lo_open};
    if (p.hi > reach) {
      reach = p.hi;
      reach_open = p.hi_open;
    }
  }
  if (!started) return TInterval{0.0, 1.0, true, true};
  if (reach < 1.0 - tol) return TInterval{reach, 1.0, !reach_open, true};
  return std::nullopt;
}

}  // namespace setopt
