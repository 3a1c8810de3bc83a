#pragma once

// Deterministic random inputs shared by the test suites.

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "setopt/setopt.hpp"

namespace testing_support {

using setopt::Cone;
using setopt::ConeKind;
using setopt::FiniteSet;
using setopt::Rng;
using setopt::Vector;

inline Vector small_vector(Rng& rng, std::size_t m, int bound = 4) {
  return setopt::random_int_vector(rng, m, -bound, bound);
}

// Half-integer coordinates: exercises non-integral data while keeping every
// comparison exact in double precision.
inline Vector half_vector(Rng& rng, std::size_t m, int bound = 4) {
  return setopt::random_int_vector(rng, m, -2 * bound, 2 * bound) * 0.5;
}

inline FiniteSet small_set(Rng& rng, std::size_t m, std::size_t max_size = 5, int bound = 4) {
  const auto n = static_cast<std::size_t>(setopt::uniform_int(rng, 1, static_cast<int>(max_size)));
  std::vector<Vector> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(small_vector(rng, m, bound));
  return FiniteSet(std::move(pts));
}

inline std::size_t pick_dim(Rng& rng) { return static_cast<std::size_t>(setopt::uniform_int(rng, 2, 3)); }

inline ConeKind pick_kind(Rng& rng, bool simplicial_only = false) {
  const int k = setopt::uniform_int(rng, 0, simplicial_only ? 1 : 2);
  return k == 0 ? ConeKind::Orthant : k == 1 ? ConeKind::Simplicial : ConeKind::Polyhedral;
}

inline Cone any_cone(Rng& rng, bool simplicial_only = false) {
  const auto m = pick_dim(rng);
  return setopt::random_cone(rng, m, pick_kind(rng, simplicial_only));
}

// Error code raised by fn, or nullopt when it returns normally.
inline std::optional<setopt::ErrorCode> code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const setopt::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testing_support
