#pragma once

#include <cstdint>
#include <vector>

#include "catjac/exact_int.hpp"

namespace catjac {

/// Lattice paths from (0,0) with steps (1,1) and (1,-1).
struct PathSpec {
  enum class Constraint {
    Free,         // any height
    NonNegative,  // Dyck-type: never below the x-axis
    HeightAtMost, // never below the axis and never above `max_height`
  };

  std::int64_t x = 0;  // number of steps
  std::int64_t y = 0;  // final height
  Constraint constraint = Constraint::Free;
  std::int64_t max_height = 0;
};

/// Number of paths matching `spec`, by dynamic programming over heights.
/// Parity mismatch (x and y of different parity) gives zero.
ExactInt count_paths(const PathSpec& spec);

/// Dyck paths of length `len` whose maximum height is exactly `h`.
ExactInt count_dyck_height(std::int64_t len, std::int64_t h);

/// Outcome of an exhaustive check of the 2^s-to-1 path decomposition.
struct BijectionReport {
  struct ClassCount {
    std::int64_t s = 0;               // axis returns
    std::uint64_t enumerated = 0;     // paths found with this s
    ExactInt expected;                // C(n, k-s) * 2^s
  };
  ExactInt lhs;  // total number of free paths enumerated
  ExactInt rhs;  // sum over s of C(n, k-s) 2^s
  std::vector<ClassCount> per_s;

  [[nodiscard]] bool holds() const;
};

/// Largest path length verify_bijection will enumerate.
inline constexpr std::int64_t kMaxEnumeratedSteps = 24;

/// Enumerates every free path from (0,0) to (n+1+k, n+1-k) and sorts it by the
/// number s of its points on the x-axis after the start. Each class should
/// have C(n, k-s) 2^s members.
///
/// Requires 0 <= k <= n+1. Throws BoundExceeded when n+1+k > kMaxEnumeratedSteps,
/// DomainError when the parameters are out of range.
BijectionReport verify_bijection(std::int64_t n, std::int64_t k);

}  // namespace catjac
