#include "catjac/pathoracle.hpp"

#include <map>

#include "catjac/errors.hpp"
#include "catjac/triangles.hpp"

namespace catjac {

ExactInt count_paths(const PathSpec& spec) {
  if (spec.x < 0) throw DomainError("path length must be non-negative");
  if (((spec.x - spec.y) % 2 + 2) % 2 != 0) return ExactInt{};
  if (spec.y > spec.x || spec.y < -spec.x) return ExactInt{};

  const bool floor_zero = spec.constraint != PathSpec::Constraint::Free;
  const bool has_ceiling = spec.constraint == PathSpec::Constraint::HeightAtMost;
  if (floor_zero && spec.y < 0) return ExactInt{};
  if (has_ceiling && (spec.max_height < 0 || spec.y > spec.max_height)) return ExactInt{};

  // Heights span [-x, x]; index = height + x.
  const std::int64_t width = 2 * spec.x + 1;
  std::vector<ExactInt> cur(static_cast<std::size_t>(width));
  std::vector<ExactInt> next(static_cast<std::size_t>(width));
  const auto at = [&](std::int64_t h) { return static_cast<std::size_t>(h + spec.x); };
  const auto allowed = [&](std::int64_t h) {
    if (h < -spec.x || h > spec.x) return false;
    if (floor_zero && h < 0) return false;
    if (has_ceiling && h > spec.max_height) return false;
    return true;
  };

  cur[at(0)] = ExactInt(1);
  for (std::int64_t step = 0; step < spec.x; ++step) {
    for (auto& v : next) v = ExactInt{};
    for (std::int64_t h = -step; h <= step; ++h) {
      const ExactInt& ways = cur[at(h)];
      if (ways.is_zero()) continue;
      if (allowed(h + 1)) next[at(h + 1)] += ways;
      if (allowed(h - 1)) next[at(h - 1)] += ways;
    }
    std::swap(cur, next);
  }
  return cur[at(spec.y)];
}

ExactInt count_dyck_height(std::int64_t len, std::int64_t h) {
  if (len < 0 || len % 2 != 0) throw DomainError("Dyck path length must be even and non-negative");
  if (h < 1) throw DomainError("height must be positive");
  const ExactInt upto_h = count_paths({len, 0, PathSpec::Constraint::HeightAtMost, h});
  const ExactInt below_h = count_paths({len, 0, PathSpec::Constraint::HeightAtMost, h - 1});
  return upto_h - below_h;
}

bool BijectionReport::holds() const {
  if (lhs != rhs) return false;
  for (const auto& c : per_s) {
    if (ExactInt(static_cast<std::int64_t>(c.enumerated)) != c.expected) return false;
  }
  return true;
}

BijectionReport verify_bijection(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n + 1) throw DomainError("verify_bijection needs 0 <= k <= n+1");
  const std::int64_t steps = n + 1 + k;
  if (steps > kMaxEnumeratedSteps) {
    throw BoundExceeded("enumeration of " + std::to_string(steps) + " steps exceeds the bound " +
                        std::to_string(kMaxEnumeratedSteps));
  }
  const std::int64_t height = n + 1 - k;
  const auto ups = static_cast<unsigned>((steps + height) / 2);

  // Bit i set = step i goes up. Walk every mask with exactly `ups` bits (Gosper).
  std::map<std::int64_t, std::uint64_t> classes;
  std::uint64_t total = 0;
  const std::uint64_t limit = std::uint64_t{1} << steps;
  std::uint64_t mask = ups == 0 ? 0 : (std::uint64_t{1} << ups) - 1;
  while (mask < limit) {
    std::int64_t y = 0;
    std::int64_t returns = 0;
    for (std::int64_t i = 0; i < steps; ++i) {
      y += ((mask >> i) & 1U) != 0 ? 1 : -1;
      if (y == 0) ++returns;
    }
    ++classes[returns];
    ++total;
    if (mask == 0) break;
    const std::uint64_t lowest = mask & (~mask + 1);
    const std::uint64_t ripple = mask + lowest;
    mask = (((ripple ^ mask) >> 2) / lowest) | ripple;
  }

  BijectionReport report;
  report.lhs = ExactInt(static_cast<std::int64_t>(total));
  for (std::int64_t s = 0; s <= k; ++s) {
    const ExactInt expected = catalan_entry(n, k - s) * ipow(2, s);
    report.rhs += expected;
    const auto it = classes.find(s);
    const std::uint64_t found = it == classes.end() ? 0 : it->second;
    if (found == 0 && expected.is_zero()) continue;
    report.per_s.push_back({s, found, expected});
  }
  // Classes the formula does not predict still have to be reported.
  for (const auto& [s, found] : classes) {
    if (s > k) report.per_s.push_back({s, found, ExactInt{}});
  }
  return report;
}

}  // namespace catjac
