#include <gtest/gtest.h>

#include "catjac/errors.hpp"
#include "catjac/pathoracle.hpp"
#include "catjac/triangles.hpp"
#include "oracles.hpp"

using namespace catjac;

namespace {
PathSpec spec(std::int64_t x, std::int64_t y, PathSpec::Constraint c = PathSpec::Constraint::Free, std::int64_t h = 0) {
  return PathSpec{x, y, c, h};
}
}  // namespace

TEST(Paths, Examples) {
  EXPECT_EQ(count_paths(spec(8, 2)), ExactInt(56));
  EXPECT_EQ(count_paths(spec(10, 2, PathSpec::Constraint::NonNegative)), ExactInt(90));
  EXPECT_EQ(count_paths(spec(3, 2)), ExactInt(0));
}

TEST(Paths, FreeIsBinomial) {
  for (std::int64_t x = 0; x <= 30; ++x)
    for (std::int64_t y = -x; y <= x; ++y) {
      const ExactInt want = (x + y) % 2 == 0 ? oracle::binom(x, (x + y) / 2) : ExactInt(0);
      ASSERT_EQ(count_paths(spec(x, y)), want) << x << "," << y;
    }
}

TEST(Paths, NonNegativeIsCatalanTriangle) {
  // Ending at height y after x steps: ups a = (x+y)/2, downs b = (x-y)/2, count C(a,b).
  for (std::int64_t x = 0; x <= 30; ++x)
    for (std::int64_t y = 0; y <= x; ++y) {
      if ((x + y) % 2 != 0) continue;
      ASSERT_EQ(count_paths(spec(x, y, PathSpec::Constraint::NonNegative)), oracle::catalan_entry((x + y) / 2, (x - y) / 2));
    }
  for (std::int64_t n = 0; n <= 15; ++n)
    EXPECT_EQ(count_paths(spec(2 * n, 0, PathSpec::Constraint::NonNegative)), oracle::catalan_entry(n, n));
}

TEST(Paths, BoundedHeight) {
  // Height <= 1 Dyck paths of length 2n: exactly one.
  for (std::int64_t n = 0; n <= 10; ++n)
    EXPECT_EQ(count_paths(spec(2 * n, 0, PathSpec::Constraint::HeightAtMost, 1)), ExactInt(1));
}

TEST(DyckHeight, Examples) {
  EXPECT_EQ(count_dyck_height(4, 3), ExactInt(0));
  EXPECT_EQ(count_dyck_height(6, 3), ExactInt(1));
  EXPECT_EQ(count_dyck_height(8, 3), ExactInt(5));
  const std::int64_t listed[] = {0, 1, 5, 18, 57, 169};
  for (std::int64_t s = 1; s <= 6; ++s) EXPECT_EQ(count_dyck_height(2 * (s + 1), 3), ExactInt(listed[s - 1]));
}

TEST(DyckHeight, BruteForce) {
  for (int len = 2; len <= 20; len += 2)
    for (int h = 1; h <= len / 2; ++h) ASSERT_EQ(count_dyck_height(len, h), ExactInt(oracle::dyck_height_brute(len, h))) << len << "," << h;
}

TEST(Bijection, WorkedExample) {
  const auto r = verify_bijection(3, 3);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.lhs, ExactInt(35));
  EXPECT_EQ(r.rhs, ExactInt(35));
  ASSERT_EQ(r.per_s.size(), 4u);
  const std::int64_t sizes[] = {5, 10, 12, 8};
  for (std::size_t s = 0; s < 4; ++s) {
    EXPECT_EQ(r.per_s[s].s, static_cast<std::int64_t>(s));
    EXPECT_EQ(r.per_s[s].enumerated, static_cast<std::uint64_t>(sizes[s]));
  }
  EXPECT_EQ(verify_bijection(4, 3).lhs, ExactInt(56));
}

TEST(Bijection, KZero) {
  for (std::int64_t n = 0; n <= 6; ++n) {
    const auto r = verify_bijection(n, 0);
    EXPECT_TRUE(r.holds());
    EXPECT_EQ(r.lhs, ExactInt(1));
  }
}

TEST(Bijection, ExhaustiveSmall) {
  for (std::int64_t n = 0; n + 1 <= 18; ++n)
    for (std::int64_t k = 0; k <= n + 1 && n + 1 + k <= 18; ++k) ASSERT_TRUE(verify_bijection(n, k).holds()) << n << "," << k;
}

TEST(Bijection, Limits) {
  EXPECT_THROW(verify_bijection(20, 10), BoundExceeded);
  EXPECT_THROW(verify_bijection(3, 5), DomainError);
  EXPECT_THROW(verify_bijection(-1, 0), DomainError);
}
