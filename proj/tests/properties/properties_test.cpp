// Randomized and exhaustive property suites. Fixed seeds, so every run
// checks the same cases.

#include <gtest/gtest.h>

#include <random>

#include "catjac/genfun.hpp"
#include "catjac/polyfam.hpp"
#include "catjac/series.hpp"
#include "catjac/triangles.hpp"
#include "oracles.hpp"

using namespace catjac;

namespace {

constexpr std::uint64_t kSeed = 0x5eed'cafe'2024ULL;

Poly random_poly(std::mt19937_64& rng, std::size_t max_degree = 40) {
  std::uniform_int_distribution<std::int64_t> coeff(-1'000'000, 1'000'000);
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<ExactInt> c(deg(rng) + 1);
  for (auto& v : c) v = ExactInt(coeff(rng));
  return Poly(std::move(c));
}

// Nonzero coefficients rise weakly, then fall weakly.
bool weakly_unimodal(const Poly& p) {
  std::vector<ExactInt> v;
  for (const auto& c : p.coeffs()) {
    if (!c.is_zero()) v.push_back(c);
  }
  std::size_t i = 0;
  while (i + 1 < v.size() && v[i] <= v[i + 1]) ++i;
  while (i + 1 < v.size() && v[i] >= v[i + 1]) ++i;
  return i + 1 >= v.size();
}

// sum_{s=0}^{k} C(n,s) x^{k-s}, with C zero past the row.
Poly catalan_sum(std::int64_t n, std::int64_t k) {
  std::vector<ExactInt> c(static_cast<std::size_t>(k + 1));
  for (std::int64_t s = 0; s <= k; ++s) c[static_cast<std::size_t>(k - s)] = catalan_entry(n, s);
  return Poly(std::move(c));
}

Poly modified_sum(std::int64_t n, std::int64_t k) {
  Poly p;
  for (std::int64_t s = 0; s <= k; ++s)
    p += Poly::monomial(catalan_entry(n + 1, s), static_cast<std::size_t>(std::max<std::int64_t>(k - 1 - s, 0)));
  return p;
}

}  // namespace

TEST(RingLaws, AdditionAndMultiplication) {
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 300; ++i) {
    const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a - a, Poly{});
    ASSERT_EQ(a * Poly::one(), a);
  }
}

TEST(RingLaws, EvalIsAHomomorphism) {
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_int_distribution<std::int64_t> point(-50, 50);
  for (int i = 0; i < 300; ++i) {
    const Poly a = random_poly(rng), b = random_poly(rng);
    const ExactInt v(point(rng));
    ASSERT_EQ((a + b).eval(v), a.eval(v) + b.eval(v));
    ASSERT_EQ((a * b).eval(v), a.eval(v) * b.eval(v));
    ASSERT_EQ(a.negate_variable().eval(v), a.eval(-v));
  }
}

TEST(RingLaws, ExpansionRoundTrip) {
  std::mt19937_64 rng(kSeed + 2);
  for (int i = 0; i < 100; ++i) {
    const Poly num = random_poly(rng, 10);
    Poly den = random_poly(rng, 6);
    den += Poly(ExactInt(1) - den.coeff(0));  // unit constant term
    const RationalGF g{BiPoly::from_x(num), BiPoly::from_x(den)};
    const auto s = gf_expand(g, 60);
    const auto back = mul_truncated(g.denominator, s, 60);
    ASSERT_EQ(back.size(), 61u);
    for (std::size_t j = 0; j <= 60; ++j) ASSERT_EQ(back[j], Poly(num.coeff(j)));
  }
}

TEST(RingLaws, BinomialPascal) {
  for (std::int64_t n = 1; n <= 200; ++n)
    for (std::int64_t k = 0; k <= n; ++k) ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST(Parity, BTildeSupport) {
  for (std::int64_t s = 0; s <= 40; ++s) {
    const Poly p = bq_tilde_poly(s);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i % 2 != static_cast<std::size_t>(s % 2)) {
        ASSERT_TRUE(p.coeff(i).is_zero()) << "s=" << s << " power " << i;
      } else {
        ASSERT_GE(p.coeff(i).sign(), 0) << "s=" << s << " power " << i;
      }
    }
  }
}

TEST(Unimodality, BTildeAndJ) {
  for (std::int64_t s = 0; s <= 60; ++s) ASSERT_TRUE(weakly_unimodal(bq_tilde_poly(s))) << "B~_" << s;
  for (std::int64_t m = 1; m <= 60; ++m) ASSERT_TRUE(weakly_unimodal(j_poly(m))) << "J_" << m;
}

TEST(Jacobsthal, CoefficientSums) {
  for (std::int64_t m = 1; m <= 50; ++m) {
    const Poly j = j_poly(m);
    ExactInt s;
    for (const auto& c : j.coeffs()) s += c;
    ASSERT_EQ(s, oracle::jacobsthal(m));
  }
}

TEST(Pascal, CatalanTrianglePolynomials) {
  for (std::int64_t n = 1; n <= 40; ++n)
    for (std::int64_t k = 1; k <= n; ++k) {
      ASSERT_EQ(catalan_poly(n, k), catalan_poly(n, k - 1) + catalan_sum(n - 1, k)) << n << "," << k;
      ASSERT_EQ(modified_catalan_poly(n, k), modified_catalan_poly(n, k - 1) + modified_sum(n - 1, k)) << n << "," << k;
    }
}

TEST(Pascal, AtIntegerPoints) {
  std::mt19937_64 rng(kSeed + 3);
  std::uniform_int_distribution<std::int64_t> point(-20, 20);
  for (int i = 0; i < 200; ++i) {
    const ExactInt d(point(rng));
    for (std::int64_t n = 1; n <= 12; ++n)
      for (std::int64_t k = 1; k < n; ++k) {
        ASSERT_EQ(catalan_poly(n, k).eval(d), catalan_poly(n, k - 1).eval(d) + catalan_poly(n - 1, k).eval(d));
        ASSERT_EQ(modified_catalan_poly(n, k).eval(d),
                  modified_catalan_poly(n, k - 1).eval(d) + modified_catalan_poly(n - 1, k).eval(d));
      }
  }
}

TEST(LSeries, LowestDegree) {
  for (std::int64_t l = 0; l <= 20; ++l) {
    const auto c = l_series(l, 80);
    std::size_t low = 0;
    while (low < c.size() && c[low].is_zero()) ++low;
    ASSERT_EQ(static_cast<std::int64_t>(low), l + 1 + (l % 2)) << l;
  }
}
