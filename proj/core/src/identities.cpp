#include "catjac/identities.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <thread>

#include <json.hpp>

#include "catjac/errors.hpp"
#include "catjac/genfun.hpp"
#include "catjac/oeis.hpp"
#include "catjac/pathoracle.hpp"
#include "catjac/polyfam.hpp"
#include "catjac/series.hpp"
#include "catjac/triangles.hpp"

namespace catjac {

namespace {

using Claims = std::vector<Claim>;

Claim eq(std::string label, ExactInt lhs, ExactInt rhs) {
  return {std::move(label), Value(std::move(lhs)), Value(std::move(rhs)), "x"};
}

Claim eq(std::string label, Poly lhs, Poly rhs, std::string var = "q") {
  return {std::move(label), Value(std::move(lhs)), Value(std::move(rhs)), std::move(var)};
}

ExactInt pow2(std::int64_t e) { return ipow(2, e); }

ExactInt sign_pow(std::int64_t e) { return e % 2 == 0 ? ExactInt(1) : ExactInt(-1); }

// Independent oracles: plain iteration, nothing from the triangles.
ExactInt fibonacci(std::int64_t s) {
  ExactInt a(0), b(1);
  for (std::int64_t i = 0; i < s; ++i) {
    ExactInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

ExactInt jacobsthal(std::int64_t m) {
  ExactInt a(1), b(1);  // J_1, J_2
  if (m <= 2) return ExactInt(1);
  for (std::int64_t i = 3; i <= m; ++i) {
    ExactInt next = b + a * ExactInt(2);
    a = std::move(b);
    b = std::move(next);
  }
  return b;
}

ExactInt factorial(std::int64_t n) {
  ExactInt out(1);
  for (std::int64_t i = 2; i <= n; ++i) out *= ExactInt(i);
  return out;
}

std::int64_t ceil_half(std::int64_t n) { return (n + 1) / 2; }
std::int64_t floor_half(std::int64_t n) { return n / 2; }

// sum_{s=lo}^{hi} C(row, s) 2^{weight(s)}
template <typename Weight>
ExactInt catalan_row_sum(std::int64_t row, std::int64_t lo, std::int64_t hi, Weight weight) {
  ExactInt acc;
  for (std::int64_t s = lo; s <= hi; ++s) acc.addmul(catalan_entry(row, s), pow2(weight(s)));
  return acc;
}

// F_{n,k}(x) as a polynomial, without the k <= n restriction.
Poly catalan_sum_poly(std::int64_t n, std::int64_t k) {
  Poly out;
  for (std::int64_t s = 0; s <= k; ++s) out += Poly::monomial(catalan_entry(n, s), static_cast<std::size_t>(k - s));
  return out;
}

Poly modified_sum_poly(std::int64_t n, std::int64_t k) {
  Poly out;
  for (std::int64_t s = 0; s <= k; ++s) {
    out += Poly::monomial(catalan_entry(n + 1, s), static_cast<std::size_t>(std::max<std::int64_t>(k - 1 - s, 0)));
  }
  return out;
}

// a_{m,t} = A(t+2m-2, t), b_{m,t} = -A(t+2m-1, t)
ExactInt sub_a(std::int64_t m, std::int64_t t) { return alt_jacobsthal_entry(t + 2 * m - 2, t); }
ExactInt sub_b(std::int64_t m, std::int64_t t) { return -alt_jacobsthal_entry(t + 2 * m - 1, t); }

// Coefficients of a q-free rational function in x, to `order`.
std::vector<ExactInt> expand_x(const Poly& num, const Poly& den, std::size_t order) {
  const auto coeffs = gf_expand({BiPoly::from_x(num), BiPoly::from_x(den)}, order);
  std::vector<ExactInt> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.coeff(0));
  return out;
}

Poly as_poly(const std::vector<ExactInt>& v) { return Poly(v); }

Poly one_minus_x_pow(unsigned e) { return pow(Poly{1, -1}, e); }

constexpr std::size_t kLOrder = 60;
constexpr std::size_t kColumnOrder = 40;
constexpr std::size_t kLkOrder = 40;

std::vector<IdentityRecord> make_catalog() {
  std::vector<IdentityRecord> r;

  r.push_back({
      "I-main1",
      "binom(n+k+1,k) = sum_{s=0}^{k} C(n,s) 2^{k-s}",
      {"n", "k"},
      "n >= 1, 0 <= k <= n+1",
      [](Params p) { return p[0] >= 1 && p[1] >= 0 && p[1] <= p[0] + 1; },
      [](Params p) {
        const auto n = p[0], k = p[1];
        return Claims{eq("binomial = weighted row n", binomial(n + k + 1, k),
                         catalan_row_sum(n, 0, k, [k](std::int64_t s) { return k - s; }))};
      },
      {{"n", 1, 40}, {"k", 0, 41}},
      ""});

  r.push_back({
      "I-main2",
      "binom(n+1+k,k) = sum_{s=0}^{k} C(n+1,s) 2^{max(k-1-s,0)}",
      {"n", "k"},
      "n >= 1, 0 <= k <= n+1",
      [](Params p) { return p[0] >= 1 && p[1] >= 0 && p[1] <= p[0] + 1; },
      [](Params p) {
        const auto n = p[0], k = p[1];
        return Claims{eq("binomial = weighted row n+1", binomial(n + 1 + k, k),
                         catalan_row_sum(n + 1, 0, k, [k](std::int64_t s) {
                           return std::max<std::int64_t>(k - 1 - s, 0);
                         }))};
      },
      {{"n", 1, 40}, {"k", 0, 41}},
      ""});

  r.push_back({
      "I-mm",
      "binom(n+1, ceil((n+1)/2)) = sum_{s=0}^{ceil(n/2)} C(ceil(n/2),s) 2^{max(floor(n/2)-s,0)}",
      {"n"},
      "n >= 0",
      [](Params p) { return p[0] >= 0; },
      [](Params p) {
        const auto n = p[0];
        const auto c = ceil_half(n), f = floor_half(n);
        return Claims{eq("central binomial", binomial(n + 1, ceil_half(n + 1)),
                         catalan_row_sum(c, 0, c, [f](std::int64_t s) {
                           return std::max<std::int64_t>(f - s, 0);
                         }))};
      },
      {{"n", 0, 80}},
      ""});

  r.push_back({
      "I-Dn",
      "(n+3)/2 C_n = sum_{k=0}^{n-1} C(n,k) 2^{|n-2-k|}",
      {"n"},
      "n >= 1",
      [](Params p) { return p[0] >= 1; },
      [](Params p) {
        const auto n = p[0];
        const ExactInt twice = ExactInt(n + 3) * catalan_number(n);
        Claims out;
        ExactInt lhs = twice.is_even() ? ExactInt::divexact(twice, ExactInt(2)) : twice;
        out.push_back(eq("packet sum", std::move(lhs), catalan_row_sum(n, 0, n - 1, [n](std::int64_t k) {
                           return std::abs(n - 2 - k);
                         })));
        out.push_back(eq("(n+3) C_n is even", ExactInt(twice.is_even() ? 1 : 0), ExactInt(1)));
        return out;
      },
      {{"n", 1, 40}},
      "The left side is computed as ((n+3) C_n)/2 after checking the division is exact."});

  r.push_back({
      "I-dual",
      "binom(n+1, floor((n+1)/2)) = sum_{s=0}^{floor(n/2)} C(floor(n/2),s) 2^{ceil(n/2)-s}; for n >= 1 "
      "binom(2n,n) = sum_{s<n} C(n-1,s) 2^{n-s} = sum_{s<=n} (n+s-1)!(n-s)/(s!n!) 2^{n-s} = sum_s binom(n,s)^2",
      {"n"},
      "n >= 0 (the central-binomial chain for n >= 1)",
      [](Params p) { return p[0] >= 0; },
      [](Params p) {
        const auto n = p[0];
        const auto f = floor_half(n), c = ceil_half(n);
        Claims out;
        out.push_back(eq("floor form", binomial(n + 1, floor_half(n + 1)),
                         catalan_row_sum(f, 0, f, [c](std::int64_t s) { return c - s; })));
        if (n >= 1) {
          const ExactInt central = binomial(2 * n, n);
          out.push_back(eq("row n-1", central, catalan_row_sum(n - 1, 0, n - 1, [n](std::int64_t s) { return n - s; })));
          ExactInt factorial_form;
          for (std::int64_t s = 0; s <= n; ++s) {
            const ExactInt term = ExactInt::divexact(factorial(n + s - 1) * ExactInt(n - s), factorial(s) * factorial(n));
            factorial_form.addmul(term, pow2(n - s));
          }
          out.push_back(eq("factorial form", central, factorial_form));
          ExactInt squares;
          for (std::int64_t s = 0; s <= n; ++s) {
            const ExactInt b = binomial(n, s);
            squares.addmul(b, b);
          }
          out.push_back(eq("sum of squares", central, squares));
        }
        return out;
      },
      {{"n", 0, 40}},
      ""});

  r.push_back({
      "I-s1",
      "binom(2k,k-1) = sum_{s=0}^{k-1} C(k,s) 2^{k-1-s}",
      {"k"},
      "k >= 1",
      [](Params p) { return p[0] >= 1; },
      [](Params p) {
        const auto k = p[0];
        return Claims{eq("binom(2k,k-1)", binomial(2 * k, k - 1),
                         catalan_row_sum(k, 0, k - 1, [k](std::int64_t s) { return k - 1 - s; }))};
      },
      {{"k", 1, 40}},
      ""});

  r.push_back({
      "I-larger",
      "binom(n+k+1,k) = sum_{s=0}^{min(n,k)} C(n,s) 2^{k-s}",
      {"n", "k"},
      "n >= 0, 0 <= k <= n+1",
      [](Params p) { return p[0] >= 0 && p[1] >= 0 && p[1] <= p[0] + 1; },
      [](Params p) {
        const auto n = p[0], k = p[1];
        return Claims{eq("binomial = truncated weighted row", binomial(n + k + 1, k),
                         catalan_row_sum(n, 0, std::min(n, k), [k](std::int64_t s) { return k - s; }))};
      },
      {{"n", 0, 40}, {"k", 0, 41}},
      ""});

  r.push_back({
      "I-trap",
      "binom(n+k+1,k) = sum_{s=0}^{k} C(n,s) 2^{k-s} = sum_{s=0}^{k-m} C(n+m,s) 2^{k-m-s} + "
      "sum_{s=0}^{m-1} C(n+1+s,k-s); C_m(n+1,k) = binom(n+1+k,k) - binom(n+1+k,k-m)",
      {"m", "n", "k"},
      "1 <= m <= k <= n+m, n >= 0",
      [](Params p) { return p[0] >= 1 && p[1] >= 0 && p[0] <= p[2] && p[2] <= p[1] + p[0]; },
      [](Params p) {
        const auto m = p[0], n = p[1], k = p[2];
        Claims out;
        const ExactInt shifted = catalan_row_sum(n + m, 0, k - m, [k, m](std::int64_t s) { return k - m - s; });
        ExactInt strip;
        for (std::int64_t s = 0; s <= m - 1; ++s) strip += catalan_entry(n + 1 + s, k - s);
        const ExactInt difference = binomial(n + 1 + k, k) - binomial(n + 1 + k, k - m);
        out.push_back(eq("trapezoid entry = binomial difference", trapezoid_entry(m, n + 1, k), difference));
        out.push_back(eq("shifted row = binom(n+k+1,k-m)", shifted, binomial(n + k + 1, k - m)));
        const ExactInt lhs = binomial(n + k + 1, k);
        out.push_back(eq("binomial = row n", lhs, catalan_row_sum(n, 0, k, [k](std::int64_t s) { return k - s; })));
        out.push_back(eq("binomial = shifted row + strip", lhs, shifted + strip));
        out.push_back(eq("trapezoid entry = strip", trapezoid_entry(m, n + 1, k), strip));
        return out;
      },
      {{"m", 1, 31}, {"n", 0, 30}, {"k", 1, 61}},
      "The last three claims fail whenever k > n+1 (first at m=2, n=0, k=2: 3 vs 4); the first two hold everywhere."});

  r.push_back({
      "I-cnk",
      "C(n,k) = 2 binom(n+k,k) - binom(n+k+1,k)",
      {"n", "k"},
      "0 <= k <= n",
      [](Params p) { return p[0] >= 0 && p[1] >= 0 && p[1] <= p[0]; },
      [](Params p) {
        const auto n = p[0], k = p[1];
        return Claims{eq("binomial difference", catalan_entry(n, k),
                         ExactInt(2) * binomial(n + k, k) - binomial(n + k + 1, k))};
      },
      {{"n", 0, 60}, {"k", 0, 60}},
      ""});

  r.push_back({
      "I-bino",
      "C(n,k) = d F_{n-1,k}(d) - (d-1) F_{n,k}(d), and the same with the modified polynomials",
      {"d", "n", "k"},
      "d >= 1, 0 <= k <= n-1",
      [](Params p) { return p[0] >= 1 && p[2] >= 0 && p[2] <= p[1] - 1; },
      [](Params p) {
        const auto d = p[0], n = p[1], k = p[2];
        const ExactInt dv(d), dm1(d - 1);
        return Claims{
            eq("catalan polynomials", catalan_entry(n, k),
               dv * catalan_poly(n - 1, k).eval(dv) - dm1 * catalan_poly(n, k).eval(dv)),
            eq("modified polynomials", catalan_entry(n, k),
               dv * modified_catalan_poly(n - 1, k).eval(dv) - dm1 * modified_catalan_poly(n, k).eval(dv)),
        };
      },
      {{"d", 1, 6}, {"n", 1, 31}, {"k", 0, 30}},
      ""});

  r.push_back({
      "I-bino-poly",
      "x F_{n-1,k}(x) - (x-1) F_{n,k}(x) = C(n,k) as polynomials; for the modified family the same combination is "
      "C(n,k) + (2-x) C(n+1,k-1); "
      "F_{n,k} = F_{n,k-1} + F_{n-1,k} and likewise for the modified family",
      {"n", "k"},
      "n >= 1, 0 <= k <= n",
      [](Params p) { return p[0] >= 1 && p[1] >= 0 && p[1] <= p[0]; },
      [](Params p) {
        const auto n = p[0], k = p[1];
        const Poly x = Poly::x();
        const Poly x_minus_1{-1, 1};
        const Poly c(catalan_entry(n, k));
        Claims out;
        if (k <= n - 1) {
          out.push_back(eq("catalan polynomials", x * catalan_poly(n - 1, k) - x_minus_1 * catalan_poly(n, k), c, "x"));
          // Only linear in x for the modified family; agrees with C(n,k) at x = 2.
          out.push_back(eq("modified polynomials, linear form",
                           x * modified_catalan_poly(n - 1, k) - x_minus_1 * modified_catalan_poly(n, k),
                           c + Poly{2, -1} * Poly(catalan_entry(n + 1, k - 1)), "x"));
        }
        if (k >= 1) {
          // At k = n the second term is the defining sum of F_{n-1,n}, whose top entry vanishes.
          out.push_back(eq("Pascal rule", catalan_sum_poly(n, k), catalan_sum_poly(n, k - 1) + catalan_sum_poly(n - 1, k), "x"));
          out.push_back(eq("Pascal rule, modified", modified_sum_poly(n, k),
                           modified_sum_poly(n, k - 1) + modified_sum_poly(n - 1, k), "x"));
        }
        return out;
      },
      {{"n", 1, 40}, {"k", 0, 40}},
      ""});

  r.push_back({
      "I-evalF",
      "F_{n,k}(0) = C(n,k), F_{n,k}(1) = C(n+1,k) = C_2(n,k), F_{n,k}(2) = binom(n+k+1,k) = C_n(n+1,k)",
      {"n", "k"},
      "0 <= k <= n",
      [](Params p) { return p[0] >= 0 && p[1] >= 0 && p[1] <= p[0]; },
      [](Params p) {
        const auto n = p[0], k = p[1];
        const Poly f = catalan_poly(n, k);
        Claims out{
            eq("at 0", f.eval(ExactInt(0)), catalan_entry(n, k)),
            eq("at 1", f.eval(ExactInt(1)), catalan_entry(n + 1, k)),
            eq("at 1, trapezoid", f.eval(ExactInt(1)), trapezoid_entry(2, n, k)),
            eq("at 2", f.eval(ExactInt(2)), binomial(n + k + 1, k)),
        };
        if (n >= 1) out.push_back(eq("at 2, trapezoid", f.eval(ExactInt(2)), trapezoid_entry(n, n + 1, k)));
        return out;
      },
      {{"n", 0, 40}, {"k", 0, 40}},
      "The trapezoid form of the value at 2 fails at k = n, where the trapezoid entry is one less."});

  r.push_back({
      "I-evalFt",
      "modified F_{n,k}: at 0 C(n+1,k-1)+C(n+1,k), at 1 C(n+2,k), at 2 binom(n+k+1,k)",
      {"n", "k"},
      "0 <= k <= n",
      [](Params p) { return p[0] >= 0 && p[1] >= 0 && p[1] <= p[0]; },
      [](Params p) {
        const auto n = p[0], k = p[1];
        const Poly f = modified_catalan_poly(n, k);
        return Claims{
            eq("at 0", f.eval(ExactInt(0)), catalan_entry(n + 1, k - 1) + catalan_entry(n + 1, k)),
            eq("at 1", f.eval(ExactInt(1)), catalan_entry(n + 2, k)),
            eq("at 2", f.eval(ExactInt(2)), binomial(n + k + 1, k)),
        };
      },
      {{"n", 0, 40}, {"k", 0, 40}},
      ""});

  r.push_back({
      "I-nmk",
      "binom(n+k+1,k) = sum_{s=0}^{k-m} C(n+m,s) 2^{k-m-s} + sum_{t=1}^{m} A(m,t) C(n+m,k-m+t)",
      {"n", "k", "m"},
      "n > k >= m >= 1",
      [](Params p) { return p[0] > p[1] && p[1] >= p[2] && p[2] >= 1; },
      [](Params p) {
        const auto n = p[0], k = p[1], m = p[2];
        ExactInt rhs = catalan_row_sum(n + m, 0, k - m, [k, m](std::int64_t s) { return k - m - s; });
        for (std::int64_t t = 1; t <= m; ++t) rhs.addmul(alt_jacobsthal_entry(m, t), catalan_entry(n + m, k - m + t));
        return Claims{eq("row n+m expansion", binomial(n + k + 1, k), rhs)};
      },
      {{"n", 1, 30}, {"k", 1, 30}, {"m", 1, 30}},
      "t is read as the summation index, so the domain is n > k >= m >= 1."});

  r.push_back({
      "I-AC",
      "binom(n+k+1,k) = sum_{t=0}^{k} A(k,t) C(n+k,t)",
      {"n", "k"},
      "n > k >= 0",
      [](Params p) { return p[1] >= 0 && p[0] > p[1]; },
      [](Params p) {
        const auto n = p[0], k = p[1];
        ExactInt rhs;
        for (std::int64_t t = 0; t <= k; ++t) rhs.addmul(alt_jacobsthal_entry(k, t), catalan_entry(n + k, t));
        return Claims{eq("row k of A against row n+k of C", binomial(n + k + 1, k), rhs)};
      },
      {{"n", 1, 30}, {"k", 0, 29}},
      "Also holds at k = n (checked exploratorily)."});

  r.push_back({
      "I-rowsum",
      "sum_{t=1}^{m} A(m,t) = 1 and A(m,m) = 1",
      {"m"},
      "m >= 1",
      [](Params p) { return p[0] >= 1; },
      [](Params p) {
        const auto m = p[0];
        ExactInt sum;
        for (std::int64_t t = 1; t <= m; ++t) sum += alt_jacobsthal_entry(m, t);
        return Claims{eq("row sum", sum, ExactInt(1)), eq("diagonal entry", alt_jacobsthal_entry(m, m), ExactInt(1))};
      },
      {{"m", 1, 100}},
      ""});

  r.push_back({
      "I-colgf",
      "1/((1-x)(1+x)^t) = sum_{m>=t} A(m,t) x^{m-t}; 1/((1+x)(1-x)^t) = sum a_{m+1,t} x^{2m} + sum b_{m+1,t} x^{2m+1}",
      {"t"},
      "t >= 0",
      [](Params p) { return p[0] >= 0; },
      [](Params p) {
        const auto t = p[0];
        const auto col = coefficient_stream(GFId::column(t), kColumnOrder);
        const auto comp = coefficient_stream(GFId::companion_column(t), kColumnOrder);
        std::vector<ExactInt> want_col, got_col, want_comp, got_comp;
        for (std::size_t i = 0; i <= kColumnOrder; ++i) {
          const auto j = static_cast<std::int64_t>(i);
          got_col.push_back(col[i].coeff(0));
          want_col.push_back(alt_jacobsthal_entry(t + j, t));
          got_comp.push_back(comp[i].coeff(0));
          want_comp.push_back(j % 2 == 0 ? sub_a(j / 2 + 1, t) : sub_b(j / 2 + 1, t));
        }
        return Claims{eq("column t", as_poly(got_col), as_poly(want_col), "x"),
                      eq("companion", as_poly(got_comp), as_poly(want_comp), "x")};
      },
      {{"t", 0, 30}},
      "Coefficients compared up to x^40."});

  r.push_back({
      "I-sub",
      "a_{n,t} = sum_{k<=n} a_{k,t-1} + sum_{k<n} b_{k,t-1}, b_{n,t} = sum_{k<=n} (a_{k,t-1} + b_{k,t-1}); "
      "closed forms of a_{n,t}, b_{n,t} for t = 2..5",
      {"n", "t"},
      "n >= 1, t >= 1",
      [](Params p) { return p[0] >= 1 && p[1] >= 1; },
      [](Params p) {
        const auto n = p[0], t = p[1];
        const ExactInt a = sub_a(n, t), b = sub_b(n, t);
        ExactInt ra, rb;
        for (std::int64_t k = 1; k <= n; ++k) {
          ra += sub_a(k, t - 1);
          rb += sub_a(k, t - 1) + sub_b(k, t - 1);
          if (k < n) ra += sub_b(k, t - 1);
        }
        Claims out{eq("a recurrence", a, ra), eq("b recurrence", b, rb), eq("a >= 0", a.abs(), a),
                   eq("b >= 0", b.abs(), b)};
        const ExactInt N(n), N1(n + 1);
        switch (t) {
          case 2:
            out.push_back(eq("a_{n,2}", a, N));
            out.push_back(eq("b_{n,2}", b, N));
            break;
          case 3:
            out.push_back(eq("a_{n,3}", a, N * N));
            out.push_back(eq("b_{n,3}", b, N * N1));
            break;
          case 4:
            out.push_back(eq("a_{n,4}", a, ExactInt::divexact(N * N1 * ExactInt(4 * n - 1), ExactInt(6))));
            out.push_back(eq("b_{n,4}", b, ExactInt::divexact(N * N1 * ExactInt(4 * n + 5), ExactInt(6))));
            break;
          case 5:
            out.push_back(eq("a_{n,5}", a, ExactInt::divexact(N * N1 * ExactInt(2 * n * n + 2 * n - 1), ExactInt(6))));
            out.push_back(eq("b_{n,5}", b, ExactInt::divexact(N * N1 * N1 * ExactInt(n + 2), ExactInt(3))));
            break;
          default:
            break;
        }
        return out;
      },
      {{"n", 1, 50}, {"t", 1, 8}},
      "a_{m,t} = A(t+2m-2,t), b_{m,t} = -A(t+2m-1,t)."});

  r.push_back({
      "I-lembk",
      "B(m,t) = 1 - sum_{k=t}^{m-1} B(k,t-1); B(n,0) = 1, B(n,1) = 2-n, B(n,2) = 4+n(n-5)/2, "
      "B(n,3) = 8-n(n^2-9n+32)/6",
      {"m", "t"},
      "m >= t >= 0",
      [](Params p) { return p[1] >= 0 && p[0] >= p[1]; },
      [](Params p) {
        const auto m = p[0], t = p[1];
        ExactInt rhs(1);
        for (std::int64_t k = t; k <= m - 1; ++k) rhs -= b_entry(k, t - 1);
        const ExactInt b = b_entry(m, t);
        Claims out{eq("column recursion", b, rhs)};
        switch (t) {
          case 0: out.push_back(eq("B(n,0)", b, ExactInt(1))); break;
          case 1: out.push_back(eq("B(n,1)", b, ExactInt(2 - m))); break;
          case 2: out.push_back(eq("B(n,2)", b, ExactInt(4) + ExactInt::divexact(ExactInt(m * (m - 5)), ExactInt(2)))); break;
          case 3:
            out.push_back(eq("B(n,3)", b,
                             ExactInt(8) - ExactInt::divexact(ExactInt(m) * ExactInt(m * m - 9 * m + 32), ExactInt(6))));
            break;
          default: break;
        }
        return out;
      },
      {{"m", 0, 60}, {"t", 0, 60}},
      ""});

  r.push_back({
      "I-Bs",
      "B_s = sum_{t+m-2=s, t>0} A(m,t) = 1 + (-1)^s Fib(s) = sum_{k=1}^{s+1} (-1)^{k-1} Fib(k); "
      "B_{s+1} = -B_s + B_{s-1} + 1; B_s = [x^s] 1/((1-x)(1+x-x^2))",
      {"s"},
      "s >= 0",
      [](Params p) { return p[0] >= 0; },
      [](Params p) {
        const auto s = p[0];
        auto diagonal = [](std::int64_t d) {
          ExactInt acc;
          for (std::int64_t t = 1; 2 * t <= d + 2; ++t) acc += alt_jacobsthal_entry(d + 2 - t, t);
          return acc;
        };
        const ExactInt bs = diagonal(s);
        ExactInt alternating;
        for (std::int64_t k = 1; k <= s + 1; ++k) alternating += sign_pow(k - 1) * fibonacci(k);
        Claims out{
            eq("Fibonacci form", bs, ExactInt(1) + sign_pow(s) * fibonacci(s)),
            eq("alternating Fibonacci sum", bs, alternating),
            eq("series coefficient", bs, coefficient_stream(GFId::f(), static_cast<std::size_t>(s))[static_cast<std::size_t>(s)].coeff(0)),
        };
        if (s == 0) out.push_back(eq("B_0", bs, ExactInt(1)));
        if (s == 1) out.push_back(eq("B_1", bs, ExactInt(0)));
        if (s >= 1) out.push_back(eq("recurrence", diagonal(s + 1), -bs + diagonal(s - 1) + ExactInt(1)));
        return out;
      },
      {{"s", 0, 60}},
      ""});

  r.push_back({
      "I-Bsq",
      "B_{s+1}(q) = -q B_s(q) + B_{s-1}(q) + q^s, B_0 = 1, B_1 = 0; both forms of B~_s(q) agree; "
      "F(x,q) and CF(x,q) expand to B_s(q) and B~_s(q)",
      {"s"},
      "s >= 0",
      [](Params p) { return p[0] >= 0; },
      [](Params p) {
        const auto s = p[0];
        const Poly b = bq_poly(s);
        Claims out{
            eq("F(x,q) coefficient", b, bq_poly(s, Route::Series)),
            eq("CF(x,q) coefficient", bq_tilde_poly(s), bq_tilde_poly(s, Route::Series)),
            eq("signed vs absolute definition", bq_tilde_poly(s), bq_tilde_poly_abs(s)),
        };
        if (s == 0) out.push_back(eq("B_0(q)", b, Poly::one()));
        if (s == 1) out.push_back(eq("B_1(q)", b, Poly{}));
        if (s >= 1) {
          const Poly base = -(Poly::x() * b) + bq_poly(s - 1);
          out.push_back(eq("recurrence with q^{s+1}", bq_poly(s + 1),
                           base + Poly::monomial(ExactInt(1), static_cast<std::size_t>(s + 1))));
          out.push_back(eq("recurrence with q^s", bq_poly(s + 1),
                           base + Poly::monomial(ExactInt(1), static_cast<std::size_t>(s))));
        }
        return out;
      },
      {{"s", 0, 40}},
      "Full coefficient comparison. The recurrence as stated, with q^s, fails for every s >= 1; "
      "the generating function gives q^{s+1}."});

  r.push_back({
      "I-H",
      "H_m(0) = H_m(1) = 1; H_m(-1) = J_m = sum_r binom(m-r-1,r) 2^r = J_m(1); J_m(q) = H_m(-q) = sum |A(m,t)| q^{m-t}; "
      "Q(x,q) and Q(x,-q) expand to H_m(q) and J_m(q)",
      {"m"},
      "m >= 1",
      [](Params p) { return p[0] >= 1; },
      [](Params p) {
        const auto m = p[0];
        const Poly h = h_poly(m);
        const Poly j = j_poly(m);
        std::vector<ExactInt> abs_row(static_cast<std::size_t>(m));
        for (std::int64_t t = 1; t <= m; ++t) abs_row[static_cast<std::size_t>(m - t)] = alt_jacobsthal_entry(m, t).abs();
        ExactInt binomial_sum;
        for (std::int64_t r = 0; r <= (m - 1) / 2; ++r) binomial_sum.addmul(binomial(m - r - 1, r), pow2(r));
        const ExactInt jm = jacobsthal(m);
        return Claims{
            eq("H_m(0)", h.eval(ExactInt(0)), ExactInt(1)),
            eq("H_m(1)", h.eval(ExactInt(1)), ExactInt(1)),
            eq("H_m(-1) = J_m", h.eval(ExactInt(-1)), jm),
            eq("binomial sum = J_m", binomial_sum, jm),
            eq("J_m(1) = J_m", j.eval(ExactInt(1)), jm),
            eq("J_m(q) = sum |A(m,t)| q^{m-t}", j, Poly(std::move(abs_row))),
            eq("Q(x,q) coefficient", h, h_poly(m, Route::Series)),
            eq("Q(x,-q) coefficient", j, j_poly(m, Route::Series)),
        };
      },
      {{"m", 1, 50}},
      "J_m comes from J_m = J_{m-1} + 2 J_{m-2}."});

  r.push_back({
      "I-L",
      "L_{l+1} = -x/(1-x) L_l + x^{l+2}/(1-x) reproduces the q^l slice of Q(x,q); lowest degree l+1+[l odd]; "
      "L_0..L_3 closed forms",
      {"l"},
      "l >= 0",
      [](Params p) { return p[0] >= 0; },
      [](Params p) {
        const auto ell = p[0];
        const auto rec = l_series(ell, kLOrder);
        Claims out{eq("recursion = q-slice of Q", as_poly(rec), as_poly(l_series_from_q(ell, kLOrder)), "x")};
        const auto low = as_poly(rec).valuation();
        out.push_back(eq("lowest degree", ExactInt(low ? static_cast<std::int64_t>(*low) : -1),
                         ExactInt(ell + 1 + (ell % 2 == 1 ? 1 : 0))));
        std::vector<ExactInt> closed;
        switch (ell) {
          case 0: closed = expand_x(Poly{0, 1}, Poly{1, -1}, kLOrder); break;
          case 1: {
            closed = expand_x(Poly{0, 0, 0, -1}, one_minus_x_pow(2), kLOrder);
            std::vector<ExactInt> direct(kLOrder + 1);
            for (std::size_t n = 1; n + 2 <= kLOrder; ++n) direct[n + 2] = -ExactInt(static_cast<std::int64_t>(n));
            out.push_back(eq("-sum n x^{n+2}", as_poly(rec), as_poly(direct), "x"));
            break;
          }
          case 2: closed = expand_x(Poly{0, 0, 0, 1, -1, 1}, one_minus_x_pow(3), kLOrder); break;
          case 3: closed = expand_x(Poly{0, 0, 0, 0, 0, -2, 2, -1}, one_minus_x_pow(4), kLOrder); break;
          default: break;
        }
        if (!closed.empty()) out.push_back(eq("closed form", as_poly(rec), as_poly(closed), "x"));
        return out;
      },
      {{"l", 0, 15}},
      "Series compared to order 60."});

  r.push_back({
      "I-k",
      "H_{k,m}(1) = k^{floor((m-1)/2)}; [x^m] Q_k(x,1) = k^{ceil(m/2)-1}; triangle and series constructions of "
      "H_{k,m}, J_{k,m}, B_{k,m-1}, B~_{k,m-1}, column m and L_{k,m-1} agree",
      {"k", "m"},
      "k != 0, m >= 1",
      [](Params p) { return p[0] != 0 && p[1] >= 1; },
      [](Params p) {
        const auto k = p[0], m = p[1];
        const Poly h = hk_poly(k, m);
        const auto s = m - 1;
        const auto q1 = coefficient_stream(GFId::qk_at_q1(k), static_cast<std::size_t>(m));
        const auto col = coefficient_stream(GFId::ak_column(k, m), kColumnOrder);
        std::vector<ExactInt> got_col, want_col;
        for (std::size_t i = 0; i <= kColumnOrder; ++i) {
          got_col.push_back(col[i].coeff(0));
          want_col.push_back(k_analog_entry(k, m + static_cast<std::int64_t>(i), m));
        }
        ExactInt abs_sum;
        for (std::int64_t t = 1; t <= m; ++t) abs_sum += k_analog_entry(k, m, t).abs();
        Claims out{
            eq("base column", k_analog_entry(k, m, 0), ipow(k, m / 2)),
            eq("H_{k,m}(1)", h.eval(ExactInt(1)), ipow(k, (m - 1) / 2)),
            eq("Q_k(x,1) coefficient", q1[static_cast<std::size_t>(m)].coeff(0), ipow(k, (m + 1) / 2 - 1)),
            eq("Q_k coefficient", h, hk_poly(k, m, Route::Series)),
            eq("J_{k,m} series", jk_poly(k, m), jk_poly(k, m, Route::Series)),
            eq("F_k coefficient", bk_poly(k, s), bk_poly(k, s, Route::Series)),
            eq("CF_k coefficient", bk_tilde_poly(k, s), bk_tilde_poly(k, s, Route::Series)),
            eq("column generating function", as_poly(got_col), as_poly(want_col), "x"),
            eq("L_k recursion = q-slice of Q_k", as_poly(lk_series(k, s, kLkOrder)),
               as_poly(lk_series_from_q(k, s, kLkOrder)), "x"),
        };
        // Row signs only alternate for k > 0.
        if (k > 0) out.push_back(eq("J_{k,m}(1) = sum |A_k(m,t)|", jk_poly(k, m).eval(ExactInt(1)), abs_sum));
        return out;
      },
      {{"k", -3, 3}, {"m", 1, 30}},
      "k = 0 lies outside the domain and is skipped. J_{k,m}(1) = sum |A_k(m,t)| is checked for k > 0 only; "
      "for k < 0 it fails (k=-1, m=3: 1 vs 3)."});

  r.push_back({
      "I-k2diag",
      "sum_{m+t=2s, t>0} A_2(m,t) = Fib(2s); -sum_{m+t=2s+1, t>0} A_2(m,t) = Dyck paths of length 2(s+1) and height 3",
      {"s"},
      "s >= 1",
      [](Params p) { return p[0] >= 1; },
      [](Params p) {
        const auto s = p[0];
        ExactInt even, odd;
        for (std::int64_t t = 1; t <= s; ++t) even += k_analog_entry(2, 2 * s - t, t);
        for (std::int64_t t = 1; 2 * t <= 2 * s + 1; ++t) odd -= k_analog_entry(2, 2 * s + 1 - t, t);
        Claims out{eq("even diagonal", even, fibonacci(2 * s)),
                   eq("odd diagonal", odd, count_dyck_height(2 * (s + 1), 3))};
        if (const auto* seq = oeis::find_bundled("A258109")) {
          if (const auto* term = seq->term(s)) out.push_back(eq("odd diagonal vs bundled A258109", odd, *term));
        }
        return out;
      },
      {{"s", 1, 20}},
      ""});

  r.push_back({
      "I-km1diag",
      "sum_{m+t=2s} A_{-1}(m,t) = Fib(s-1)^2; |A_{-1}(s,4)| = floor(binom(s-1,2)/2); sum_{t>=2} |A_{-1}(s,t)| vs A007910",
      {"s"},
      "s >= 2",
      [](Params p) { return p[0] >= 2; },
      [](Params p) {
        const auto s = p[0];
        ExactInt diag;
        for (std::int64_t t = 0; t <= s; ++t) diag += k_analog_entry(-1, 2 * s - t, t);
        const ExactInt f = fibonacci(s - 1);
        Claims out{eq("even diagonal", diag, f * f)};
        static const std::int64_t kPrinted[] = {1, 1, 4, 9, 25, 64, 169, 441};
        if (s - 2 < static_cast<std::int64_t>(std::size(kPrinted))) {
          out.push_back(eq("printed list", diag, ExactInt(kPrinted[s - 2])));
        }
        if (s >= 4) {
          const ExactInt b = binomial(s - 1, 2);
          out.push_back(eq("|A_{-1}(s,4)|", k_analog_entry(-1, s, 4).abs(), ExactInt::divexact(b - (b.is_even() ? ExactInt(0) : ExactInt(1)), ExactInt(2))));
        }
        ExactInt tail;
        for (std::int64_t t = 2; t <= s; ++t) tail += k_analog_entry(-1, s, t).abs();
        if (const auto* seq = oeis::find_bundled("A007910")) {
          if (const auto* term = seq->term(s)) out.push_back(eq("row tail vs bundled A007910", tail, *term));
        }
        return out;
      },
      {{"s", 2, 20}},
      "The diagonal includes the t = 0 entry; the printed list starts at s = 2 with Fib(1)^2."});

  return r;
}

}  // namespace

std::string value_to_string(const Value& v, std::string_view var) {
  if (const auto* i = std::get_if<ExactInt>(&v)) return i->to_string();
  return std::get<Poly>(v).to_string(var);
}

const std::vector<IdentityRecord>& identities() {
  static const std::vector<IdentityRecord> catalog = make_catalog();
  return catalog;
}

const IdentityRecord& find_identity(std::string_view id) {
  for (const auto& rec : identities()) {
    if (rec.id == id) return rec;
  }
  throw DomainError("unknown identity: " + std::string(id));
}

CheckResult check(std::string_view id, std::vector<std::int64_t> params, bool unsafe_domain) {
  const IdentityRecord& rec = find_identity(id);
  if (params.size() != rec.params.size()) {
    throw DomainError(rec.id + " takes " + std::to_string(rec.params.size()) + " parameters");
  }
  if (!unsafe_domain && !rec.in_domain(params)) throw DomainError("parameters outside the domain of " + rec.id + ": " + rec.domain);

  CheckResult result;
  result.claims = rec.evaluate(params);
  for (const auto& c : result.claims) {
    if (!c.holds()) {
      result.holds = false;
      result.lhs = c.lhs;
      result.rhs = c.rhs;
      result.failed_claim = c.label;
      return result;
    }
  }
  if (!result.claims.empty()) {
    result.lhs = result.claims.front().lhs;
    result.rhs = result.claims.front().rhs;
  }
  return result;
}

SweepReport sweep(std::string_view id, const Box& box, const SweepOptions& options) {
  const IdentityRecord& rec = find_identity(id);
  for (const auto& range : box) {
    if (std::find(rec.params.begin(), rec.params.end(), range.name) == rec.params.end()) {
      throw DomainError(rec.id + " has no parameter `" + range.name + "`");
    }
  }

  // Ranges in the record's parameter order.
  Box ranges;
  for (const auto& name : rec.params) {
    auto it = std::find_if(box.begin(), box.end(), [&](const ParamRange& p) { return p.name == name; });
    if (it == box.end()) {
      it = std::find_if(rec.default_box.begin(), rec.default_box.end(), [&](const ParamRange& p) { return p.name == name; });
    }
    ranges.push_back(*it);
  }

  std::uint64_t total = 1;
  for (const auto& range : ranges) {
    if (range.hi < range.lo) {
      total = 0;
      break;
    }
    total *= static_cast<std::uint64_t>(range.hi - range.lo + 1);
  }

  struct Part {
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    std::vector<Failure> failures;
    std::exception_ptr error;
  };

  auto run = [&](std::uint64_t begin, std::uint64_t end, Part& part) {
    try {
      std::vector<std::int64_t> tuple(ranges.size());
      for (std::uint64_t index = begin; index < end; ++index) {
        std::uint64_t rest = index;
        for (std::size_t i = ranges.size(); i-- > 0;) {
          const auto width = static_cast<std::uint64_t>(ranges[i].hi - ranges[i].lo + 1);
          tuple[i] = ranges[i].lo + static_cast<std::int64_t>(rest % width);
          rest /= width;
        }
        const bool inside = rec.in_domain(tuple);
        if (!inside && !options.unsafe_domain) {
          ++part.skipped;
          continue;
        }
        std::vector<Claim> claims;
        try {
          claims = rec.evaluate(tuple);
        } catch (const DomainError& e) {
          if (!inside) {
            ++part.skipped;
            continue;
          }
          part.failures.push_back({tuple, std::string("evaluation error: ") + e.what(), "", ""});
          ++part.checked;
          continue;
        }
        ++part.checked;
        for (const auto& c : claims) {
          if (!c.holds()) {
            part.failures.push_back({tuple, c.label, value_to_string(c.lhs, c.var), value_to_string(c.rhs, c.var)});
            break;
          }
        }
      }
    } catch (...) {
      part.error = std::current_exception();
    }
  };

  const auto start = std::chrono::steady_clock::now();
  const unsigned workers = std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(std::max<std::uint64_t>(total, 1))));
  std::vector<Part> parts(workers);
  if (workers == 1) {
    run(0, total, parts[0]);
  } else {
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(total, w * chunk);
      const std::uint64_t end = std::min(total, begin + chunk);
      threads.emplace_back(run, begin, end, std::ref(parts[w]));
    }
    for (auto& t : threads) t.join();
  }
  const auto stop = std::chrono::steady_clock::now();

  SweepReport report;
  report.id = rec.id;
  report.box = ranges;
  report.exploratory = options.unsafe_domain;
  for (auto& part : parts) {
    if (part.error) std::rethrow_exception(part.error);
    report.checked += part.checked;
    report.skipped += part.skipped;
    for (auto& f : part.failures) report.failures.push_back(std::move(f));
  }
  report.millis = std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

SweepReport sweep_default(std::string_view id, const SweepOptions& options) {
  return sweep(id, find_identity(id).default_box, options);
}

std::string to_json(const SweepReport& report, bool timing) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["id"] = report.id;
  ordered_json box = ordered_json::object();
  for (const auto& r : report.box) box[r.name] = {r.lo, r.hi};
  j["box"] = box;
  j["checked"] = report.checked;
  j["skipped"] = report.skipped;
  ordered_json failures = ordered_json::array();
  for (const auto& f : report.failures) {
    ordered_json params = ordered_json::object();
    for (std::size_t i = 0; i < f.params.size() && i < report.box.size(); ++i) params[report.box[i].name] = f.params[i];
    failures.push_back({{"params", params}, {"claim", f.claim}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  j["failures"] = failures;
  j["millis"] = timing ? static_cast<std::int64_t>(report.millis + 0.5) : 0;
  j["exploratory"] = report.exploratory;
  return j.dump();
}

}  // namespace catjac
