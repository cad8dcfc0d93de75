#pragma once
// Reference computations used only by the tests. Each one is written from a
// different formula than the library uses, so agreement means something.

#include <cstdint>
#include <vector>

#include "catjac/exact_int.hpp"
#include "catjac/poly.hpp"

namespace oracle {

using catjac::ExactInt;

inline ExactInt factorial(std::int64_t n) {
  ExactInt r(1);
  for (std::int64_t i = 2; i <= n; ++i) r *= ExactInt(i);
  return r;
}

// n! / (k! (n-k)!)
inline ExactInt binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n || n < 0) return ExactInt(0);
  return ExactInt::divexact(factorial(n), factorial(k) * factorial(n - k));
}

// Ballot-number form C(n,k) = (n-k+1)/(n+1) binom(n+k,k).
inline ExactInt catalan_entry(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return ExactInt(0);
  return ExactInt::divexact(ExactInt(n - k + 1) * binom(n + k, k), ExactInt(n + 1));
}

inline ExactInt fib(std::int64_t s) {
  ExactInt a(0), b(1);
  for (std::int64_t i = 0; i < s; ++i) {
    ExactInt c = a + b;
    a = b;
    b = c;
  }
  return a;
}

// Closed form (2^m - (-1)^m) / 3.
inline ExactInt jacobsthal(std::int64_t m) {
  const ExactInt p = ExactInt::pow(ExactInt(2), static_cast<unsigned>(m));
  return ExactInt::divexact(p - ExactInt(m % 2 == 0 ? 1 : -1), ExactInt(3));
}

inline ExactInt pell(std::int64_t s) {
  ExactInt a(0), b(1);
  for (std::int64_t i = 0; i < s; ++i) {
    ExactInt c = ExactInt(2) * b + a;
    a = b;
    b = c;
  }
  return a;
}

// A(m,t) by the signed binomial sum obtained from 1/((1-x)(1+x)^t):
// A(m,t) = sum_{j=0}^{m-t} (-1)^j binom(t-1+j, j) for t >= 1.
inline ExactInt alt_jacobsthal(std::int64_t m, std::int64_t t) {
  if (t < 0 || t > m) return ExactInt(0);
  if (t == 0) return ExactInt(1);
  ExactInt s;
  for (std::int64_t j = 0; j <= m - t; ++j) s += ExactInt(j % 2 == 0 ? 1 : -1) * binom(t - 1 + j, j);
  return s;
}

// Walks every up/down word of length `len` and keeps the Dyck words with the
// given maximum height. Only for small len.
inline std::int64_t dyck_height_brute(int len, int h) {
  std::int64_t count = 0;
  for (std::uint32_t w = 0; w < (1u << len); ++w) {
    int y = 0, top = 0;
    bool ok = true;
    for (int i = 0; i < len && ok; ++i) {
      y += (w >> i) & 1u ? 1 : -1;
      ok = y >= 0;
      top = y > top ? y : top;
    }
    if (ok && y == 0 && top == h) ++count;
  }
  return count;
}

// Coefficients of num/den up to x^order by repeated subtraction of multiples
// of the denominator (schoolbook long division). den(0) must be 1.
inline std::vector<ExactInt> long_divide(const catjac::Poly& num, const catjac::Poly& den, std::size_t order) {
  std::vector<ExactInt> rem(order + 1), out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) rem[i] = num.coeff(i);
  for (std::size_t i = 0; i <= order; ++i) {
    out[i] = rem[i];
    for (std::size_t j = 0; i + j <= order; ++j) rem[i + j] -= out[i] * den.coeff(j);
  }
  return out;
}

}  // namespace oracle
