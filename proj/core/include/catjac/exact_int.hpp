#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace catjac {

/// Arbitrary-precision signed integer.
///
/// Thin value wrapper over a GMP integer. Every count and coefficient in the
/// library lives in this type, so arithmetic never overflows. Zero has a
/// single canonical representation.
class ExactInt {
 public:
  ExactInt() = default;
  ExactInt(std::int64_t v);  // NOLINT(google-explicit-constructor)
  ExactInt(int v) : ExactInt(static_cast<std::int64_t>(v)) {}  // NOLINT
  explicit ExactInt(mpz_class v) : value_(std::move(v)) {}

  /// Parses an optionally signed decimal string. Throws std::invalid_argument.
  static ExactInt parse(std::string_view text);

  static ExactInt pow(const ExactInt& base, unsigned exponent);

  /// Exact quotient; throws std::domain_error when `den` does not divide `num`.
  static ExactInt divexact(const ExactInt& num, const ExactInt& den);

  ExactInt& operator+=(const ExactInt& o) { value_ += o.value_; return *this; }
  ExactInt& operator-=(const ExactInt& o) { value_ -= o.value_; return *this; }
  ExactInt& operator*=(const ExactInt& o) { value_ *= o.value_; return *this; }

  /// this += a * b without a temporary.
  void addmul(const ExactInt& a, const ExactInt& b) {
    mpz_addmul(value_.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  }
  /// this -= a * b without a temporary.
  void submul(const ExactInt& a, const ExactInt& b) {
    mpz_submul(value_.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  }

  friend ExactInt operator+(ExactInt a, const ExactInt& b) { return a += b; }
  friend ExactInt operator-(ExactInt a, const ExactInt& b) { return a -= b; }
  friend ExactInt operator*(ExactInt a, const ExactInt& b) { return a *= b; }
  ExactInt operator-() const { return ExactInt(mpz_class(-value_)); }

  friend bool operator==(const ExactInt& a, const ExactInt& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_even() const { return mpz_even_p(value_.get_mpz_t()) != 0; }
  [[nodiscard]] ExactInt abs() const { return ExactInt(mpz_class(::abs(value_))); }

  [[nodiscard]] bool fits_int64() const;
  /// Throws std::overflow_error when the value does not fit.
  [[nodiscard]] std::int64_t to_int64() const;
  [[nodiscard]] std::string to_string() const { return value_.get_str(10); }

  [[nodiscard]] const mpz_class& raw() const { return value_; }

 private:
  mpz_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactInt& v);

/// Binomial coefficient n choose k; zero when k < 0 or k > n. Requires n >= 0.
ExactInt binomial(std::int64_t n, std::int64_t k);

/// k-th power of an integer base, k >= 0.
ExactInt ipow(std::int64_t base, std::int64_t exponent);

}  // namespace catjac
