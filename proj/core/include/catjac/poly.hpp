#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catjac/exact_int.hpp"

namespace catjac {

/// Dense univariate polynomial over ExactInt.
///
/// `coeff(i)` is the coefficient of var^i. The coefficient vector is kept
/// normalized: either empty (the zero polynomial) or with a nonzero last entry.
/// The variable name is presentation only; the same type carries polynomials
/// in q and truncated power series in x.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<std::int64_t> coeffs);
  explicit Poly(std::vector<ExactInt> coeffs);
  /// Constant polynomial.
  explicit Poly(ExactInt c);

  static Poly monomial(ExactInt c, std::size_t power);
  static Poly x() { return monomial(ExactInt(1), 1); }
  static Poly one() { return Poly(ExactInt(1)); }

  /// Degree, or std::nullopt for the zero polynomial (degree minus infinity).
  [[nodiscard]] std::optional<std::size_t> degree() const;
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Number of stored coefficients (degree + 1, or 0 for zero).
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of var^i; zero past the degree.
  [[nodiscard]] const ExactInt& coeff(std::size_t i) const;
  [[nodiscard]] std::span<const ExactInt> coeffs() const { return coeffs_; }

  /// Horner evaluation.
  [[nodiscard]] ExactInt eval(const ExactInt& v) const;

  /// p(var) -> p(-var).
  [[nodiscard]] Poly negate_variable() const;
  /// Multiplies by var^n.
  [[nodiscard]] Poly shift(std::size_t n) const;
  /// Keeps only terms of degree <= max_degree.
  [[nodiscard]] Poly truncate(std::size_t max_degree) const;
  /// Lowest power with a nonzero coefficient; nullopt for zero.
  [[nodiscard]] std::optional<std::size_t> valuation() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const ExactInt& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const ExactInt& c) { return a *= c; }
  friend Poly operator*(const ExactInt& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Descending-power text, e.g. `q^4 - 2*q^3 + 4*q^2 - 3*q + 1`.
  [[nodiscard]] std::string to_string(std::string_view var = "q") const;

 private:
  void normalize();

  std::vector<ExactInt> coeffs_;
};

Poly pow(const Poly& base, unsigned exponent);

}  // namespace catjac
