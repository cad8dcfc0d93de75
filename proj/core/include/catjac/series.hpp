#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "catjac/poly.hpp"

namespace catjac {

/// Polynomial in x whose coefficients are polynomials in q.
///
/// Entry i is the coefficient of x^i. Trailing zero entries are trimmed.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<Poly> x_coeffs);
  /// Lifts a polynomial in x with constant (q-free) coefficients.
  static BiPoly from_x(const Poly& p);
  /// Sum of c_{i} x^{i} where c_{i} is taken from the list (q-polynomials).
  static BiPoly from_terms(std::initializer_list<Poly> x_coeffs);

  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const Poly& coeff(std::size_t i) const;
  [[nodiscard]] const std::vector<Poly>& coeffs() const { return coeffs_; }

  /// q -> -q in every coefficient.
  [[nodiscard]] BiPoly negate_q() const;
  /// Specializes q to an integer, leaving a polynomial in x.
  [[nodiscard]] Poly eval_q(const ExactInt& q) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Text form such as `(q)*x + (1)*x^2`, grouped by x-power.
  [[nodiscard]] std::string to_string() const;

 private:
  void normalize();

  std::vector<Poly> coeffs_;
};

/// numerator / denominator, with the denominator's x^0 coefficient equal to 1.
struct RationalGF {
  BiPoly numerator;
  BiPoly denominator;

  /// Throws InvalidDenominator when the constant term of the denominator is not 1.
  void validate() const;
  [[nodiscard]] std::string to_string() const;
};

/// Power-series coefficients c_0..c_order of numerator/denominator.
///
/// Uses the recurrence c_i = n_i - sum_{j>=1} d_j c_{i-j}, which needs
/// d_0 = 1 and never divides. Throws InvalidDenominator otherwise.
std::vector<Poly> gf_expand(const RationalGF& g, std::size_t order);

/// Truncated product of a coefficient sequence with a BiPoly (mod x^{order+1}).
std::vector<Poly> mul_truncated(const BiPoly& a, const std::vector<Poly>& series, std::size_t order);

}  // namespace catjac
