#include "catjac/series.hpp"

#include <algorithm>
#include <sstream>

#include "catjac/errors.hpp"

namespace catjac {

namespace {
const Poly kZeroPoly{};
}  // namespace

BiPoly::BiPoly(std::vector<Poly> x_coeffs) : coeffs_(std::move(x_coeffs)) { normalize(); }

BiPoly BiPoly::from_x(const Poly& p) {
  std::vector<Poly> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return BiPoly(std::move(v));
}

BiPoly BiPoly::from_terms(std::initializer_list<Poly> x_coeffs) {
  return BiPoly(std::vector<Poly>(x_coeffs));
}

void BiPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Poly& BiPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZeroPoly;
}

BiPoly BiPoly::negate_q() const {
  std::vector<Poly> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.negate_variable());
  return BiPoly(std::move(v));
}

Poly BiPoly::eval_q(const ExactInt& q) const {
  std::vector<ExactInt> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.eval(q));
  return Poly(std::move(v));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Poly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return BiPoly(std::move(out));
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << coeffs_[i].to_string("q") << ')';
    if (i == 1) os << "*x";
    if (i > 1) os << "*x^" << i;
  }
  return os.str();
}

void RationalGF::validate() const {
  if (denominator.coeff(0) != Poly::one()) {
    throw InvalidDenominator("denominator constant term must be 1, got " +
                             denominator.coeff(0).to_string("q"));
  }
}

std::string RationalGF::to_string() const {
  return "[" + numerator.to_string() + "] / [" + denominator.to_string() + "]";
}

std::vector<Poly> gf_expand(const RationalGF& g, std::size_t order) {
  g.validate();
  const auto& den = g.denominator.coeffs();
  std::vector<Poly> c(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    Poly acc = g.numerator.coeff(i);
    const std::size_t top = std::min(i, den.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) {
      if (den[j].is_zero()) continue;
      acc -= den[j] * c[i - j];
    }
    c[i] = std::move(acc);
  }
  return c;
}

std::vector<Poly> mul_truncated(const BiPoly& a, const std::vector<Poly>& series, std::size_t order) {
  std::vector<Poly> out(order + 1);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (std::size_t j = 0; j < series.size() && i + j <= order; ++j) {
      out[i + j] += a.coeff(i) * series[j];
    }
  }
  return out;
}

}  // namespace catjac
