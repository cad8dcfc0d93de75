#include "catjac/poly.hpp"

#include <algorithm>
#include <sstream>

namespace catjac {

namespace {
const ExactInt kZero{};
}  // namespace

Poly::Poly(std::initializer_list<std::int64_t> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Poly::Poly(std::vector<ExactInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(ExactInt c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

Poly Poly::monomial(ExactInt c, std::size_t power) {
  if (c.is_zero()) return {};
  std::vector<ExactInt> v(power + 1);
  v[power] = std::move(c);
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const ExactInt& Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

ExactInt Poly::eval(const ExactInt& v) const {
  ExactInt acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= v;
    acc += *it;
  }
  return acc;
}

Poly Poly::negate_variable() const {
  Poly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

Poly Poly::shift(std::size_t n) const {
  if (is_zero() || n == 0) return *this;
  std::vector<ExactInt> v(n);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(v));
}

Poly Poly::truncate(std::size_t max_degree) const {
  if (coeffs_.size() <= max_degree + 1) return *this;
  return Poly(std::vector<ExactInt>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(max_degree + 1)));
}

std::optional<std::size_t> Poly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return i;
  }
  return std::nullopt;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const ExactInt& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j].addmul(a.coeffs_[i], b.coeffs_[j]);
    }
  }
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const ExactInt& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const ExactInt mag = c.abs();
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == ExactInt(1);
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result = Poly::one();
  Poly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

}  // namespace catjac
