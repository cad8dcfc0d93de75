#include "catjac/exact_int.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace catjac {

ExactInt::ExactInt(std::int64_t v) {
  // mpz_class has no portable int64 constructor; go through the sign split.
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
    value_ = static_cast<long>(v);
  } else {
    value_ = std::to_string(v);
  }
}

ExactInt ExactInt::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("bad integer literal: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return ExactInt(mpz_class(s, 10));
}

ExactInt ExactInt::pow(const ExactInt& base, unsigned exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.value_.get_mpz_t(), exponent);
  return ExactInt(std::move(r));
}

ExactInt ExactInt::divexact(const ExactInt& num, const ExactInt& den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  if (mpz_divisible_p(num.value_.get_mpz_t(), den.value_.get_mpz_t()) == 0) {
    throw std::domain_error(num.to_string() + " is not divisible by " + den.to_string());
  }
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), num.value_.get_mpz_t(), den.value_.get_mpz_t());
  return ExactInt(std::move(r));
}

bool ExactInt::fits_int64() const {
  static const mpz_class lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const mpz_class hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return value_ >= lo && value_ <= hi;
}

std::int64_t ExactInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("value does not fit in int64: " + to_string());
  return std::stoll(to_string());
}

std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.to_string(); }

ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
  if (k < 0 || k > n) return ExactInt{};
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return ExactInt(std::move(r));
}

ExactInt ipow(std::int64_t base, std::int64_t exponent) {
  if (exponent < 0) throw std::invalid_argument("ipow: negative exponent");
  return ExactInt::pow(ExactInt(base), static_cast<unsigned>(exponent));
}

}  // namespace catjac
