#include "catjac/polyfam.hpp"

#include <algorithm>
#include <map>

#include "catjac/errors.hpp"
#include "catjac/genfun.hpp"
#include "catjac/triangles.hpp"

namespace catjac {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

Poly series_coeff(const GFId& id, std::int64_t index) {
  return coefficient_stream(id, static_cast<std::size_t>(index))[static_cast<std::size_t>(index)];
}

// sum_{t=1}^{m} entry(m,t) q^{m-t}
template <typename Entry>
Poly row_poly(std::int64_t m, Entry entry) {
  std::vector<ExactInt> coeffs(static_cast<std::size_t>(m));
  for (std::int64_t t = 1; t <= m; ++t) coeffs[static_cast<std::size_t>(m - t)] = entry(m, t);
  return Poly(std::move(coeffs));
}

// sum over t + m - 2 = s, t > 0 of entry(m,t) q^{m-t}
template <typename Entry>
Poly diagonal_poly(std::int64_t s, Entry entry) {
  Poly out;
  for (std::int64_t t = 1; 2 * t <= s + 2; ++t) {
    const std::int64_t m = s + 2 - t;
    out += Poly::monomial(entry(m, t), static_cast<std::size_t>(m - t));
  }
  return out;
}

Poly signed_q_power(std::int64_t s, const ExactInt& scale) {
  return Poly::monomial(scale, static_cast<std::size_t>(s));
}

std::vector<ExactInt> divide_by_one_minus_x(std::vector<ExactInt> v) {
  for (std::size_t i = 1; i < v.size(); ++i) v[i] += v[i - 1];
  return v;
}

std::vector<ExactInt> l_recursion(std::int64_t k, std::int64_t ell, std::size_t order) {
  require(ell >= 0, "L_l needs l >= 0");
  // L_0 = x/(1-x)
  std::vector<ExactInt> cur(order + 1);
  for (std::size_t i = 1; i <= order; ++i) cur[i] = ExactInt(1);
  for (std::int64_t l = 0; l < ell; ++l) {
    std::vector<ExactInt> next(order + 1);
    for (std::size_t i = order; i >= 1; --i) next[i] = -cur[i - 1];
    const auto lead = static_cast<std::size_t>(l + 2);
    if (lead <= order) next[lead] += ipow(k, (l + 1) / 2);
    cur = divide_by_one_minus_x(std::move(next));
  }
  return cur;
}

std::vector<ExactInt> q_slice(const GFId& id, std::int64_t ell, std::size_t order) {
  require(ell >= 0, "L_l needs l >= 0");
  const auto coeffs = coefficient_stream(id, order);
  std::vector<ExactInt> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) out[i] = coeffs[i].coeff(static_cast<std::size_t>(ell));
  return out;
}

}  // namespace

Poly catalan_poly(std::int64_t n, std::int64_t k) {
  require(n >= 0 && k >= 0 && k <= n, "catalan_poly needs 0 <= k <= n");
  std::vector<ExactInt> coeffs(static_cast<std::size_t>(k + 1));
  for (std::int64_t s = 0; s <= k; ++s) coeffs[static_cast<std::size_t>(k - s)] = catalan_entry(n, s);
  return Poly(std::move(coeffs));
}

Poly modified_catalan_poly(std::int64_t n, std::int64_t k) {
  require(n >= 0 && k >= 0 && k <= n, "modified_catalan_poly needs 0 <= k <= n");
  Poly out;
  for (std::int64_t s = 0; s <= k; ++s) {
    out += Poly::monomial(catalan_entry(n + 1, s), static_cast<std::size_t>(std::max<std::int64_t>(k - 1 - s, 0)));
  }
  return out;
}

Poly h_poly(std::int64_t m, Route route) {
  require(m >= 1, "H_m needs m >= 1");
  if (route == Route::Series) return series_coeff(GFId::q(), m);
  return row_poly(m, [](std::int64_t r, std::int64_t t) { return alt_jacobsthal_entry(r, t); });
}

Poly j_poly(std::int64_t m, Route route) {
  require(m >= 1, "J_m needs m >= 1");
  if (route == Route::Series) return series_coeff(GFId::qminus(), m);
  return h_poly(m, Route::Triangle).negate_variable();
}

Poly bq_poly(std::int64_t s, Route route) {
  require(s >= 0, "B_s needs s >= 0");
  if (route == Route::Series) return series_coeff(GFId::fq(), s);
  return diagonal_poly(s, [](std::int64_t m, std::int64_t t) { return alt_jacobsthal_entry(m, t); });
}

Poly bq_tilde_poly(std::int64_t s, Route route) {
  require(s >= 0, "B~_s needs s >= 0");
  if (route == Route::Series) return series_coeff(GFId::cfq(), s);
  const ExactInt sign = s % 2 == 0 ? ExactInt(1) : ExactInt(-1);
  return bq_poly(s, Route::Triangle) * sign - signed_q_power(s, sign);
}

Poly bq_tilde_poly_abs(std::int64_t s) {
  require(s >= 0, "B~_s needs s >= 0");
  const ExactInt sign = s % 2 == 0 ? ExactInt(-1) : ExactInt(1);
  return diagonal_poly(s, [](std::int64_t m, std::int64_t t) { return alt_jacobsthal_entry(m, t).abs(); }) +
         signed_q_power(s, sign);
}

Poly fib_poly(std::int64_t s, Route route) {
  require(s >= 0, "Fibonacci polynomial needs s >= 0");
  if (route == Route::Series) return series_coeff(GFId::fib_poly(), s);
  // F_0 = 1, F_1 = q, F_s = q F_{s-1} + F_{s-2}
  Poly prev = Poly::one();
  Poly cur = Poly::x();
  if (s == 0) return prev;
  for (std::int64_t i = 2; i <= s; ++i) {
    Poly next = cur.shift(1) + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly hk_poly(std::int64_t k, std::int64_t m, Route route) {
  require(k != 0 && m >= 1, "H_{k,m} needs k != 0 and m >= 1");
  if (route == Route::Series) return series_coeff(GFId::qk(k), m);
  return row_poly(m, [k](std::int64_t r, std::int64_t t) { return k_analog_entry(k, r, t); });
}

Poly jk_poly(std::int64_t k, std::int64_t m, Route route) {
  require(k != 0 && m >= 1, "J_{k,m} needs k != 0 and m >= 1");
  if (route == Route::Series) return series_coeff(GFId::jk_intro(k), m);
  return hk_poly(k, m, Route::Triangle).negate_variable();
}

Poly bk_poly(std::int64_t k, std::int64_t s, Route route) {
  require(k != 0 && s >= 0, "B_{k,s} needs k != 0 and s >= 0");
  if (route == Route::Series) return series_coeff(GFId::fk(k), s);
  return diagonal_poly(s, [k](std::int64_t m, std::int64_t t) { return k_analog_entry(k, m, t); });
}

Poly bk_tilde_poly(std::int64_t k, std::int64_t s, Route route) {
  require(k != 0 && s >= 0, "B~_{k,s} needs k != 0 and s >= 0");
  if (route == Route::Series) return series_coeff(GFId::cfk(k), s);
  // [x^s] (1+qx)/(1-kq^2x^2) = k^floor(s/2) q^s
  const ExactInt sign = s % 2 == 0 ? ExactInt(1) : ExactInt(-1);
  return (bk_poly(k, s, Route::Triangle) - signed_q_power(s, ipow(k, s / 2))) * sign;
}

std::vector<ExactInt> l_series(std::int64_t ell, std::size_t order) { return l_recursion(1, ell, order); }

std::vector<ExactInt> lk_series(std::int64_t k, std::int64_t ell, std::size_t order) {
  require(k != 0, "L_{k,l} needs k != 0");
  return l_recursion(k, ell, order);
}

std::vector<ExactInt> l_series_from_q(std::int64_t ell, std::size_t order) {
  return q_slice(GFId::q(), ell, order);
}

std::vector<ExactInt> lk_series_from_q(std::int64_t k, std::int64_t ell, std::size_t order) {
  require(k != 0, "L_{k,l} needs k != 0");
  return q_slice(GFId::qk(k), ell, order);
}

FamilyId::Kind FamilyId::parse_kind(std::string_view name) {
  static const std::map<std::string, Kind, std::less<>> kNames{
      {"catalan", Kind::CatalanTrianglePoly},
      {"modified-catalan", Kind::ModifiedCatalanTrianglePoly},
      {"h", Kind::H},
      {"j", Kind::J},
      {"bq", Kind::Bq},
      {"bq-tilde", Kind::BqTilde},
      {"fib", Kind::FibPoly},
      {"hk", Kind::Hk},
      {"jk", Kind::Jk},
      {"bk", Kind::Bk},
      {"bk-tilde", Kind::BkTilde},
      {"l", Kind::L},
      {"lk", Kind::Lk},
  };
  auto it = kNames.find(name);
  if (it == kNames.end()) throw DomainError("unknown polynomial family: " + std::string(name));
  return it->second;
}

std::string FamilyId::variable() const {
  switch (kind) {
    case Kind::CatalanTrianglePoly:
    case Kind::ModifiedCatalanTrianglePoly:
    case Kind::L:
    case Kind::Lk:
      return "x";
    default:
      return "q";
  }
}

Poly build_family(const FamilyId& id, Route route) {
  switch (id.kind) {
    case FamilyId::Kind::CatalanTrianglePoly: return catalan_poly(id.n, id.k);
    case FamilyId::Kind::ModifiedCatalanTrianglePoly: return modified_catalan_poly(id.n, id.k);
    case FamilyId::Kind::H: return h_poly(id.n, route);
    case FamilyId::Kind::J: return j_poly(id.n, route);
    case FamilyId::Kind::Bq: return bq_poly(id.n, route);
    case FamilyId::Kind::BqTilde: return bq_tilde_poly(id.n, route);
    case FamilyId::Kind::FibPoly: return fib_poly(id.n, route);
    case FamilyId::Kind::Hk: return hk_poly(id.k, id.n, route);
    case FamilyId::Kind::Jk: return jk_poly(id.k, id.n, route);
    case FamilyId::Kind::Bk: return bk_poly(id.k, id.n, route);
    case FamilyId::Kind::BkTilde: return bk_tilde_poly(id.k, id.n, route);
    case FamilyId::Kind::L:
    case FamilyId::Kind::Lk:
      break;
  }
  throw DomainError("L families are power series; use l_series / lk_series");
}

}  // namespace catjac
