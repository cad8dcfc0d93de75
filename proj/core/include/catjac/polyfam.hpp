#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "catjac/poly.hpp"

namespace catjac {

/// How a family member is constructed. Both routes must agree; tests compare them.
enum class Route {
  Triangle,  // from the defining sums over triangle entries
  Series,    // as a coefficient of the family's generating function
};

/// Catalan triangle polynomial sum_{s=0}^{k} C(n,s) x^{k-s}, 0 <= k <= n.
Poly catalan_poly(std::int64_t n, std::int64_t k);
/// Modified version sum_{s=0}^{k} C(n+1,s) x^{max(k-1-s,0)}, 0 <= k <= n.
Poly modified_catalan_poly(std::int64_t n, std::int64_t k);

/// H_m(q) = sum_{t=1}^{m} A(m,t) q^{m-t}, m >= 1.
Poly h_poly(std::int64_t m, Route route = Route::Triangle);
/// J_m(q) = H_m(-q).
Poly j_poly(std::int64_t m, Route route = Route::Triangle);

/// B_s(q): diagonal sum of A(m,t) q^{m-t} over t + m - 2 = s, t > 0.
Poly bq_poly(std::int64_t s, Route route = Route::Triangle);
/// (-1)^s B_s(q) + (-1)^{s+1} q^s. Series route reads it off CF(x,q).
Poly bq_tilde_poly(std::int64_t s, Route route = Route::Triangle);
/// Same polynomial built from |A(m,t)| along the diagonal plus (-1)^{s+1} q^s.
Poly bq_tilde_poly_abs(std::int64_t s);
/// Fibonacci polynomial: coefficient of x^s in 1/(1 - qx - x^2).
Poly fib_poly(std::int64_t s, Route route = Route::Triangle);

/// H_{k,m}(q) = sum_{t=1}^{m} A_k(m,t) q^{m-t}; k != 0, m >= 1.
Poly hk_poly(std::int64_t k, std::int64_t m, Route route = Route::Triangle);
/// J_{k,m}(q) = H_{k,m}(-q).
Poly jk_poly(std::int64_t k, std::int64_t m, Route route = Route::Triangle);
/// B_{k,s}(q): diagonal sum of A_k(m,t) q^{m-t}; k != 0, s >= 0.
Poly bk_poly(std::int64_t k, std::int64_t s, Route route = Route::Triangle);
/// B~_{k,s}(q), the coefficient of x^s in CF_k(x,q).
///
/// The triangle route uses the signed-series definition
/// (-1)^s (B_{k,s}(q) - k^{floor(s/2)} q^s).
Poly bk_tilde_poly(std::int64_t k, std::int64_t s, Route route = Route::Triangle);

/// Coefficients of L_l(x) up to x^order via L_{l+1} = (-x L_l + x^{l+2}) / (1-x).
std::vector<ExactInt> l_series(std::int64_t ell, std::size_t order);
/// k-version: the source term is k^floor((l+1)/2) x^{l+2} / (1-x).
std::vector<ExactInt> lk_series(std::int64_t k, std::int64_t ell, std::size_t order);
/// [q^l] of the x-expansion of Q(x,q), i.e. L_l(x) read straight off the series.
std::vector<ExactInt> l_series_from_q(std::int64_t ell, std::size_t order);
/// [q^l] of the x-expansion of Q_k(x,q).
std::vector<ExactInt> lk_series_from_q(std::int64_t k, std::int64_t ell, std::size_t order);

/// A named family member, as used by the CLI.
struct FamilyId {
  enum class Kind {
    CatalanTrianglePoly,
    ModifiedCatalanTrianglePoly,
    H,
    J,
    Bq,
    BqTilde,
    FibPoly,
    Hk,
    Jk,
    Bk,
    BkTilde,
    L,
    Lk,
  };
  Kind kind = Kind::H;
  std::int64_t n = 0;  // also m, s or l depending on kind
  std::int64_t k = 0;  // column (Catalan polys) or deformation parameter

  /// Accepts `catalan`, `modified-catalan`, `h`, `j`, `bq`, `bq-tilde`, `fib`,
  /// `hk`, `jk`, `bk`, `bk-tilde`, `l`, `lk`. Throws DomainError.
  static Kind parse_kind(std::string_view name);
  [[nodiscard]] bool is_series() const { return kind == Kind::L || kind == Kind::Lk; }
  [[nodiscard]] std::string variable() const;
};

/// Polynomial for a non-series family id. Throws DomainError on bad parameters.
Poly build_family(const FamilyId& id, Route route = Route::Triangle);

}  // namespace catjac
