#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "catjac/series.hpp"

namespace catjac {

/// Names one rational generating function of the registry.
///
/// q is always a formal variable; numeric specialization happens downstream.
struct GFId {
  enum class Kind {
    ColumnGF,           // 1/((1-x)(1+x)^t)
    CompanionColumnGF,  // 1/((1+x)(1-x)^t)
    F,                  // 1/((1-x)(1+x-x^2))
    Fq,                 // 1/((1-qx)(1+qx-x^2))
    CFq,                // (x^2+qx)/((1+qx)(1-qx-x^2))
    Q,                  // x/((1-qx)(1+(q-1)x))
    Qminus,             // x/((1+qx)(1-(q+1)x))
    FibPolyGF,          // 1/(1-qx-x^2)
    Qk,                 // x(1+qx)/((1-kq^2x^2)(1+(q-1)x))
    QkAtQ1,             // x(1+x)/(1-kx^2)
    Fk,                 // (1+qx)/((1-kq^2x^2)(1+qx-x^2))
    CFk,                // (1-qx)(qx+x^2)/((1-kq^2x^2)(1-qx-x^2))
    AkColumnGF,         // 1/((1-kx^2)(1+x)^{t-1})
    JkIntro,            // x(1-qx)/((1-kq^2x^2)(1-(q+1)x))
  };

  Kind kind = Kind::F;
  std::int64_t t = 0;
  std::int64_t k = 1;

  static GFId column(std::int64_t t) { return {Kind::ColumnGF, t, 1}; }
  static GFId companion_column(std::int64_t t) { return {Kind::CompanionColumnGF, t, 1}; }
  static GFId f() { return {Kind::F, 0, 1}; }
  static GFId fq() { return {Kind::Fq, 0, 1}; }
  static GFId cfq() { return {Kind::CFq, 0, 1}; }
  static GFId q() { return {Kind::Q, 0, 1}; }
  static GFId qminus() { return {Kind::Qminus, 0, 1}; }
  static GFId fib_poly() { return {Kind::FibPolyGF, 0, 1}; }
  static GFId qk(std::int64_t k) { return {Kind::Qk, 0, k}; }
  static GFId qk_at_q1(std::int64_t k) { return {Kind::QkAtQ1, 0, k}; }
  static GFId fk(std::int64_t k) { return {Kind::Fk, 0, k}; }
  static GFId cfk(std::int64_t k) { return {Kind::CFk, 0, k}; }
  static GFId ak_column(std::int64_t k, std::int64_t t) { return {Kind::AkColumnGF, t, k}; }
  static GFId jk_intro(std::int64_t k) { return {Kind::JkIntro, 0, k}; }

  /// Registry key, e.g. `Q`, `ColumnGF(3)`, `Fk(2)`, `AkColumnGF(2,3)`.
  [[nodiscard]] std::string name() const;
  /// Inverse of name(); also accepts lower-case keys. Throws DomainError.
  static GFId parse(std::string_view name, std::int64_t t, std::int64_t k);

  [[nodiscard]] bool uses_t() const;
  [[nodiscard]] bool uses_k() const;

  friend bool operator==(const GFId&, const GFId&) = default;
};

/// Exact numerator/denominator for `id`. Throws DomainError for bad t or k.
RationalGF build_gf(const GFId& id);

/// x-coefficients c_0..c_order of `id`.
std::vector<Poly> coefficient_stream(const GFId& id, std::size_t order);

/// One representative id per registry kind, with the given parameters.
std::vector<GFId> registry_ids(std::int64_t t, std::int64_t k);

}  // namespace catjac
