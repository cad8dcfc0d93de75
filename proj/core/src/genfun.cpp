#include "catjac/genfun.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include "catjac/errors.hpp"

namespace catjac {

namespace {

// Shorthands for building x-polynomials with q-polynomial coefficients.
Poly c(std::int64_t v) { return Poly(ExactInt(v)); }
const Poly kQ = Poly::x();  // the variable q

BiPoly xpoly(std::initializer_list<Poly> terms) { return BiPoly::from_terms(terms); }

// (1 + a x)^n for a q-polynomial a.
BiPoly linear_power(const Poly& a, std::int64_t n) {
  BiPoly base = xpoly({c(1), a});
  BiPoly out = xpoly({c(1)});
  for (std::int64_t i = 0; i < n; ++i) out = out * base;
  return out;
}

// 1 - k q^2 x^2
BiPoly one_minus_kq2x2(std::int64_t k) {
  return xpoly({c(1), Poly{}, -(ExactInt(k) * pow(kQ, 2))});
}

void require_k(const GFId& id) {
  if (id.k == 0) throw DomainError(id.name() + ": k must be nonzero");
}

struct NamedKind {
  std::string_view name;
  GFId::Kind kind;
};

constexpr std::array<NamedKind, 14> kKinds{{
    {"ColumnGF", GFId::Kind::ColumnGF},
    {"CompanionColumnGF", GFId::Kind::CompanionColumnGF},
    {"F", GFId::Kind::F},
    {"Fq", GFId::Kind::Fq},
    {"CFq", GFId::Kind::CFq},
    {"Q", GFId::Kind::Q},
    {"Qminus", GFId::Kind::Qminus},
    {"FibPolyGF", GFId::Kind::FibPolyGF},
    {"Qk", GFId::Kind::Qk},
    {"Qk_at_q1", GFId::Kind::QkAtQ1},
    {"Fk", GFId::Kind::Fk},
    {"CFk", GFId::Kind::CFk},
    {"AkColumnGF", GFId::Kind::AkColumnGF},
    {"JkIntro", GFId::Kind::JkIntro},
}};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return std::tolower(ch); });
  return out;
}

}  // namespace

bool GFId::uses_t() const {
  return kind == Kind::ColumnGF || kind == Kind::CompanionColumnGF || kind == Kind::AkColumnGF;
}

bool GFId::uses_k() const {
  switch (kind) {
    case Kind::Qk:
    case Kind::QkAtQ1:
    case Kind::Fk:
    case Kind::CFk:
    case Kind::AkColumnGF:
    case Kind::JkIntro:
      return true;
    default:
      return false;
  }
}

std::string GFId::name() const {
  std::string base;
  for (const auto& nk : kKinds) {
    if (nk.kind == kind) base = std::string(nk.name);
  }
  if (kind == Kind::AkColumnGF) return base + "(" + std::to_string(k) + "," + std::to_string(t) + ")";
  if (uses_t()) return base + "(" + std::to_string(t) + ")";
  if (uses_k()) return base + "(" + std::to_string(k) + ")";
  return base;
}

GFId GFId::parse(std::string_view name, std::int64_t t, std::int64_t k) {
  const std::string key = lower(name);
  for (const auto& nk : kKinds) {
    if (lower(nk.name) == key) return GFId{nk.kind, t, k};
  }
  throw DomainError("unknown generating function: " + std::string(name));
}

RationalGF build_gf(const GFId& id) {
  RationalGF g;
  switch (id.kind) {
    case GFId::Kind::ColumnGF:
      if (id.t < 0) throw DomainError("ColumnGF needs t >= 0");
      g.numerator = xpoly({c(1)});
      g.denominator = xpoly({c(1), c(-1)}) * linear_power(c(1), id.t);
      break;
    case GFId::Kind::CompanionColumnGF:
      if (id.t < 0) throw DomainError("CompanionColumnGF needs t >= 0");
      g.numerator = xpoly({c(1)});
      g.denominator = xpoly({c(1), c(1)}) * linear_power(c(-1), id.t);
      break;
    case GFId::Kind::F:
      g.numerator = xpoly({c(1)});
      g.denominator = xpoly({c(1), c(-1)}) * xpoly({c(1), c(1), c(-1)});
      break;
    case GFId::Kind::Fq:
      g.numerator = xpoly({c(1)});
      g.denominator = xpoly({c(1), -kQ}) * xpoly({c(1), kQ, c(-1)});
      break;
    case GFId::Kind::CFq:
      g.numerator = xpoly({Poly{}, kQ, c(1)});
      g.denominator = xpoly({c(1), kQ}) * xpoly({c(1), -kQ, c(-1)});
      break;
    case GFId::Kind::Q:
      g.numerator = xpoly({Poly{}, c(1)});
      g.denominator = xpoly({c(1), -kQ}) * xpoly({c(1), kQ - c(1)});
      break;
    case GFId::Kind::Qminus:
      g.numerator = xpoly({Poly{}, c(1)});
      g.denominator = xpoly({c(1), kQ}) * xpoly({c(1), -(kQ + c(1))});
      break;
    case GFId::Kind::FibPolyGF:
      g.numerator = xpoly({c(1)});
      g.denominator = xpoly({c(1), -kQ, c(-1)});
      break;
    case GFId::Kind::Qk:
      require_k(id);
      g.numerator = xpoly({Poly{}, c(1), kQ});
      g.denominator = one_minus_kq2x2(id.k) * xpoly({c(1), kQ - c(1)});
      break;
    case GFId::Kind::QkAtQ1:
      require_k(id);
      g.numerator = xpoly({Poly{}, c(1), c(1)});
      g.denominator = xpoly({c(1), Poly{}, c(-id.k)});
      break;
    case GFId::Kind::Fk:
      require_k(id);
      g.numerator = xpoly({c(1), kQ});
      g.denominator = one_minus_kq2x2(id.k) * xpoly({c(1), kQ, c(-1)});
      break;
    case GFId::Kind::CFk:
      require_k(id);
      g.numerator = xpoly({c(1), -kQ}) * xpoly({Poly{}, kQ, c(1)});
      g.denominator = one_minus_kq2x2(id.k) * xpoly({c(1), -kQ, c(-1)});
      break;
    case GFId::Kind::AkColumnGF:
      require_k(id);
      if (id.t < 1) throw DomainError("AkColumnGF needs t >= 1");
      g.numerator = xpoly({c(1)});
      g.denominator = xpoly({c(1), Poly{}, c(-id.k)}) * linear_power(c(1), id.t - 1);
      break;
    case GFId::Kind::JkIntro:
      require_k(id);
      g.numerator = xpoly({Poly{}, c(1), -kQ});
      g.denominator = one_minus_kq2x2(id.k) * xpoly({c(1), -(kQ + c(1))});
      break;
  }
  g.validate();
  return g;
}

std::vector<Poly> coefficient_stream(const GFId& id, std::size_t order) {
  return gf_expand(build_gf(id), order);
}

std::vector<GFId> registry_ids(std::int64_t t, std::int64_t k) {
  std::vector<GFId> out;
  out.reserve(kKinds.size());
  for (const auto& nk : kKinds) out.push_back(GFId{nk.kind, t, k});
  return out;
}

}  // namespace catjac
