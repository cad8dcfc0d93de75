#include "catjac/triangles.hpp"

#include <map>
#include <utility>

#include "catjac/errors.hpp"

namespace catjac {

TableKind TableKind::trapezoid(std::int64_t m) {
  if (m < 1) throw DomainError("trapezoid needs m >= 1, got " + std::to_string(m));
  return {Family::Trapezoid, m};
}

TableKind TableKind::k_analog(std::int64_t k) {
  if (k == 0) throw DomainError("k-analog triangle is undefined for k = 0");
  return {Family::KAnalog, k};
}

std::string TableKind::name() const {
  switch (family) {
    case Family::Catalan: return "catalan";
    case Family::Trapezoid: return "trapezoid(m=" + std::to_string(param) + ")";
    case Family::AltJacobsthal: return "alt-jacobsthal";
    case Family::KAnalog: return "k-analog(k=" + std::to_string(param) + ")";
  }
  return "?";
}

TriangleTable::TriangleTable(TableKind kind) : kind_(kind) {
  if (kind_.family == TableKind::Family::Trapezoid && kind_.param < 1) {
    throw DomainError("trapezoid needs m >= 1");
  }
  if (kind_.family == TableKind::Family::KAnalog && kind_.param == 0) {
    throw DomainError("k-analog triangle is undefined for k = 0");
  }
}

std::size_t TriangleTable::row_length(std::int64_t row) const {
  if (row < 0) throw DomainError("negative row index");
  const auto r = static_cast<std::size_t>(row);
  if (kind_.family == TableKind::Family::Trapezoid) return static_cast<std::size_t>(kind_.param) + r;
  return r + 1;
}

std::vector<ExactInt> TriangleTable::build_row(std::size_t r) const {
  const std::size_t len = row_length(static_cast<std::int64_t>(r));
  std::vector<ExactInt> out(len);
  const std::vector<ExactInt>* prev = r > 0 ? &rows_[r - 1] : nullptr;
  auto prev_at = [prev](std::size_t c) -> ExactInt {
    return (prev != nullptr && c < prev->size()) ? (*prev)[c] : ExactInt{};
  };

  switch (kind_.family) {
    case TableKind::Family::Catalan:
    case TableKind::Family::Trapezoid:
      if (r == 0) {
        for (auto& e : out) e = ExactInt(1);
        break;
      }
      out[0] = ExactInt(1);
      for (std::size_t c = 1; c < len; ++c) out[c] = out[c - 1] + prev_at(c);
      break;
    case TableKind::Family::AltJacobsthal:
    case TableKind::Family::KAnalog: {
      const std::int64_t base = kind_.family == TableKind::Family::KAnalog ? kind_.param : 1;
      out[0] = ipow(base, static_cast<std::int64_t>(r / 2));
      for (std::size_t c = 1; c < len; ++c) out[c] = prev_at(c - 1) - prev_at(c);
      break;
    }
  }
  return out;
}

const std::vector<ExactInt>& TriangleTable::ensure_row(std::size_t row) {
  while (rows_.size() <= row) rows_.push_back(build_row(rows_.size()));
  return rows_[row];
}

ExactInt TriangleTable::at(std::int64_t row, std::int64_t col) {
  if (row < 0) throw DomainError("negative row index " + std::to_string(row));
  if (col < 0 || static_cast<std::size_t>(col) >= row_length(row)) return ExactInt{};
  std::lock_guard lock(mutex_);
  return ensure_row(static_cast<std::size_t>(row))[static_cast<std::size_t>(col)];
}

std::vector<ExactInt> TriangleTable::row(std::int64_t row) {
  if (row < 0) throw DomainError("negative row index " + std::to_string(row));
  std::lock_guard lock(mutex_);
  return ensure_row(static_cast<std::size_t>(row));
}

TriangleTable& shared_table(const TableKind& kind) {
  static std::mutex registry_mutex;
  static std::map<std::pair<int, std::int64_t>, std::unique_ptr<TriangleTable>> registry;
  std::lock_guard lock(registry_mutex);
  auto key = std::make_pair(static_cast<int>(kind.family), kind.param);
  auto it = registry.find(key);
  if (it == registry.end()) {
    it = registry.emplace(key, std::make_unique<TriangleTable>(kind)).first;
  }
  return *it->second;
}

ExactInt catalan_entry(std::int64_t n, std::int64_t k) {
  return shared_table(TableKind::catalan()).at(n, k);
}

ExactInt catalan_number(std::int64_t n) { return catalan_entry(n, n); }

ExactInt catalan_closed_form(std::int64_t n, std::int64_t k) {
  if (n < 0) throw DomainError("negative row index");
  if (k < 0 || k > n) return ExactInt{};
  mpz_class num;
  mpz_class den;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n + k));
  num *= static_cast<long>(n - k + 1);
  mpz_class kf;
  mpz_fac_ui(kf.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(n + 1));
  den *= kf;
  return ExactInt::divexact(ExactInt(num), ExactInt(den));
}

ExactInt trapezoid_entry(std::int64_t m, std::int64_t n, std::int64_t k) {
  return shared_table(TableKind::trapezoid(m)).at(n, k);
}

ExactInt trapezoid_closed_form(std::int64_t m, std::int64_t n, std::int64_t k) {
  if (m < 1) throw DomainError("trapezoid needs m >= 1");
  if (n < 1) throw DomainError("closed form covers rows n >= 1");
  // Row n = (n-1)+1 of the inductive definition.
  const std::int64_t r = n - 1;
  if (k < 0 || k > r + m) return ExactInt{};
  if (k < m) return binomial(r + 1 + k, k);
  return binomial(r + 1 + k, k) - binomial(r + m + 1 + k - m, k - m);
}

ExactInt alt_jacobsthal_entry(std::int64_t m, std::int64_t t) {
  return shared_table(TableKind::alt_jacobsthal()).at(m, t);
}

ExactInt k_analog_entry(std::int64_t k, std::int64_t m, std::int64_t t) {
  return shared_table(TableKind::k_analog(k)).at(m, t);
}

ExactInt b_entry(std::int64_t m, std::int64_t t) {
  if (m < 0) throw DomainError("negative row index");
  if (t < 0 || t > m) return ExactInt{};
  return alt_jacobsthal_entry(m, m - t);
}

ExactInt b_k_entry(std::int64_t k, std::int64_t m, std::int64_t t) {
  if (m < 0) throw DomainError("negative row index");
  if (t < 0 || t > m) return ExactInt{};
  return k_analog_entry(k, m, m - t);
}

}  // namespace catjac
