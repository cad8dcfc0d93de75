#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "catjac/exact_int.hpp"

namespace catjac {

/// Which array a TriangleTable holds.
struct TableKind {
  enum class Family { Catalan, Trapezoid, AltJacobsthal, KAnalog };

  Family family = Family::Catalan;
  /// Number of complete columns (Trapezoid) or the deformation k (KAnalog).
  std::int64_t param = 0;

  static TableKind catalan() { return {Family::Catalan, 0}; }
  /// Throws DomainError unless m >= 1.
  static TableKind trapezoid(std::int64_t m);
  static TableKind alt_jacobsthal() { return {Family::AltJacobsthal, 0}; }
  /// Throws DomainError for k == 0.
  static TableKind k_analog(std::int64_t k);

  [[nodiscard]] std::string name() const;
  friend bool operator==(const TableKind&, const TableKind&) = default;
};

/// Lazily grown triangular (or trapezoidal) array of exact integers.
///
/// Rows are appended on demand and never change once built. Growth is
/// serialized by an internal mutex; completed rows are stable in memory
/// (rows live in a deque), so concurrent readers always see whole rows.
///
///   Catalan        row n has n+1 entries, C(n,k) = C(n,k-1) + C(n-1,k)
///   Trapezoid(m)   row n has m+n entries, row 0 is m ones, same rule
///   AltJacobsthal  row m has m+1 entries, A(m,0)=1, A(m,t) = A(m-1,t-1) - A(m-1,t)
///   KAnalog(k)     as AltJacobsthal with A_k(m,0) = k^floor(m/2)
///
/// Entries outside a row read as zero.
class TriangleTable {
 public:
  explicit TriangleTable(TableKind kind);

  TriangleTable(const TriangleTable&) = delete;
  TriangleTable& operator=(const TriangleTable&) = delete;

  [[nodiscard]] const TableKind& kind() const { return kind_; }

  /// Entry (row, col). Throws DomainError for a negative row.
  [[nodiscard]] ExactInt at(std::int64_t row, std::int64_t col);
  /// Copy of a complete row.
  [[nodiscard]] std::vector<ExactInt> row(std::int64_t row);
  /// Number of entries in `row` for this kind.
  [[nodiscard]] std::size_t row_length(std::int64_t row) const;

 private:
  const std::vector<ExactInt>& ensure_row(std::size_t row);
  [[nodiscard]] std::vector<ExactInt> build_row(std::size_t row) const;

  TableKind kind_;
  std::mutex mutex_;
  std::deque<std::vector<ExactInt>> rows_;
};

/// Process-wide memoized table for `kind`. Safe to call from any thread.
TriangleTable& shared_table(const TableKind& kind);

/// C(n,k); zero outside 0 <= k <= n. Throws DomainError for n < 0.
ExactInt catalan_entry(std::int64_t n, std::int64_t k);
/// C_n = C(n,n).
ExactInt catalan_number(std::int64_t n);
/// (n+k)!(n-k+1) / (k!(n+1)!), computed independently of the recursion.
ExactInt catalan_closed_form(std::int64_t n, std::int64_t k);
/// C_m(n,k); zero outside 0 <= k <= m+n-1.
ExactInt trapezoid_entry(std::int64_t m, std::int64_t n, std::int64_t k);
/// Binomial-difference form of C_m(n,k) for n >= 1, valid for every m >= 1.
ExactInt trapezoid_closed_form(std::int64_t m, std::int64_t n, std::int64_t k);
/// A(m,t); zero outside 0 <= t <= m.
ExactInt alt_jacobsthal_entry(std::int64_t m, std::int64_t t);
/// A_k(m,t); zero outside 0 <= t <= m. Throws DomainError for k == 0.
ExactInt k_analog_entry(std::int64_t k, std::int64_t m, std::int64_t t);
/// B(m,t) = A(m, m-t).
ExactInt b_entry(std::int64_t m, std::int64_t t);
/// B_k(m,t) = A_k(m, m-t).
ExactInt b_k_entry(std::int64_t k, std::int64_t m, std::int64_t t);

}  // namespace catjac
