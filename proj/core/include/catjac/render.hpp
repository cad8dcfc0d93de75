#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "catjac/exact_int.hpp"
#include "catjac/poly.hpp"

namespace catjac {

enum class OutputFormat { Plain, Json, Csv };

/// "plain", "json" or "csv". Throws DomainError otherwise.
OutputFormat parse_format(std::string_view name);

enum class TriangleName { Catalan, Trapezoid, AltJacobsthal, B, KAnalog };

/// "catalan", "trapezoid", "alt-jacobsthal", "b", "k-analog". Throws DomainError.
TriangleName parse_triangle(std::string_view name);

/// Rows 0..rows-1. `m` is used by the trapezoid, `k` by the k-analogue.
std::vector<std::vector<ExactInt>> triangle_rows(TriangleName name, std::int64_t rows, std::int64_t k = 1,
                                                 std::int64_t m = 1);

/// Plain: every entry right-aligned to the widest entry of the table, one
/// space between columns, no trailing spaces. JSON: array of arrays of
/// decimal strings. CSV: comma-separated rows.
std::string render_rows(const std::vector<std::vector<ExactInt>>& rows, OutputFormat format);

/// Coefficient array (index = power) of decimal strings.
std::string poly_json(const Poly& p);

/// {"name": ..., "order": N, "coefficients": [[...], ...]} with one array per x-power.
std::string series_json(std::string_view name, const std::vector<Poly>& coeffs);
/// One line per x-power: `x^i: <poly in q>`.
std::string series_text(const std::vector<Poly>& coeffs, std::string_view var = "q");

}  // namespace catjac
