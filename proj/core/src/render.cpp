#include "catjac/render.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "catjac/errors.hpp"
#include "catjac/triangles.hpp"

namespace catjac {

namespace {

nlohmann::ordered_json coeff_array(const Poly& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
  return arr;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "plain") return OutputFormat::Plain;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw DomainError("unknown format: " + std::string(name));
}

TriangleName parse_triangle(std::string_view name) {
  if (name == "catalan") return TriangleName::Catalan;
  if (name == "trapezoid") return TriangleName::Trapezoid;
  if (name == "alt-jacobsthal") return TriangleName::AltJacobsthal;
  if (name == "b") return TriangleName::B;
  if (name == "k-analog") return TriangleName::KAnalog;
  throw DomainError("unknown triangle: " + std::string(name));
}

std::vector<std::vector<ExactInt>> triangle_rows(TriangleName name, std::int64_t rows, std::int64_t k, std::int64_t m) {
  if (rows < 0) throw DomainError("row count must be non-negative");
  TableKind kind = TableKind::catalan();
  switch (name) {
    case TriangleName::Catalan: break;
    case TriangleName::Trapezoid: kind = TableKind::trapezoid(m); break;
    case TriangleName::AltJacobsthal:
    case TriangleName::B: kind = TableKind::alt_jacobsthal(); break;
    case TriangleName::KAnalog: kind = TableKind::k_analog(k); break;
  }
  TriangleTable& table = shared_table(kind);
  std::vector<std::vector<ExactInt>> out;
  out.reserve(static_cast<std::size_t>(rows));
  for (std::int64_t r = 0; r < rows; ++r) {
    auto row = table.row(r);
    if (name == TriangleName::B) std::reverse(row.begin(), row.end());
    out.push_back(std::move(row));
  }
  return out;
}

std::string render_rows(const std::vector<std::vector<ExactInt>>& rows, OutputFormat format) {
  if (format == OutputFormat::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      auto r = nlohmann::ordered_json::array();
      for (const auto& v : row) r.push_back(v.to_string());
      arr.push_back(std::move(r));
    }
    return arr.dump() + "\n";
  }

  std::vector<std::vector<std::string>> text;
  std::size_t width = 0;
  for (const auto& row : rows) {
    auto& line = text.emplace_back();
    for (const auto& v : row) {
      line.push_back(v.to_string());
      width = std::max(width, line.back().size());
    }
  }
  std::ostringstream os;
  for (const auto& line : text) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (format == OutputFormat::Csv) {
        if (i > 0) os << ',';
        os << line[i];
      } else {
        if (i > 0) os << ' ';
        os << std::string(width - line[i].size(), ' ') << line[i];
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string poly_json(const Poly& p) { return coeff_array(p).dump(); }

std::string series_json(std::string_view name, const std::vector<Poly>& coeffs) {
  nlohmann::ordered_json j;
  j["name"] = std::string(name);
  j["order"] = coeffs.empty() ? 0 : coeffs.size() - 1;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : coeffs) arr.push_back(coeff_array(c));
  j["coefficients"] = std::move(arr);
  return j.dump();
}

std::string series_text(const std::vector<Poly>& coeffs, std::string_view var) {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << "x^" << i << ": " << coeffs[i].to_string(var) << '\n';
  return os.str();
}

}  // namespace catjac
