#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catjac/errors.hpp"
#include "catjac/genfun.hpp"
#include "catjac/identities.hpp"
#include "catjac/oeis.hpp"
#include "catjac/pathoracle.hpp"
#include "catjac/polyfam.hpp"
#include "catjac/render.hpp"

namespace {

using namespace catjac;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "a..b" or "a"
ParamRange parse_range(const std::string& name, const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const auto v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {name, v, v};
    }
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const auto a = std::stoll(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const auto b = std::stoll(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    return {name, a, b};
  } catch (const std::logic_error&) {
    throw UsageError("--" + name + ": expected a or a..b, got `" + text + "`");
  }
}

std::vector<oeis::SequenceRef> load_sequences() {
  if (const char* dir = std::getenv("CATJAC_DATA_DIR"); dir != nullptr && *dir != '\0') {
    return oeis::load_directory(dir);
  }
  return oeis::bundled();
}

const oeis::SequenceRef* find_sequence(const std::vector<oeis::SequenceRef>& seqs, const std::string& id) {
  for (const auto& s : seqs) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

struct TriangleArgs {
  std::string kind;
  std::int64_t rows = 8;
  std::int64_t k = 1;
  std::int64_t m = 1;
  std::string format = "plain";
};

int run_triangle(const TriangleArgs& a) {
  if (a.rows < 1) throw UsageError("--rows must be at least 1");
  const auto rows = triangle_rows(parse_triangle(a.kind), a.rows, a.k, a.m);
  std::cout << render_rows(rows, parse_format(a.format));
  return kOk;
}

struct PolyArgs {
  std::string family;
  std::optional<std::int64_t> n, k, m, s, l;
  std::size_t order = 20;
  std::string route = "triangle";
  bool json = false;
};

std::int64_t need(const std::optional<std::int64_t>& v, const char* flag, const std::string& family) {
  if (!v) throw UsageError(family + " needs " + flag);
  return *v;
}

int run_poly(const PolyArgs& a) {
  const auto kind = FamilyId::parse_kind(a.family);
  Route route = Route::Triangle;
  if (a.route == "series") {
    route = Route::Series;
  } else if (a.route != "triangle") {
    throw UsageError("--route must be triangle or series");
  }

  using K = FamilyId::Kind;
  if (kind == K::L || kind == K::Lk) {
    const auto ell = need(a.l, "-l", a.family);
    std::vector<ExactInt> coeffs = kind == K::L ? l_series(ell, a.order) : lk_series(need(a.k, "-k", a.family), ell, a.order);
    const Poly p(coeffs);
    if (a.json) {
      std::cout << poly_json(p) << '\n';
    } else {
      for (std::size_t i = 0; i < coeffs.size(); ++i) std::cout << (i ? ", " : "") << coeffs[i];
      std::cout << '\n';
    }
    return kOk;
  }

  FamilyId id{kind, 0, 0};
  switch (kind) {
    case K::CatalanTrianglePoly:
    case K::ModifiedCatalanTrianglePoly:
      id.n = need(a.n, "-n", a.family);
      id.k = need(a.k, "-k", a.family);
      break;
    case K::H:
    case K::J: id.n = need(a.m, "-m", a.family); break;
    case K::Bq:
    case K::BqTilde:
    case K::FibPoly: id.n = need(a.s, "-s", a.family); break;
    case K::Hk:
    case K::Jk:
      id.k = need(a.k, "-k", a.family);
      id.n = need(a.m, "-m", a.family);
      break;
    case K::Bk:
    case K::BkTilde:
      id.k = need(a.k, "-k", a.family);
      id.n = need(a.s, "-s", a.family);
      break;
    default: break;
  }
  const Poly p = build_family(id, route);
  if (a.json) {
    std::cout << poly_json(p) << '\n';
  } else {
    std::cout << p.to_string(id.variable()) << '\n';
  }
  return kOk;
}

struct SeriesArgs {
  std::string gf;
  std::int64_t t = 1;
  std::int64_t k = 1;
  std::size_t order = 10;
  bool json = false;
};

int run_series(const SeriesArgs& a) {
  const GFId id = GFId::parse(a.gf, a.t, a.k);
  const auto coeffs = coefficient_stream(id, a.order);
  if (a.json) {
    std::cout << series_json(id.name(), coeffs) << '\n';
  } else {
    std::cout << id.name() << " = " << build_gf(id).to_string() << '\n' << series_text(coeffs);
  }
  return kOk;
}

struct IdentityArgs {
  std::string id;
  std::map<std::string, std::string> ranges;
  bool unsafe_domain = false;
  bool no_timing = false;
  unsigned workers = 1;
  std::string format = "json";
};

int run_identity(const IdentityArgs& a) {
  const auto format = parse_format(a.format);
  if (format == OutputFormat::Csv) throw UsageError("identity output is json or plain");
  std::vector<const IdentityRecord*> records;
  if (a.id == "all") {
    for (const auto& r : identities()) records.push_back(&r);
  } else {
    records.push_back(&find_identity(a.id));
  }

  Box box;
  for (const auto& [name, text] : a.ranges) box.push_back(parse_range(name, text));

  bool all_ok = true;
  for (const auto* rec : records) {
    Box own;
    for (const auto& range : box) {
      const bool known = std::find(rec->params.begin(), rec->params.end(), range.name) != rec->params.end();
      if (known) {
        own.push_back(range);
      } else if (a.id != "all") {
        throw UsageError(rec->id + " has no parameter --" + range.name);
      }
    }
    const SweepReport report = sweep(rec->id, own, {a.unsafe_domain, a.workers});
    all_ok = all_ok && report.verified();
    if (format == OutputFormat::Json) {
      std::cout << to_json(report, !a.no_timing) << std::endl;
    } else {
      std::cout << report.id << ": checked " << report.checked << ", skipped " << report.skipped << ", failures "
                << report.failures.size();
      if (!a.no_timing) std::cout << " (" << static_cast<long long>(report.millis + 0.5) << " ms)";
      if (report.exploratory) std::cout << " [exploratory]";
      std::cout << std::endl;
      for (const auto& f : report.failures) {
        std::cout << "  (";
        for (std::size_t i = 0; i < f.params.size(); ++i) std::cout << (i ? ", " : "") << report.box[i].name << "=" << f.params[i];
        std::cout << ") " << f.claim << ": " << f.lhs << " != " << f.rhs << '\n';
      }
    }
  }
  return all_ok ? kOk : kFailed;
}

struct OeisArgs {
  std::string which = "all";
  std::string generator;
  std::string file;
  std::size_t terms = 0;
  bool json = false;
};

int run_oeis(const OeisArgs& a) {
  std::vector<oeis::SequenceRef> seqs = a.file.empty() ? load_sequences() : std::vector{oeis::load_bfile(a.file)};

  std::vector<oeis::BundledCheck> checks;
  if (!a.generator.empty()) {
    const std::string id = a.which == "all" ? (seqs.empty() ? "" : seqs.front().id) : a.which;
    checks.push_back({id, a.generator, 1, 0, ""});
  } else {
    for (const auto& c : oeis::bundled_checks()) {
      if (a.which == "all" || c.sequence_id == a.which) checks.push_back(c);
    }
    if (checks.empty()) throw UsageError("no bundled check for " + a.which);
  }

  bool all_ok = true;
  for (const auto& c : checks) {
    const auto* seq = find_sequence(seqs, c.sequence_id);
    if (seq == nullptr) throw UsageError("sequence " + c.sequence_id + " is not available");
    const std::size_t want = a.terms > 0 ? a.terms : std::max<std::size_t>(c.printed_terms, 12);
    const auto report = oeis::cross_check(*seq, c.generator, want);
    const bool ok = report.matched && report.shift == c.expected_shift &&
                    report.matched_length >= std::min(c.printed_terms, seq->terms.size());
    all_ok = all_ok && ok;
    if (a.json) {
      nlohmann::ordered_json j;
      j["sequence"] = report.sequence_id;
      j["generator"] = report.generator;
      j["matched"] = report.matched;
      j["shift"] = report.shift;
      j["expected_shift"] = c.expected_shift;
      j["matched_length"] = report.matched_length;
      if (report.first_mismatch) {
        j["first_mismatch"] = {{"index", report.first_mismatch->index},
                               {"expected", report.first_mismatch->expected.to_string()},
                               {"got", report.first_mismatch->got.to_string()}};
      } else {
        j["first_mismatch"] = nullptr;
      }
      j["ok"] = ok;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << (ok ? "ok   " : "FAIL ") << report.sequence_id << " <- " << report.generator << ": ";
      if (report.matched) {
        std::cout << report.matched_length << " terms, shift " << report.shift;
        if (report.shift != 0) std::cout << " (finding)";
      } else if (report.first_mismatch) {
        std::cout << "mismatch at " << report.first_mismatch->index << ": expected " << report.first_mismatch->expected
                  << ", got " << report.first_mismatch->got;
      } else {
        std::cout << "no overlap";
      }
      if (!c.note.empty()) std::cout << "  [" << c.note << "]";
      std::cout << '\n';
    }
  }
  return all_ok ? kOk : kFailed;
}

int run_conjecture(bool json) {
  const auto seqs = load_sequences();
  const auto* sigma = find_sequence(seqs, "A059714");
  if (sigma == nullptr) throw UsageError("A059714 is not available");
  bool all_ok = true;
  auto rows = nlohmann::ordered_json::array();
  if (!json) std::cout << "n  F~(n,n)(3)  sigma_n\n";
  for (std::int64_t n = sigma->offset; n <= sigma->last_index(); ++n) {
    const ExactInt value = modified_catalan_poly(n, n).eval(ExactInt(3));
    const ExactInt& want = *sigma->term(n);
    const bool ok = value == want;
    all_ok = all_ok && ok;
    if (json) {
      rows.push_back({{"n", n}, {"value", value.to_string()}, {"sigma", want.to_string()}, {"match", ok}});
    } else {
      std::cout << n << "  " << value << "  " << want << (ok ? "" : "  MISMATCH") << '\n';
    }
  }
  if (json) std::cout << nlohmann::ordered_json{{"rows", rows}, {"verified", all_ok}}.dump() << '\n';
  return all_ok ? kOk : kFailed;
}

struct PathArgs {
  std::string what;
  std::int64_t x = 0, y = 0, n = 0, k = 0, len = 0, h = 1;
  std::string constraint = "free";
  std::int64_t max_height = 0;
};

int run_paths(const PathArgs& a) {
  if (a.what == "count") {
    PathSpec spec{a.x, a.y, PathSpec::Constraint::Free, a.max_height};
    if (a.constraint == "dyck") {
      spec.constraint = PathSpec::Constraint::NonNegative;
    } else if (a.constraint == "bounded") {
      spec.constraint = PathSpec::Constraint::HeightAtMost;
    } else if (a.constraint != "free") {
      throw UsageError("--constraint must be free, dyck or bounded");
    }
    std::cout << count_paths(spec) << '\n';
    return kOk;
  }
  if (a.what == "dyck-height") {
    std::cout << count_dyck_height(a.len, a.h) << '\n';
    return kOk;
  }
  if (a.what == "bijection") {
    const auto report = verify_bijection(a.n, a.k);
    std::cout << "paths " << report.lhs << ", weighted sum " << report.rhs << '\n';
    for (const auto& c : report.per_s) {
      std::cout << "  s=" << c.s << ": " << c.enumerated << " enumerated, " << c.expected << " expected\n";
    }
    return report.holds() ? kOk : kFailed;
  }
  throw UsageError("paths: expected count, dyck-height or bijection");
}

int run_list() {
  for (const auto& r : identities()) {
    std::cout << r.id << "(";
    for (std::size_t i = 0; i < r.params.size(); ++i) std::cout << (i ? "," : "") << r.params[i];
    std::cout << ")  " << r.domain << "\n    " << r.statement << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Catalan and alternating Jacobsthal triangles, their polynomials and identities"};
  app.require_subcommand(1);

  TriangleArgs tri;
  auto* triangle = app.add_subcommand("triangle", "print rows of a triangle");
  triangle->add_option("kind", tri.kind, "catalan | trapezoid | alt-jacobsthal | b | k-analog")->required();
  triangle->add_option("--rows", tri.rows, "number of rows");
  triangle->add_option("-k", tri.k, "k for k-analog");
  triangle->add_option("-m", tri.m, "complete columns for trapezoid");
  triangle->add_option("--format", tri.format, "plain | json | csv");

  PolyArgs poly;
  auto* polycmd = app.add_subcommand("poly", "print a polynomial of a named family");
  polycmd->add_option("family", poly.family,
                      "catalan | modified-catalan | h | j | bq | bq-tilde | fib | hk | jk | bk | bk-tilde | l | lk")
      ->required();
  polycmd->add_option("-n", poly.n);
  polycmd->add_option("-k", poly.k);
  polycmd->add_option("-m", poly.m);
  polycmd->add_option("-s", poly.s);
  polycmd->add_option("-l", poly.l);
  polycmd->add_option("--order", poly.order, "series order for l and lk");
  polycmd->add_option("--route", poly.route, "triangle | series");
  polycmd->add_flag("--json", poly.json);

  SeriesArgs ser;
  auto* series = app.add_subcommand("series", "expand a registered generating function");
  series->add_option("gf", ser.gf, "registry name, e.g. Q, Fq, ColumnGF, Fk")->required();
  series->add_option("-t", ser.t);
  series->add_option("-k", ser.k);
  series->add_option("--order", ser.order);
  series->add_flag("--json", ser.json);

  IdentityArgs ida;
  auto* identity = app.add_subcommand("identity", "sweep an identity (or all) over a parameter box");
  identity->add_option("id", ida.id, "identity id or `all`")->required();
  std::map<std::string, std::string> raw_ranges;
  for (const char* name : {"n", "k", "m", "t", "s", "d", "l"}) {
    identity->add_option(std::string("--") + name, raw_ranges[name], "range a..b");
  }
  identity->add_flag("--unsafe-domain", ida.unsafe_domain, "also evaluate tuples outside the stated domain");
  identity->add_flag("--no-timing", ida.no_timing, "write millis as 0");
  identity->add_option("--workers", ida.workers, "threads per sweep");
  identity->add_option("--format", ida.format, "json | plain");

  OeisArgs oa;
  auto* oeiscmd = app.add_subcommand("oeis", "cross-check bundled sequences against generators");
  oeiscmd->add_option("id", oa.which, "sequence id or `all`");
  oeiscmd->add_option("--generator", oa.generator, "check against this generator instead of the catalog");
  oeiscmd->add_option("--file", oa.file, "b-file to check instead of the bundled data");
  oeiscmd->add_option("--terms", oa.terms, "terms to compare");
  oeiscmd->add_flag("--json", oa.json);

  bool conj_json = false;
  auto* conjecture = app.add_subcommand("conjecture", "compare F~(n,n)(3) with the stacked directed animal counts");
  conjecture->add_flag("--json", conj_json);

  PathArgs pa;
  auto* paths = app.add_subcommand("paths", "lattice path counts");
  paths->add_option("what", pa.what, "count | dyck-height | bijection")->required();
  paths->add_option("-x", pa.x);
  paths->add_option("-y", pa.y);
  paths->add_option("--constraint", pa.constraint, "free | dyck | bounded");
  paths->add_option("--max-height", pa.max_height);
  paths->add_option("--len", pa.len);
  paths->add_option("--height", pa.h);
  paths->add_option("-n", pa.n);
  paths->add_option("-k", pa.k);

  app.add_subcommand("list", "list the identity catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*triangle) return run_triangle(tri);
    if (*polycmd) return run_poly(poly);
    if (*series) return run_series(ser);
    if (*identity) {
      for (const auto& [name, text] : raw_ranges) {
        if (identity->count("--" + name) > 0) ida.ranges[name] = text;
      }
      return run_identity(ida);
    }
    if (*oeiscmd) return run_oeis(oa);
    if (*conjecture) return run_conjecture(conj_json);
    if (*paths) return run_paths(pa);
    return run_list();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const catjac::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
}
