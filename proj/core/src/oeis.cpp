#include "catjac/oeis.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "bundled_data.hpp"
#include "catjac/errors.hpp"
#include "catjac/polyfam.hpp"
#include "catjac/triangles.hpp"

namespace catjac::oeis {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string id_from_filename(std::string_view name) {
  // bNNNNNN.txt -> ANNNNNN
  if (name.size() < 5 || name.front() != 'b') return std::string(name);
  const auto dot = name.find('.');
  return "A" + std::string(name.substr(1, dot - 1));
}

// Row-by-row reading of a triangle: linear index -> (row, col).
std::pair<std::int64_t, std::int64_t> triangle_position(std::int64_t index) {
  std::int64_t row = 0;
  while ((row + 1) * (row + 2) / 2 <= index) ++row;
  return {row, index - row * (row + 1) / 2};
}

ExactInt signed_b(std::int64_t m, std::int64_t t) {
  const ExactInt v = b_entry(m, t);
  return t % 2 == 0 ? v : -v;
}

std::vector<Generator> make_generators() {
  std::vector<Generator> g;
  g.push_back({"alt-jacobsthal-rows", "A(m,t) read by rows, t = 0..m", 0, [](std::int64_t i) {
                 const auto [m, t] = triangle_position(i);
                 return alt_jacobsthal_entry(m, t);
               }});
  g.push_back({"alt-jacobsthal-rows-reversed", "B(m,t) = A(m,m-t) read by rows", 0, [](std::int64_t i) {
                 const auto [m, t] = triangle_position(i);
                 return b_entry(m, t);
               }});
  g.push_back({"diagonal-sums", "B_s, sums of A(m,t) over t+m-2 = s, t > 0", 0,
               [](std::int64_t s) { return bq_poly(s).eval(ExactInt(1)); }});
  g.push_back({"modified-catalan-diagonal-at-3", "modified Catalan triangle polynomial (n,n) at 3", 0,
               [](std::int64_t n) { return modified_catalan_poly(n, n).eval(ExactInt(3)); }});
  g.push_back({"jk-at-1(k=2)", "J_{2,m}(1) = sum_t |A_2(m,t)|", 1,
               [](std::int64_t m) { return jk_poly(2, m).eval(ExactInt(1)); }});
  for (std::int64_t t = 2; t <= 6; ++t) {
    g.push_back({"c(m," + std::to_string(t) + ")", "(-1)^t B(m+t+1,t)", 1,
                 [t](std::int64_t m) { return signed_b(m + t + 1, t); }});
  }
  g.push_back({"B2(m,2)", "B_2(m,2) = A_2(m,m-2)", 3, [](std::int64_t m) { return b_k_entry(2, m, 2); }});
  g.push_back({"-B2(m,3)", "-B_2(m,3)", 5, [](std::int64_t m) { return -b_k_entry(2, m, 3); }});
  g.push_back({"A2-negative-diagonals", "-sum over m+t = 2s+1, t > 0 of A_2(m,t)", 1, [](std::int64_t s) {
                 ExactInt acc;
                 for (std::int64_t t = 1; t <= 2 * s + 1; ++t) acc -= k_analog_entry(2, 2 * s + 1 - t, t);
                 return acc;
               }});
  g.push_back({"|A-1(m,4)|", "|A_{-1}(m,4)|", 4, [](std::int64_t m) { return k_analog_entry(-1, m, 4).abs(); }});
  g.push_back({"B-1(m,2)", "B_{-1}(m,2)", 5, [](std::int64_t m) { return b_k_entry(-1, m, 2); }});
  g.push_back({"-B-1(m,3)", "-B_{-1}(m,3)", 6, [](std::int64_t m) { return -b_k_entry(-1, m, 3); }});
  g.push_back({"A-1-row-tail", "sum_{t>=2} |A_{-1}(m,t)|", 2, [](std::int64_t m) {
                 ExactInt acc;
                 for (std::int64_t t = 2; t <= m; ++t) acc += k_analog_entry(-1, m, t).abs();
                 return acc;
               }});
  g.push_back({"fibonacci-from-diagonals", "(-1)^s (B_s - 1)", 0, [](std::int64_t s) {
                 const ExactInt v = bq_poly(s).eval(ExactInt(1)) - ExactInt(1);
                 return s % 2 == 0 ? v : -v;
               }});
  g.push_back({"jacobsthal", "H_m(-1)", 1, [](std::int64_t m) { return h_poly(m).eval(ExactInt(-1)); }});
  g.push_back({"fib-poly-at-2", "Fibonacci polynomial F_s(2)", 0,
               [](std::int64_t s) { return fib_poly(s).eval(ExactInt(2)); }});
  return g;
}

std::vector<SequenceRef> parse_embedded() {
  std::vector<SequenceRef> out;
  for (const auto& f : detail::embedded_files()) {
    SequenceRef seq = parse_bfile(f.text, id_from_filename(f.name));
    seq.provenance = Provenance::Bundled;
    out.push_back(std::move(seq));
  }
  return out;
}

}  // namespace

const ExactInt* SequenceRef::term(std::int64_t index) const {
  if (index < offset || index > last_index()) return nullptr;
  return &terms[static_cast<std::size_t>(index - offset)];
}

SequenceRef parse_bfile(std::string_view text, std::string id) {
  SequenceRef seq;
  seq.id = std::move(id);
  bool first = true;
  std::int64_t expected = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) {
      throw FormatError("line " + std::to_string(line_no) + ": expected `index value`");
    }
    const std::string_view index_text = line.substr(0, sep);
    const std::string_view value_text = trim(line.substr(sep + 1));
    std::int64_t index = 0;
    const auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
    if (ec != std::errc{} || ptr != index_text.data() + index_text.size()) {
      throw FormatError("line " + std::to_string(line_no) + ": bad index `" + std::string(index_text) + "`");
    }
    ExactInt value;
    try {
      value = ExactInt::parse(value_text);
    } catch (const std::invalid_argument&) {
      throw FormatError("line " + std::to_string(line_no) + ": bad value `" + std::string(value_text) + "`");
    }
    if (first) {
      seq.offset = index;
      expected = index;
      first = false;
    }
    if (index != expected) {
      throw GapError("line " + std::to_string(line_no) + ": expected index " + std::to_string(expected) +
                     ", found " + std::to_string(index));
    }
    seq.terms.push_back(std::move(value));
    ++expected;
  }
  if (seq.terms.empty()) throw FormatError("b-file has no terms");
  return seq;
}

SequenceRef load_bfile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bfile(buf.str(), id_from_filename(path.filename().string()));
}

std::string to_bfile(const SequenceRef& seq) {
  std::ostringstream os;
  os << "# " << seq.id << '\n';
  for (std::size_t i = 0; i < seq.terms.size(); ++i) {
    os << seq.offset + static_cast<std::int64_t>(i) << ' ' << seq.terms[i] << '\n';
  }
  return os.str();
}

const std::vector<SequenceRef>& bundled() {
  static const std::vector<SequenceRef> seqs = parse_embedded();
  return seqs;
}

const SequenceRef* find_bundled(std::string_view id) {
  for (const auto& s : bundled()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

std::vector<SequenceRef> load_directory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && name.size() > 5 && name.front() == 'b' && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<SequenceRef> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back(load_bfile(f));
  return out;
}

const std::vector<Generator>& generators() {
  static const std::vector<Generator> gens = make_generators();
  return gens;
}

const Generator& find_generator(std::string_view name) {
  for (const auto& g : generators()) {
    if (g.name == name) return g;
  }
  throw UnknownGenerator("unknown generator: " + std::string(name));
}

MatchReport cross_check(const SequenceRef& seq, std::string_view generator, std::size_t max_terms) {
  const Generator& gen = find_generator(generator);
  MatchReport report;
  report.sequence_id = seq.id;
  report.generator = gen.name;

  struct Attempt {
    std::size_t compared = 0;
    std::optional<Mismatch> mismatch;
  };
  auto attempt = [&](std::int64_t shift) {
    Attempt a;
    for (std::int64_t i = seq.offset; i <= seq.last_index() && a.compared < max_terms; ++i) {
      const std::int64_t gi = i + shift;
      if (gi < gen.first_index) continue;
      ExactInt got = gen.term(gi);
      const ExactInt& want = *seq.term(i);
      if (got != want) {
        a.mismatch = Mismatch{i, want, std::move(got)};
        return a;
      }
      ++a.compared;
    }
    return a;
  };

  const Attempt at_zero = attempt(0);
  if (!at_zero.mismatch && at_zero.compared > 0) {
    report.matched = true;
    report.matched_length = at_zero.compared;
    return report;
  }
  for (std::int64_t d = 1; d <= kAlignmentWindow; ++d) {
    for (const std::int64_t shift : {-d, d}) {
      const Attempt a = attempt(shift);
      if (!a.mismatch && a.compared > 0) {
        report.matched = true;
        report.shift = shift;
        report.matched_length = a.compared;
        return report;
      }
    }
  }
  report.first_mismatch = at_zero.mismatch;
  return report;
}

const std::vector<BundledCheck>& bundled_checks() {
  static const std::vector<BundledCheck> checks{
      {"A220074", "alt-jacobsthal-rows", 45, 0, "triangle read by rows t = 0..m; the reversed reading does not match"},
      {"A119282", "diagonal-sums", 9, 0, "B_s = 1 + (-1)^s Fib(s)"},
      {"A059714", "modified-catalan-diagonal-at-3", 12, 0, "conjectured sigma_n"},
      {"A007179", "jk-at-1(k=2)", 8, 0, ""},
      {"A000124", "c(m,2)", 6, 0, ""},
      {"A003600", "c(m,3)", 6, 0, ""},
      {"A223718", "c(m,4)", 6, 0, ""},
      {"A257890", "c(m,5)", 6, 0, ""},
      {"A223659", "c(m,6)", 6, 0, ""},
      {"A002856", "B2(m,2)", 8, 0, "listed together with A152948"},
      {"A152948", "B2(m,2)", 8, 0, "listed together with A002856"},
      {"A254875", "-B2(m,3)", 6, 0, ""},
      {"A258109", "A2-negative-diagonals", 6, 0, "Dyck paths of length 2(s+1) and height 3"},
      {"A011848", "|A-1(m,4)|", 8, 1, "finding: the list is indexed by n >= 3 while the column starts at m = 4, so m = n + 1"},
      {"A212342", "B-1(m,2)", 6, 0, ""},
      {"A005581", "-B-1(m,3)", 6, 0, ""},
      {"A007910", "A-1-row-tail", 8, 0, ""},
      {"A000045", "fibonacci-from-diagonals", 12, 0, "Fib(s) recovered as (-1)^s (B_s - 1)"},
      {"A001045", "jacobsthal", 9, 0, ""},
      {"A000129", "fib-poly-at-2", 8, -1,
       "finding: F_s(2) is the Pell number P_{s+1}, one index past the stated s-th Pell number"},
  };
  return checks;
}

}  // namespace catjac::oeis
