#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catjac/exact_int.hpp"

namespace catjac::oeis {

enum class Provenance { Bundled, UserFile };

/// Terms of an OEIS sequence with contiguous indices starting at `offset`.
struct SequenceRef {
  std::string id;  // "A007179"
  std::int64_t offset = 0;
  std::vector<ExactInt> terms;
  Provenance provenance = Provenance::UserFile;

  [[nodiscard]] std::int64_t last_index() const {
    return offset + static_cast<std::int64_t>(terms.size()) - 1;
  }
  [[nodiscard]] const ExactInt* term(std::int64_t index) const;
};

/// Parses OEIS b-file text: `index value` per line; `#` comments and blank
/// lines are skipped. Throws FormatError or GapError.
SequenceRef parse_bfile(std::string_view text, std::string id = {});
SequenceRef load_bfile(const std::filesystem::path& path);
/// b-file text for `seq` (comment header plus one pair per line).
std::string to_bfile(const SequenceRef& seq);

/// Every bundled sequence, parsed from the snapshots compiled into the library.
const std::vector<SequenceRef>& bundled();
/// Bundled sequence by id, e.g. "A059714".
const SequenceRef* find_bundled(std::string_view id);
/// Sequences from a directory laid out as bNNNNNN.txt; ids are recovered from file names.
std::vector<SequenceRef> load_directory(const std::filesystem::path& dir);

/// A term generator backed by the library.
struct Generator {
  std::string name;
  std::string description;
  std::int64_t first_index = 0;
  std::function<ExactInt(std::int64_t)> term;
};

const std::vector<Generator>& generators();
/// Throws UnknownGenerator.
const Generator& find_generator(std::string_view name);

struct Mismatch {
  std::int64_t index = 0;  // index in the sequence
  ExactInt expected;       // from the b-file
  ExactInt got;            // from the generator
};

struct MatchReport {
  std::string sequence_id;
  std::string generator;
  bool matched = false;
  /// Generator index = sequence index + shift for the reported alignment.
  std::int64_t shift = 0;
  std::size_t matched_length = 0;
  std::optional<Mismatch> first_mismatch;  // at shift 0, when nothing matched
};

/// Largest |shift| tried by cross_check.
inline constexpr std::int64_t kAlignmentWindow = 3;

/// Compares up to `max_terms` terms of `seq` with the generator under every
/// shift in [-kAlignmentWindow, kAlignmentWindow]. Shift 0 wins when it
/// matches; otherwise the smallest |shift| that matches every compared term.
MatchReport cross_check(const SequenceRef& seq, std::string_view generator, std::size_t max_terms);

/// One bundled cross-check: which generator should reproduce which sequence.
struct BundledCheck {
  std::string sequence_id;
  std::string generator;
  std::size_t printed_terms = 0;   // length of the list printed next to the citation
  std::int64_t expected_shift = 0; // nonzero = an index-origin finding
  std::string note;
};

/// The catalog of bundled checks, one per bundled sequence (two for A220074).
const std::vector<BundledCheck>& bundled_checks();

}  // namespace catjac::oeis
