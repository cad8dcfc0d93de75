#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "catjac/exact_int.hpp"
#include "catjac/poly.hpp"

namespace catjac {

using Value = std::variant<ExactInt, Poly>;

/// Decimal text for integers, descending-power text for polynomials.
std::string value_to_string(const Value& v, std::string_view var = "x");

/// One equality an identity asserts at a parameter tuple.
struct Claim {
  std::string label;
  Value lhs;
  Value rhs;
  std::string var = "x";  // printing only

  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

struct CheckResult {
  bool holds = true;
  /// Both sides of the first failing claim, or of the first claim when all hold.
  Value lhs;
  Value rhs;
  std::string failed_claim;  // empty when everything holds
  std::vector<Claim> claims;
};

/// Inclusive range for one named parameter.
struct ParamRange {
  std::string name;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};
using Box = std::vector<ParamRange>;

using Params = std::span<const std::int64_t>;

struct IdentityRecord {
  std::string id;
  std::string statement;            // the identity, in plain notation
  std::vector<std::string> params;  // order of the tuple passed to the evaluators
  std::string domain;               // human-readable domain
  std::function<bool(Params)> in_domain;
  std::function<std::vector<Claim>(Params)> evaluate;
  Box default_box;
  std::string notes;
};

/// The catalog, in a stable order.
const std::vector<IdentityRecord>& identities();
/// Throws DomainError for an unknown id.
const IdentityRecord& find_identity(std::string_view id);

/// Evaluates every claim of `id` at `params`. Throws DomainError when the
/// tuple is outside the record's domain, unless `unsafe_domain` is set.
CheckResult check(std::string_view id, std::vector<std::int64_t> params, bool unsafe_domain = false);

struct Failure {
  std::vector<std::int64_t> params;
  std::string claim;
  std::string lhs;
  std::string rhs;
};

struct SweepOptions {
  /// Evaluate tuples outside the stated domain too. A DomainError raised
  /// while evaluating such a tuple counts it as skipped.
  bool unsafe_domain = false;
  unsigned workers = 1;
};

struct SweepReport {
  std::string id;
  Box box;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::vector<Failure> failures;
  double millis = 0;
  bool exploratory = false;

  [[nodiscard]] bool verified() const { return failures.empty(); }
};

/// Every tuple of `box` in lexicographic order (first parameter outermost).
/// Parameters missing from `box` take the record's default range; unknown
/// names throw DomainError. The report does not depend on `workers`.
SweepReport sweep(std::string_view id, const Box& box, const SweepOptions& options = {});
/// Sweep over the record's default box.
SweepReport sweep_default(std::string_view id, const SweepOptions& options = {});

/// {id, box, checked, skipped, failures[], millis, exploratory}. With
/// `timing` false, millis is written as 0 so the output is reproducible.
std::string to_json(const SweepReport& report, bool timing = true);

}  // namespace catjac
