#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "balt/interval.hpp"
#include "balt/rational.hpp"

namespace balt::report {

enum class Status { kPass, kFail, kFlag };

const char* status_name(Status s);

/// A reported quantity: human-readable decimal plus exact provenance
/// ("num/den" for rationals, "lo..hi" of fractions for enclosures).
struct Value {
  std::string decimal;
  std::string exact;

  static Value of(const num::Rational& r, unsigned digits);
  static Value of(const num::RatInterval& i, unsigned digits);
  static Value of(const num::BigInt& n);
  static Value text(std::string s);
};

/// One machine-readable result line. `status` is kFail only when an exact
/// comparison refutes a claim; kFlag marks documented discrepancies,
/// undecidable comparisons and stochastic misses.
struct Row {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::kPass;
  std::optional<Value> lhs;
  std::optional<Value> rhs;
  std::string note;

  Row& with(std::string key, std::string value);
  Row& with(std::string key, unsigned long value);
};

std::string to_jsonl(const Row& row);
std::string csv_header();
std::string to_csv(const Row& row);

/// Exit-code semantics: 1 if any fail, else 3 if any flag, else 0.
int aggregate_outcome(std::span<const Row> rows);

/// Fraction digits used for every decimal the reports emit.
inline constexpr unsigned kReportDigits = 12;

}  // namespace balt::report
