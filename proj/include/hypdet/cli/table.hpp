#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypdet/numerics/ext_complex.hpp"

namespace hypdet::cli {

enum class Format { json, csv };

/// One output row.  `value` is printed with the full decimal precision of
/// the run; `certified_digits` says how many of those digits are backed by
/// the rounding and truncation bounds.
struct ResultRow {
  std::string label;
  std::optional<long> index;
  std::optional<ExtComplex> value;
  /// Value is an exact integer (printed without exponent, digits "exact").
  bool exact = false;
  std::optional<int> certified_digits;
  std::optional<ExtReal> tail_bound;
  std::optional<ExtReal> residual;
  std::optional<ExtReal> tolerance;
  std::string status;
};

struct ResultTable {
  std::string command;
  long precision_bits = 0;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<ResultRow> rows;
};

/// Decimal digits carried by a P-bit significand, floor(P log10 2).
int decimal_digits(long bits);

/// Digits certified by a relative error bound, capped by the rounding level.
int certified_digits(long bits, const ExtReal& relative_error);

void write_table(std::ostream& out, const ResultTable& table, Format format);

/// Structured error report (kind is e.g. "domain", "usage", "internal").
void write_error(std::ostream& out, std::string_view kind, std::string_view message, Format format);

}  // namespace hypdet::cli
