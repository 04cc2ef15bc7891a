#include "hypdet/cli/table.hpp"

#include <cmath>
#include <ostream>

#include <json.hpp>

#include "hypdet/cli/document.hpp"

namespace hypdet::cli {

namespace {

using ordered = nlohmann::ordered_json;

const char* const kColumns[] = {"label",          "index",    "re",       "im",        "precision_bits",
                                "certified_digits", "tail_bound", "residual", "tolerance", "status"};

std::string value_text(const ExtReal& x, const ResultRow& row, long bits) {
  if (row.exact && x.is_integer()) return std::to_string(x.to_long());
  return (x.is_zero() ? abs(x) : x).to_string(decimal_digits(bits));
}

std::string bound_text(const ExtReal& x) { return x.to_string(6); }

std::string digits_text(const ResultRow& row) {
  if (row.exact) return "exact";
  return row.certified_digits ? std::to_string(*row.certified_digits) : "";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

int decimal_digits(long bits) { return static_cast<int>(std::floor(static_cast<double>(bits) * std::log10(2.0))); }

int certified_digits(long bits, const ExtReal& relative_error) {
  int rounding = decimal_digits(bits - 20);
  if (relative_error.sign() <= 0) return rounding;
  double l = -log2_abs(relative_error) * std::log10(2.0);
  int t = static_cast<int>(std::floor(l));
  if (t < 0) t = 0;
  return t < rounding ? t : rounding;
}

void write_table(std::ostream& out, const ResultTable& table, Format format) {
  const long bits = table.precision_bits;
  if (format == Format::csv) {
    for (std::size_t i = 0; i < std::size(kColumns); ++i) out << (i ? "," : "") << kColumns[i];
    out << '\n';
    for (const auto& r : table.rows) {
      std::string cells[] = {r.label,
                             r.index ? std::to_string(*r.index) : "",
                             r.value ? value_text(r.value->re(), r, bits) : "",
                             r.value ? value_text(r.value->im(), r, bits) : "",
                             std::to_string(bits),
                             r.value ? digits_text(r) : "",
                             r.tail_bound ? bound_text(*r.tail_bound) : "",
                             r.residual ? bound_text(*r.residual) : "",
                             r.tolerance ? bound_text(*r.tolerance) : "",
                             r.status};
      for (std::size_t i = 0; i < std::size(cells); ++i) out << (i ? "," : "") << csv_field(cells[i]);
      out << '\n';
    }
    return;
  }

  ordered doc;
  doc["schema"] = kSchemaVersion;
  doc["command"] = table.command;
  doc["precision_bits"] = bits;
  ordered params = ordered::object();
  for (const auto& [k, v] : table.parameters) params[k] = v;
  doc["parameters"] = params;
  ordered rows = ordered::array();
  for (const auto& r : table.rows) {
    ordered row;
    row["label"] = r.label;
    row["index"] = r.index ? ordered(*r.index) : ordered(nullptr);
    row["re"] = r.value ? ordered(value_text(r.value->re(), r, bits)) : ordered(nullptr);
    row["im"] = r.value ? ordered(value_text(r.value->im(), r, bits)) : ordered(nullptr);
    row["precision_bits"] = bits;
    if (!r.value) {
      row["certified_digits"] = nullptr;
    } else if (r.exact) {
      row["certified_digits"] = "exact";
    } else {
      row["certified_digits"] = r.certified_digits ? ordered(*r.certified_digits) : ordered(nullptr);
    }
    row["tail_bound"] = r.tail_bound ? ordered(bound_text(*r.tail_bound)) : ordered(nullptr);
    row["residual"] = r.residual ? ordered(bound_text(*r.residual)) : ordered(nullptr);
    row["tolerance"] = r.tolerance ? ordered(bound_text(*r.tolerance)) : ordered(nullptr);
    row["status"] = r.status.empty() ? ordered(nullptr) : ordered(r.status);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

void write_error(std::ostream& out, std::string_view kind, std::string_view message, Format format) {
  if (format == Format::csv) {
    out << "error," << csv_field(std::string(kind)) << ',' << csv_field(std::string(message)) << '\n';
    return;
  }
  ordered doc;
  doc["schema"] = kSchemaVersion;
  doc["error"] = {{"kind", std::string(kind)}, {"message", std::string(message)}};
  out << doc.dump(2) << '\n';
}

}  // namespace hypdet::cli
