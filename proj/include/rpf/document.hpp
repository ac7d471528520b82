#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "rpf/classed.hpp"
#include "rpf/dense.hpp"

namespace rpf {

inline constexpr std::string_view kDenseFormat = "rpf-dense-v1";
inline constexpr std::string_view kClassedFormat = "rpf-classed-v1";

/// Malformed text or schema: the input is not an RPF document at all.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Well-formed document whose table violates the axioms (or, for the
/// classed form, its structural invariants). Carries one line per problem.
struct ValidationError : std::runtime_error {
  std::vector<std::string> problems;
  std::vector<AxiomViolation> violations;

  explicit ValidationError(std::vector<std::string> problems_,
                           std::vector<AxiomViolation> violations_ = {})
      : std::runtime_error(problems_.empty() ? "invalid document" : problems_.front()),
        problems(std::move(problems_)),
        violations(std::move(violations_)) {}
};

using Document = std::variant<DenseRpf, ClassedRpf>;

namespace detail {

inline Magnitude magnitude_from_json(const nlohmann::json& cell) {
  if (cell.is_string()) return parse_magnitude(cell.get<std::string>());
  if (cell.is_number()) {
    const double v = cell.get<double>();
    if (!(v >= 0.0)) throw std::invalid_argument("negative value");
    return Magnitude::from_linear(v);
  }
  throw std::invalid_argument("value must be a string or a non-negative number");
}

inline DenseRpf table_from_json(const nlohmann::json& rows, int k, const char* field) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != k)
    throw ParseError(std::string(field) + " must be an array of " + std::to_string(k) + " rows");
  DenseRpf table(k);
  for (int i = 0; i < k; ++i) {
    const nlohmann::json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != k)
      throw ParseError(std::string(field) + " row " + std::to_string(i) + " must have " +
                       std::to_string(k) + " entries");
    for (int j = 0; j < k; ++j) {
      try {
        table.set(i, j, magnitude_from_json(row[j]));
      } catch (const std::invalid_argument& err) {
        throw ParseError(std::string(field) + " entry (" + std::to_string(i) + ", " +
                         std::to_string(j) + "): " + err.what());
      }
    }
  }
  return table;
}

inline nlohmann::json table_to_json(const DenseRpf& p) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < p.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < p.size(); ++j) row.push_back(render(p(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

/// Parses a document and validates it. Throws ParseError for anything that
/// is not a well-formed document and ValidationError (with witnesses) when
/// the table breaks the axioms.
inline Document parse_document(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("not valid JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("format") || !doc["format"].is_string())
    throw ParseError("document must be an object with a \"format\" tag");
  const std::string format = doc["format"].get<std::string>();
  if (!doc.contains("k") || !doc["k"].is_number_integer() || doc["k"].get<int>() < 0)
    throw ParseError("\"k\" must be a non-negative integer");
  const int k = doc["k"].get<int>();

  if (format == kDenseFormat) {
    if (!doc.contains("values")) throw ParseError("dense document needs \"values\"");
    DenseRpf table = detail::table_from_json(doc["values"], k, "values");
    std::vector<AxiomViolation> violations = validate(table);
    if (!violations.empty()) {
      std::vector<std::string> lines;
      lines.reserve(violations.size());
      for (const AxiomViolation& v : violations) lines.push_back(v.describe());
      throw ValidationError(std::move(lines), std::move(violations));
    }
    return table;
  }

  if (format == kClassedFormat) {
    for (const char* field : {"assignment", "logValue", "classOrder"})
      if (!doc.contains(field))
        throw ParseError(std::string("classed document needs \"") + field + "\"");
    ClassedRpf c;
    c.k = k;
    if (!doc["assignment"].is_array() || static_cast<int>(doc["assignment"].size()) != k ||
        !doc["logValue"].is_array() || static_cast<int>(doc["logValue"].size()) != k)
      throw ParseError("\"assignment\" and \"logValue\" must be arrays of k entries");
    for (const nlohmann::json& cell : doc["assignment"]) {
      if (!cell.is_number_integer()) throw ParseError("\"assignment\" entries must be integers");
      c.assignment.push_back(cell.get<int>());
    }
    int classes = 0;
    for (const int cls : c.assignment) classes = std::max(classes, cls + 1);
    for (const nlohmann::json& cell : doc["logValue"]) {
      if (!cell.is_number()) throw ParseError("\"logValue\" entries must be numbers");
      c.log_value.push_back(cell.get<double>());
    }
    c.class_order = detail::table_from_json(doc["classOrder"], classes, "classOrder");
    std::vector<std::string> problems = validate_classed(c);
    if (!problems.empty()) throw ValidationError(std::move(problems));
    return c;
  }

  throw ParseError("unknown format tag \"" + format + "\"");
}

/// Canonical text: compact JSON, alphabetical keys, shortest value
/// rendering, one trailing newline. Canonical documents are byte-stable
/// through parse -> serialize.
inline std::string serialize_document(const DenseRpf& p) {
  nlohmann::json doc;
  doc["format"] = kDenseFormat;
  doc["k"] = p.size();
  doc["values"] = detail::table_to_json(p);
  return doc.dump() + "\n";
}

inline std::string serialize_document(const ClassedRpf& c) {
  nlohmann::json doc;
  doc["format"] = kClassedFormat;
  doc["k"] = c.k;
  doc["assignment"] = c.assignment;
  doc["logValue"] = c.log_value;
  doc["classOrder"] = detail::table_to_json(c.class_order);
  return doc.dump() + "\n";
}

inline std::string serialize_document(const Document& doc) {
  if (std::holds_alternative<DenseRpf>(doc))
    return serialize_document(std::get<DenseRpf>(doc));
  return serialize_document(std::get<ClassedRpf>(doc));
}

}  // namespace rpf
