#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace canodiv::cli {

struct Record {
  std::string first;
  std::string second;
  std::string family;
  std::string method;
  /// "alpha" or "q".
  std::string parameter;
  double parameter_value = 0.0;
  double value = 0.0;
  std::optional<double> reference;
  double abs_error = 0.0;
  /// abs_error / (1 + |reference|).
  double rel_error = 0.0;
  /// Overrides the report tolerance for this record.
  std::optional<double> tolerance;

  /// Sets the reference and both errors from it.
  void compare_to(double ref);

  friend bool operator==(const Record&, const Record&) = default;
};

struct Summary {
  /// Largest rel_error over the records.
  double max_error = 0.0;
  /// Largest rel_error / tolerance, each record against its own tolerance
  /// when it carries one; pass holds iff this is at most 1.
  double worst_ratio = 0.0;
  double tolerance = 0.0;
  bool pass = true;

  friend bool operator==(const Summary&, const Summary&) = default;
};

struct Report {
  std::string command;
  std::vector<Record> records;
  Summary summary;

  /// Recomputes the summary. A record passes when rel_error is within its own
  /// tolerance, or the report tolerance if it has none.
  void finalize(double tolerance);
  /// Index of the record furthest over (or closest to) its tolerance.
  std::size_t worst() const;

  friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const Record& r);
void from_json(const nlohmann::json& j, Record& r);
void to_json(nlohmann::json& j, const Summary& s);
void from_json(const nlohmann::json& j, Summary& s);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

}  // namespace canodiv::cli
