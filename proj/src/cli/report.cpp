#include "canodiv/cli/report.hpp"

#include <algorithm>
#include <cmath>

namespace canodiv::cli {

void Record::compare_to(double ref) {
  reference = ref;
  abs_error = std::abs(value - ref);
  rel_error = abs_error / (1.0 + std::abs(ref));
}

namespace {

double ratio(const Record& r, double tolerance) {
  const double tol = r.tolerance.value_or(tolerance);
  return tol > 0.0 ? r.rel_error / tol : (r.rel_error > 0.0 ? INFINITY : 0.0);
}

template <typename T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  if (v) {
    j[key] = *v;
  } else {
    j[key] = nullptr;
  }
}

template <typename T>
std::optional<T> get_optional(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<T>();
}

}  // namespace

void Report::finalize(double tolerance) {
  summary = Summary{};
  summary.tolerance = tolerance;
  for (const Record& r : records) {
    summary.max_error = std::max(summary.max_error, r.rel_error);
    summary.worst_ratio = std::max(summary.worst_ratio, ratio(r, tolerance));
    if (!(r.rel_error <= r.tolerance.value_or(tolerance))) summary.pass = false;
  }
}

std::size_t Report::worst() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (ratio(records[i], summary.tolerance) > ratio(records[best], summary.tolerance)) best = i;
  }
  return best;
}

void to_json(nlohmann::json& j, const Record& r) {
  j = nlohmann::json{{"first", r.first},         {"second", r.second},
                     {"family", r.family},       {"method", r.method},
                     {"parameter", r.parameter}, {"parameter_value", r.parameter_value},
                     {"value", r.value},         {"abs_error", r.abs_error},
                     {"rel_error", r.rel_error}};
  put_optional(j, "reference", r.reference);
  put_optional(j, "tolerance", r.tolerance);
}

void from_json(const nlohmann::json& j, Record& r) {
  j.at("first").get_to(r.first);
  j.at("second").get_to(r.second);
  j.at("family").get_to(r.family);
  j.at("method").get_to(r.method);
  j.at("parameter").get_to(r.parameter);
  j.at("parameter_value").get_to(r.parameter_value);
  j.at("value").get_to(r.value);
  j.at("abs_error").get_to(r.abs_error);
  j.at("rel_error").get_to(r.rel_error);
  r.reference = get_optional<double>(j, "reference");
  r.tolerance = get_optional<double>(j, "tolerance");
}

void to_json(nlohmann::json& j, const Summary& s) {
  j = nlohmann::json{{"max_error", s.max_error},
                     {"worst_ratio", s.worst_ratio},
                     {"tolerance", s.tolerance}, {"pass", s.pass}};
}

void from_json(const nlohmann::json& j, Summary& s) {
  j.at("max_error").get_to(s.max_error);
  j.at("worst_ratio").get_to(s.worst_ratio);
  j.at("tolerance").get_to(s.tolerance);
  j.at("pass").get_to(s.pass);
}

void to_json(nlohmann::json& j, const Report& r) {
  j = nlohmann::json{{"command", r.command}, {"records", r.records}, {"summary", r.summary}};
}

void from_json(const nlohmann::json& j, Report& r) {
  j.at("command").get_to(r.command);
  j.at("records").get_to(r.records);
  j.at("summary").get_to(r.summary);
}

}  // namespace canodiv::cli
