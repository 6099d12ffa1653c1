#include "canodiv/cli/document.hpp"

#include <algorithm>
#include <fstream>

#include "canodiv/errors.hpp"

namespace canodiv::cli {

Kind parse_kind(const std::string& text) {
  if (text == "classical") return Kind::Classical;
  if (text == "quantum") return Kind::Quantum;
  throw InputError("unknown kind '" + text + "' (expected classical or quantum)");
}

std::string to_string(Kind kind) { return kind == Kind::Classical ? "classical" : "quantum"; }

namespace {

classical::PositiveMeasure parse_measure(const nlohmann::json& data, const std::string& name) {
  if (!data.is_array() || data.empty()) {
    throw InputError("object '" + name + "': data must be a non-empty array of numbers");
  }
  Eigen::VectorXd w(static_cast<Eigen::Index>(data.size()));
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!data[i].is_number()) {
      throw InputError("object '" + name + "': entry " + std::to_string(i) + " is not a number");
    }
    w[static_cast<Eigen::Index>(i)] = data[i].get<double>();
  }
  try {
    return classical::PositiveMeasure(std::move(w));
  } catch (const std::exception& e) {
    throw InputError("object '" + name + "': " + e.what());
  }
}

quantum::Complex parse_entry(const nlohmann::json& e, const std::string& name) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  throw InputError("object '" + name + "': matrix entries must be numbers or [re, im] pairs");
}

quantum::PositiveOperator parse_operator(const nlohmann::json& data, const std::string& name) {
  if (!data.is_array() || data.empty()) {
    throw InputError("object '" + name + "': data must be a non-empty array of rows");
  }
  const std::size_t n = data.size();
  quantum::ComplexMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!data[i].is_array() || data[i].size() != n) {
      throw InputError("object '" + name + "': matrix must be square");
    }
    for (std::size_t j = 0; j < n; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = parse_entry(data[i][j], name);
    }
  }
  try {
    return quantum::PositiveOperator(m);
  } catch (const NotPositiveDefiniteError& e) {
    // A nonpositive eigenvalue is bad data; a positive but ill-conditioned
    // spectrum is a numerical-domain failure.
    if (e.smallest_eigenvalue() > 0.0) {
      throw NotPositiveDefiniteError("object '" + name + "': " + e.what(), e.smallest_eigenvalue());
    }
    throw InputError("object '" + name + "': " + e.what());
  } catch (const std::exception& e) {
    throw InputError("object '" + name + "': " + e.what());
  }
}

}  // namespace

InputDocument InputDocument::parse(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("input document must be a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw InputError("input document needs a string field 'kind'");
  }
  if (!doc.contains("objects") || !doc["objects"].is_array()) {
    throw InputError("input document needs an array field 'objects'");
  }
  InputDocument out;
  out.kind_ = parse_kind(doc["kind"].get<std::string>());
  for (const auto& obj : doc["objects"]) {
    if (!obj.is_object() || !obj.contains("name") || !obj["name"].is_string() ||
        !obj.contains("data")) {
      throw InputError("every object needs a string 'name' and a 'data' field");
    }
    const std::string name = obj["name"].get<std::string>();
    if (std::find(out.names_.begin(), out.names_.end(), name) != out.names_.end()) {
      throw InputError("duplicate object name '" + name + "'");
    }
    if (out.kind_ == Kind::Classical) {
      out.measures_.push_back(parse_measure(obj["data"], name));
    } else {
      out.operators_.push_back(parse_operator(obj["data"], name));
    }
    out.names_.push_back(name);
  }
  return out;
}

InputDocument InputDocument::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path.string() + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse(doc);
}

std::size_t InputDocument::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InputError("unknown object name '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

const classical::PositiveMeasure& InputDocument::measure(const std::string& name) const {
  if (kind_ != Kind::Classical) throw InputError("document holds quantum objects");
  return measures_[index_of(name)];
}

const quantum::PositiveOperator& InputDocument::op(const std::string& name) const {
  if (kind_ != Kind::Quantum) throw InputError("document holds classical objects");
  return operators_[index_of(name)];
}

}  // namespace canodiv::cli
