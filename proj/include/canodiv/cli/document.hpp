#pragma once

// The JSON input document shared by the subcommands:
//
//   {"kind": "classical", "objects": [{"name": "p", "data": [1, 2]}, ...]}
//   {"kind": "quantum",   "objects": [{"name": "rho", "data": [[[2, 0], [1, 0]], ...]}]}
//
// Quantum matrices are row-major; each entry is [re, im] or a plain number.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "canodiv/classical.hpp"
#include "canodiv/quantum/operators.hpp"

namespace canodiv::cli {

/// Malformed or invalid input; maps to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Kind { Classical, Quantum };

Kind parse_kind(const std::string& text);
std::string to_string(Kind kind);

class InputDocument {
 public:
  static InputDocument parse(const nlohmann::json& doc);
  static InputDocument load(const std::filesystem::path& path);

  Kind kind() const { return kind_; }
  const std::vector<std::string>& names() const { return names_; }

  const classical::PositiveMeasure& measure(const std::string& name) const;
  const quantum::PositiveOperator& op(const std::string& name) const;

 private:
  std::size_t index_of(const std::string& name) const;

  Kind kind_ = Kind::Classical;
  std::vector<std::string> names_;
  std::vector<classical::PositiveMeasure> measures_;
  std::vector<quantum::PositiveOperator> operators_;
};

}  // namespace canodiv::cli
