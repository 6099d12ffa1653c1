#pragma once

// The four subcommands. Each cmd_* function works on parsed options and
// throws on bad input; run_cli parses arguments and maps exceptions onto
// exit codes.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "canodiv/cli/document.hpp"
#include "canodiv/cli/report.hpp"

namespace canodiv::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

inline constexpr double kDefaultTolerance = 1e-8;
inline constexpr double kDefaultRecoveryTolerance = 1e-4;
inline constexpr double kRecoveryMetricTolerance = 1e-5;
inline constexpr double kRecoveryCurvatureTolerance = 1e-3;

struct DivergenceOptions {
  std::optional<Kind> kind;
  std::optional<double> alpha;
  std::optional<double> q;
  std::string family = "canonical";
  /// Empty picks quadrature for canonical and closed otherwise.
  std::string method;
  int nodes = 64;
  /// Empty means every ordered pair of distinct objects.
  std::vector<std::pair<std::string, std::string>> pairs;
  double tolerance = kDefaultTolerance;
};

struct VerifyOptions {
  std::string suite = "all";
  int trials = 20;
  std::uint64_t seed = 0;
  std::optional<double> tolerance;
};

struct RecoverOptions {
  std::optional<Kind> kind;
  double alpha = 0.0;
  std::string point;
  double step = 1e-3;
  std::string divergence = "alpha";
};

struct SweepOptions {
  std::optional<Kind> kind;
  std::pair<std::string, std::string> pair;
  std::vector<double> alphas;
  int nodes = 64;
};

Report cmd_divergence(const InputDocument& doc, const DivergenceOptions& opts);
Report cmd_verify(const VerifyOptions& opts);
nlohmann::json cmd_recover(const InputDocument& doc, const RecoverOptions& opts);
/// CSV text, rows sorted by alpha.
std::string cmd_sweep(const InputDocument& doc, const SweepOptions& opts);

/// "a:b,c:d".
std::vector<std::pair<std::string, std::string>> parse_pairs(const std::string& text);
/// "lo:hi:step" or a comma-separated list.
std::vector<double> parse_alpha_list(const std::string& text);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace canodiv::cli
