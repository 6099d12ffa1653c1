#include "canodiv/cli/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "canodiv/classical.hpp"
#include "canodiv/errors.hpp"
#include "canodiv/numkit/quadrature.hpp"
#include "canodiv/quantum/divergences.hpp"
#include "canodiv/quantum/geometry.hpp"
#include "canodiv/recovery.hpp"
#include "canodiv/sampling.hpp"

namespace canodiv::cli {

namespace {

constexpr std::array<double, 5> kAlphaGrid{-0.9, -0.5, 0.0, 0.5, 0.9};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InputError("'" + text + "' is not a number");
  }
  if (used != text.size()) throw InputError("'" + text + "' is not a number");
  return v;
}

Kind resolve_kind(const InputDocument& doc, const std::optional<Kind>& requested) {
  if (requested && *requested != doc.kind()) {
    throw InputError("--kind " + to_string(*requested) + " does not match a " +
                     to_string(doc.kind()) + " document");
  }
  return doc.kind();
}

int checked_nodes(int nodes) {
  if (nodes < 1) throw InputError("--nodes must be at least 1");
  return nodes;
}

// -- divergence ------------------------------------------------------------

enum class Path { Closed, Quadrature };

struct Evaluator {
  const InputDocument& doc;
  const DivergenceOptions& opts;
  numkit::QuadratureRule rule;

  AlphaParam alpha() const { return AlphaParam(*opts.alpha); }
  double q_index() const { return *opts.q; }

  double classical(Path path, const classical::PositiveMeasure& p,
                   const classical::PositiveMeasure& q) const {
    const std::string& f = opts.family;
    if (f == "canonical" || f == "alpha") {
      return path == Path::Closed ? classical::alpha_divergence_closed(p, q, alpha())
                                  : classical::canonical_divergence_numeric(p, q, alpha(), rule);
    }
    if (f == "tsallis") {
      if (path == Path::Closed) return classical::tsallis_q_divergence(p, q, q_index());
      return q_index() * classical::canonical_divergence_numeric(
                             p, q, AlphaParam(1.0 - 2.0 * q_index()), rule);
    }
    if (f == "kl") return classical::kl_extended(p, q);
    return classical::relative_entropy(p, q);
  }

  double quantum(Path path, const quantum::PositiveOperator& a,
                 const quantum::PositiveOperator& b) const {
    const std::string& f = opts.family;
    if (f == "canonical" || f == "alpha") {
      return path == Path::Closed ? quantum::quantum_alpha_divergence_closed(a, b, alpha())
                                  : quantum::canonical_divergence_numeric_q(a, b, alpha(), rule);
    }
    if (f == "tsallis") {
      if (path == Path::Closed) return quantum::quantum_q_divergence(a, b, q_index());
      return q_index() * quantum::canonical_divergence_numeric_q(
                             a, b, AlphaParam(1.0 - 2.0 * q_index()), rule);
    }
    if (f == "furuichi") return quantum::furuichi_q_divergence(a, b, q_index());
    if (f == "kl") {
      return quantum::quantum_relative_entropy(a, b, quantum::RelativeEntropyForm::Extended);
    }
    return quantum::quantum_relative_entropy(a, b, quantum::RelativeEntropyForm::Standard);
  }

  double eval(Path path, const std::string& first, const std::string& second) const {
    if (doc.kind() == Kind::Classical) return classical(path, doc.measure(first), doc.measure(second));
    return quantum(path, doc.op(first), doc.op(second));
  }
};

void check_divergence_flags(const InputDocument& doc, const DivergenceOptions& opts,
                            std::string& method) {
  const std::string& f = opts.family;
  const bool needs_alpha = f == "canonical" || f == "alpha";
  const bool needs_q = f == "tsallis" || f == "furuichi";
  if (!needs_alpha && !needs_q && f != "kl" && f != "relative-entropy") {
    throw InputError("unknown family '" + f + "'");
  }
  if (needs_alpha) {
    if (!opts.alpha) throw InputError("--family " + f + " needs --alpha");
    AlphaParam(*opts.alpha).require_open("--alpha");
  } else if (opts.alpha) {
    throw InputError("--alpha does not apply to --family " + f);
  }
  if (needs_q) {
    if (!opts.q) throw InputError("--family " + f + " needs --q");
    const bool lo_ok = f == "furuichi" ? (*opts.q >= 0.0) : (*opts.q > 0.0);
    if (!(lo_ok && *opts.q < 1.0)) {
      throw InputError("--q out of range for --family " + f + ": " + std::to_string(*opts.q));
    }
  } else if (opts.q) {
    throw InputError("--q only applies to --family tsallis or furuichi");
  }
  if (f == "furuichi" && doc.kind() != Kind::Quantum) {
    throw InputError("--family furuichi is only defined for quantum documents");
  }
  method = opts.method.empty() ? (f == "canonical" ? "quadrature" : "closed") : opts.method;
  if (method != "closed" && method != "quadrature" && method != "both") {
    throw InputError("unknown method '" + method + "' (closed, quadrature or both)");
  }
  const bool has_quadrature = needs_alpha || f == "tsallis";
  if (method != "closed" && !has_quadrature) {
    throw InputError("--family " + f + " has no quadrature path; use --method closed");
  }
}

// -- verify ----------------------------------------------------------------

Record make_record(std::string first, std::string second, std::string family, std::string method,
                   std::string parameter, double parameter_value) {
  Record r;
  r.first = std::move(first);
  r.second = std::move(second);
  r.family = std::move(family);
  r.method = std::move(method);
  r.parameter = std::move(parameter);
  r.parameter_value = parameter_value;
  return r;
}

void classical_suite(Report& report, const VerifyOptions& opts, double tol) {
  sampling::Sampler rng(opts.seed);
  for (int trial = 0; trial < opts.trials; ++trial) {
    const Eigen::Index n = rng.dimension(1, 6);
    const auto p = rng.measure(n);
    const auto q = rng.measure(n);
    const std::string a = "p" + std::to_string(trial);
    const std::string b = "q" + std::to_string(trial);
    for (double av : kAlphaGrid) {
      const AlphaParam alpha(av);
      Record r = make_record(a, b, "canonical", "both", "alpha", av);
      r.value = classical::canonical_divergence_numeric(p, q, alpha);
      r.compare_to(classical::alpha_divergence_closed(p, q, alpha));
      r.tolerance = tol;
      report.records.push_back(r);

      const double qi = 0.5 * (1.0 - av);
      Record s = make_record(a, b, "tsallis", "scaling", "q", qi);
      s.value = classical::tsallis_q_divergence(p, q, qi);
      s.compare_to(qi * classical::alpha_divergence_closed(p, q, alpha));
      s.tolerance = tol;
      report.records.push_back(s);
    }
  }
}

void quantum_suite(Report& report, const VerifyOptions& opts, double tol) {
  sampling::Sampler rng(opts.seed);
  for (int trial = 0; trial < opts.trials; ++trial) {
    const Eigen::Index n = rng.dimension(2, 6);
    const auto r1 = rng.positive_operator(n);
    const auto r2 = rng.positive_operator(n);
    const std::string a = "rho1_" + std::to_string(trial);
    const std::string b = "rho2_" + std::to_string(trial);
    for (double av : kAlphaGrid) {
      const AlphaParam alpha(av);
      Record r = make_record(a, b, "canonical", "both", "alpha", av);
      r.value = quantum::canonical_divergence_numeric_q(r1, r2, alpha);
      r.compare_to(quantum::quantum_alpha_divergence_closed(r1, r2, alpha));
      r.tolerance = tol;
      report.records.push_back(r);

      const double qi = 0.5 * (1.0 - av);
      Record s = make_record(a, b, "tsallis", "scaling", "q", qi);
      s.value = quantum::quantum_q_divergence(r1, r2, qi);
      s.compare_to(qi * quantum::quantum_alpha_divergence_closed(r1, r2, alpha));
      s.tolerance = tol;
      report.records.push_back(s);
    }
  }
}

// Largest component-wise deviation from the analytic Fisher metric and
// alpha-Christoffel symbols, relative for the metric.
void recovery_suite(Report& report, const VerifyOptions& opts, double tol) {
  static constexpr std::array<double, 3> kAlphas{-0.5, 0.0, 0.5};
  sampling::Sampler rng(opts.seed);
  for (int trial = 0; trial < opts.trials; ++trial) {
    const double av = kAlphas[static_cast<std::size_t>(trial) % kAlphas.size()];
    const AlphaParam alpha(av);
    const Eigen::Index n = rng.dimension(2, 3);
    const Eigen::VectorXd p = rng.measure(n, 0.5, 3.0).weights();
    const auto d = recovery::classical_chart(
        [alpha](const classical::PositiveMeasure& x, const classical::PositiveMeasure& y) {
          return classical::alpha_divergence_closed(x, y, alpha);
        });
    const auto s = recovery::recover_structure(d, p);

    double metric_err = 0.0;
    double gamma_err = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const double g = i == j ? 1.0 / p[i] : 0.0;
        metric_err = std::max(metric_err, std::abs(s.metric(i, j) - g) / (1.0 / p[i]));
        for (Eigen::Index k = 0; k < n; ++k) {
          const bool diag = i == j && j == k;
          const double c = diag ? -alpha.dual_exponent() / (p[i] * p[i]) : 0.0;
          const double cd = diag ? -alpha.embedding_exponent() / (p[i] * p[i]) : 0.0;
          gamma_err = std::max(gamma_err, std::abs(s.christoffel(i, j, k) - c));
          gamma_err = std::max(gamma_err, std::abs(s.christoffel_dual(i, j, k) - cd));
        }
      }
    }
    const std::string name = "x" + std::to_string(trial);
    const auto push = [&](const char* what, double value, double tolerance) {
      Record r = make_record(name, name, "alpha", what, "alpha", av);
      r.value = value;
      r.compare_to(0.0);
      r.tolerance = tolerance;
      report.records.push_back(r);
    };
    push("metric", metric_err, std::min(tol, kRecoveryMetricTolerance));
    push("christoffel", gamma_err, tol);
    push("duality_defect", recovery::duality_defect(s, d), tol);
    push("curvature", recovery::curvature_max(d, p), std::max(tol, kRecoveryCurvatureTolerance));
  }
}

// -- recover ---------------------------------------------------------------

nlohmann::json matrix_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json tensor_json(const numkit::Tensor3& t) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < t.dim(); ++i) {
    nlohmann::json plane = nlohmann::json::array();
    for (Eigen::Index j = 0; j < t.dim(); ++j) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index k = 0; k < t.dim(); ++k) row.push_back(t(i, j, k));
      plane.push_back(row);
    }
    out.push_back(plane);
  }
  return out;
}

// -- output ----------------------------------------------------------------

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot open output file '" + path + "'");
  file << text;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> parse_pairs(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const std::string& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
      throw InputError("malformed pair '" + item + "' (expected name:name)");
    }
    out.emplace_back(parts[0], parts[1]);
  }
  return out;
}

std::vector<double> parse_alpha_list(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw InputError("malformed range '" + text + "' (expected lo:hi:step)");
    const double lo = parse_number(parts[0]);
    const double hi = parse_number(parts[1]);
    const double step = parse_number(parts[2]);
    if (!(step > 0.0)) throw InputError("range step must be positive");
    const double slack = 1e-9 * step;
    for (long k = 0;; ++k) {
      const double a = lo + static_cast<double>(k) * step;
      if (a > hi + slack) break;
      out.push_back(std::min(a, hi));
    }
  } else {
    for (const std::string& item : split(text, ',')) {
      if (!item.empty()) out.push_back(parse_number(item));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Report cmd_divergence(const InputDocument& doc, const DivergenceOptions& opts) {
  resolve_kind(doc, opts.kind);
  std::string method;
  check_divergence_flags(doc, opts, method);
  Evaluator ev{doc, opts, numkit::gauss_legendre_rule(checked_nodes(opts.nodes))};

  std::vector<std::pair<std::string, std::string>> pairs = opts.pairs;
  if (pairs.empty()) {
    for (const auto& a : doc.names()) {
      for (const auto& b : doc.names()) {
        if (a != b) pairs.emplace_back(a, b);
      }
    }
  }

  Report report;
  report.command = "divergence";
  const bool uses_q = opts.q.has_value();
  for (const auto& [a, b] : pairs) {
    Record r;
    r.first = a;
    r.second = b;
    r.family = opts.family;
    r.method = method;
    r.parameter = uses_q ? "q" : (opts.alpha ? "alpha" : "");
    r.parameter_value = uses_q ? *opts.q : opts.alpha.value_or(0.0);
    if (method == "closed") {
      r.value = ev.eval(Path::Closed, a, b);
    } else {
      r.value = ev.eval(Path::Quadrature, a, b);
      if (method == "both") r.compare_to(ev.eval(Path::Closed, a, b));
    }
    report.records.push_back(r);
  }
  report.finalize(opts.tolerance);
  return report;
}

Report cmd_verify(const VerifyOptions& opts) {
  if (opts.trials < 1) throw InputError("--trials must be at least 1");
  const std::string& suite = opts.suite;
  if (suite != "classical" && suite != "quantum" && suite != "recovery" && suite != "all") {
    throw InputError("unknown suite '" + suite + "'");
  }
  if (opts.tolerance && !(*opts.tolerance > 0.0)) throw InputError("--tolerance must be positive");
  const double tol = opts.tolerance.value_or(kDefaultTolerance);
  const double recovery_tol = opts.tolerance.value_or(kDefaultRecoveryTolerance);

  Report report;
  report.command = "verify " + suite;
  if (suite == "classical" || suite == "all") classical_suite(report, opts, tol);
  if (suite == "quantum" || suite == "all") quantum_suite(report, opts, tol);
  if (suite == "recovery" || suite == "all") recovery_suite(report, opts, recovery_tol);
  report.finalize(suite == "recovery" ? recovery_tol : tol);
  return report;
}

nlohmann::json cmd_recover(const InputDocument& doc, const RecoverOptions& opts) {
  const Kind kind = resolve_kind(doc, opts.kind);
  const std::string& div = opts.divergence;
  if (div != "alpha" && div != "canonical" && div != "euclidean") {
    throw InputError("unknown divergence '" + div + "' (alpha, canonical or euclidean)");
  }
  const AlphaParam alpha(opts.alpha);
  if (div != "euclidean") alpha.require_open("--alpha");
  recovery::FDConfig cfg = recovery::kDefaultConfig;
  cfg.step = opts.step;
  cfg.validate();

  Eigen::VectorXd point;
  Eigen::MatrixXd reference;
  recovery::BivariateFunction d;
  if (kind == Kind::Classical) {
    const auto& p = doc.measure(opts.point);
    point = p.weights();
    reference = div == "euclidean" ? Eigen::MatrixXd::Identity(p.dim(), p.dim())
                                   : classical::fisher_matrix(p);
    if (div == "alpha") {
      d = recovery::classical_chart([alpha](const auto& x, const auto& y) {
        return classical::alpha_divergence_closed(x, y, alpha);
      });
    } else if (div == "canonical") {
      d = recovery::classical_chart([alpha](const auto& x, const auto& y) {
        return classical::canonical_divergence_numeric(x, y, alpha);
      });
    }
  } else {
    alpha.require_geodesic("--alpha");
    const auto& rho = doc.op(opts.point);
    point = quantum::theta_coordinates(rho, alpha);
    const Eigen::Index n = rho.dim();
    reference = div == "euclidean" ? Eigen::MatrixXd::Identity(point.size(), point.size())
                                   : quantum::wyd_components_theta(rho, alpha);
    if (div == "alpha") {
      d = recovery::theta_chart(
          [alpha](const auto& x, const auto& y) {
            return quantum::quantum_alpha_divergence_closed(x, y, alpha);
          },
          n, alpha);
    } else if (div == "canonical") {
      d = recovery::theta_chart(
          [alpha](const auto& x, const auto& y) {
            return quantum::canonical_divergence_numeric_q(x, y, alpha);
          },
          n, alpha);
    }
  }
  if (div == "euclidean") d = recovery::half_squared_euclidean;

  const auto s = recovery::recover_structure(d, point, cfg);
  nlohmann::json out;
  out["kind"] = to_string(kind);
  out["point"] = opts.point;
  out["coordinates"] = std::vector<double>(point.data(), point.data() + point.size());
  out["divergence"] = div;
  out["alpha"] = opts.alpha;
  out["step"] = cfg.step;
  out["metric"] = matrix_json(s.metric);
  out["reference_metric"] = matrix_json(reference);
  out["metric_max_abs_error"] = (s.metric - reference).cwiseAbs().maxCoeff();
  out["christoffel"] = tensor_json(s.christoffel);
  out["christoffel_dual"] = tensor_json(s.christoffel_dual);
  out["duality_defect"] = recovery::duality_defect(s, d, cfg);
  if (point.size() <= recovery::kMaxCurvatureDim) {
    out["curvature_max"] = recovery::curvature_max(d, point, cfg);
  } else {
    out["curvature_max"] = nullptr;
  }
  return out;
}

std::string cmd_sweep(const InputDocument& doc, const SweepOptions& opts) {
  const Kind kind = resolve_kind(doc, opts.kind);
  if (opts.alphas.empty()) throw InputError("empty alpha list");
  std::vector<double> alphas = opts.alphas;
  std::sort(alphas.begin(), alphas.end());
  for (double a : alphas) AlphaParam(a).require_open("--alphas");
  const auto rule = numkit::gauss_legendre_rule(checked_nodes(opts.nodes));
  const auto& [first, second] = opts.pair;

  std::ostringstream csv;
  csv << "alpha,canonical_numeric,closed,"
      << (kind == Kind::Classical ? "kl_reference" : "relative_entropy_reference")
      << ",abs_gap_to_limit\n";
  double limit = 0.0;
  if (kind == Kind::Classical) {
    limit = classical::kl_extended(doc.measure(first), doc.measure(second));
  } else {
    limit = quantum::quantum_relative_entropy(doc.op(first), doc.op(second),
                                              quantum::RelativeEntropyForm::Extended);
  }
  for (double a : alphas) {
    const AlphaParam alpha(a);
    double numeric = 0.0;
    double closed = 0.0;
    if (kind == Kind::Classical) {
      const auto& p = doc.measure(first);
      const auto& q = doc.measure(second);
      numeric = classical::canonical_divergence_numeric(p, q, alpha, rule);
      closed = classical::alpha_divergence_closed(p, q, alpha);
    } else {
      const auto& r1 = doc.op(first);
      const auto& r2 = doc.op(second);
      numeric = quantum::canonical_divergence_numeric_q(r1, r2, alpha, rule);
      closed = quantum::quantum_alpha_divergence_closed(r1, r2, alpha);
    }
    csv << format_double(a) << ',' << format_double(numeric) << ',' << format_double(closed) << ','
        << format_double(limit) << ',' << format_double(std::abs(closed - limit)) << '\n';
  }
  return csv.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical divergences on positive measures and positive operators", "canodiv"};
  app.require_subcommand(1);

  std::string kind_text;
  const auto add_kind = [&kind_text](CLI::App* sub) {
    sub->add_option("--kind", kind_text, "classical or quantum (must match the document)");
  };
  const auto kind_opt = [&kind_text]() -> std::optional<Kind> {
    if (kind_text.empty()) return std::nullopt;
    return parse_kind(kind_text);
  };

  // divergence
  CLI::App* div = app.add_subcommand("divergence", "Evaluate divergences between named objects");
  std::string div_input;
  std::string div_out;
  std::string pairs_text;
  double alpha_value = 0.0;
  double q_value = 0.0;
  DivergenceOptions div_opts;
  div->add_option("input", div_input, "Input JSON document")->required();
  add_kind(div);
  CLI::Option* alpha_flag = div->add_option("--alpha", alpha_value, "alpha in (-1, 1)");
  CLI::Option* q_flag = div->add_option("--q", q_value, "q for tsallis / furuichi");
  div->add_option("--family", div_opts.family,
                  "canonical, alpha, kl, tsallis, relative-entropy or furuichi");
  div->add_option("--method", div_opts.method, "closed, quadrature or both");
  div->add_option("--nodes", div_opts.nodes, "Gauss-Legendre nodes");
  div->add_option("--pairs", pairs_text, "a:b,c:d (default: all ordered pairs)");
  div->add_option("--tolerance", div_opts.tolerance, "Tolerance for --method both");
  div->add_option("--out", div_out, "Write the JSON report here instead of stdout");

  // verify
  CLI::App* ver = app.add_subcommand("verify", "Run the seeded verification suites");
  VerifyOptions ver_opts;
  double ver_tol = 0.0;
  std::string ver_out;
  ver->add_option("--suite", ver_opts.suite, "classical, quantum, recovery or all");
  ver->add_option("--trials", ver_opts.trials, "Random cases per suite");
  ver->add_option("--seed", ver_opts.seed, "RNG seed")->required();
  CLI::Option* ver_tol_flag = ver->add_option("--tolerance", ver_tol, "Override the tolerance");
  ver->add_option("--out", ver_out, "Write the JSON report here instead of stdout");

  // recover
  CLI::App* rec = app.add_subcommand("recover", "Recover metric and connections from a divergence");
  std::string rec_input;
  std::string rec_out;
  RecoverOptions rec_opts;
  rec->add_option("input", rec_input, "Input JSON document")->required();
  add_kind(rec);
  rec->add_option("--alpha", rec_opts.alpha, "alpha");
  rec->add_option("--point", rec_opts.point, "Object name")->required();
  rec->add_option("--step", rec_opts.step, "Finite-difference step");
  rec->add_option("--divergence", rec_opts.divergence, "alpha, canonical or euclidean");
  rec->add_option("--out", rec_out, "Write the JSON report here instead of stdout");

  // sweep
  CLI::App* swp = app.add_subcommand("sweep", "Tabulate divergences over alpha as CSV");
  std::string swp_input;
  std::string swp_out;
  std::string pair_text;
  std::string alphas_text;
  SweepOptions swp_opts;
  swp->add_option("input", swp_input, "Input JSON document")->required();
  add_kind(swp);
  swp->add_option("--pair", pair_text, "a:b")->required();
  swp->add_option("--alphas", alphas_text, "lo:hi:step or a,b,c")->required();
  swp->add_option("--nodes", swp_opts.nodes, "Gauss-Legendre nodes");
  swp->add_option("--out", swp_out, "CSV path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (div->parsed()) {
      if (alpha_flag->count() > 0) div_opts.alpha = alpha_value;
      if (q_flag->count() > 0) div_opts.q = q_value;
      div_opts.kind = kind_opt();
      if (!pairs_text.empty()) div_opts.pairs = parse_pairs(pairs_text);
      const Report report = cmd_divergence(InputDocument::load(div_input), div_opts);
      write_text(div_out, nlohmann::json(report).dump(2) + "\n", out);
      return report.summary.pass ? kExitOk : kExitVerificationFailed;
    }
    if (ver->parsed()) {
      if (ver_tol_flag->count() > 0) ver_opts.tolerance = ver_tol;
      const Report report = cmd_verify(ver_opts);
      write_text(ver_out, nlohmann::json(report).dump(2) + "\n", out);
      if (!report.summary.pass) {
        err << "verification failed; worst record:\n"
            << nlohmann::json(report.records[report.worst()]).dump(2) << "\n";
        return kExitVerificationFailed;
      }
      return kExitOk;
    }
    if (rec->parsed()) {
      rec_opts.kind = kind_opt();
      const auto json = cmd_recover(InputDocument::load(rec_input), rec_opts);
      write_text(rec_out, json.dump(2) + "\n", out);
      return kExitOk;
    }
    swp_opts.kind = kind_opt();
    const auto pairs = parse_pairs(pair_text);
    if (pairs.size() != 1) throw InputError("--pair takes exactly one a:b");
    swp_opts.pair = pairs.front();
    swp_opts.alphas = parse_alpha_list(alphas_text);
    const std::string csv = cmd_sweep(InputDocument::load(swp_input), swp_opts);
    write_text(swp_out, csv, out);
    return kExitOk;
  } catch (const NumericalDomainError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const InternalConsistencyError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace canodiv::cli
