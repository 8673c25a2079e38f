// widthlab command line: bound tables, verification suites, kernel and
// deviation values, emitted as CSV or JSON.
//
// Exit codes: 0 success, 2 invalid configuration, 3 precondition violation,
// 4 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "widthlab/errors.hpp"
#include "widthlab/json_io.hpp"
#include "widthlab/kernel.hpp"
#include "widthlab/verify.hpp"
#include "widthlab/width_bounds.hpp"

namespace {

using namespace widthlab;

constexpr int kExitOk = 0;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerifyFailure = 4;

void parse_n_range(const std::string& text, RunConfig& config) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      config.n_lo = config.n_hi = std::stoi(text);
    } else {
      config.n_lo = std::stoi(text.substr(0, dots));
      config.n_hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse --n range: " + text);
  }
  if (config.n_lo < 1 || config.n_hi < config.n_lo)
    throw std::invalid_argument("--n range must be nonempty with lower bound >= 1");
}

void emit(const RunConfig& config, const std::string& payload) {
  if (config.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(config.out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + config.out_path);
  out << payload;
}

int cmd_bounds(const RunConfig& config) {
  const PsiSequence psi = psi_from_json_text(config.psi_json);
  const BetaSequence beta = beta_from_json_text(config.beta_json);
  if (!(config.tol > 0.0)) throw std::invalid_argument("--tol must be positive");

  const bool constant_beta = beta.mode() == BetaSequence::Mode::Constant;
  const bool with_wn = psi.family() == PsiFamily::Power && constant_beta;
  const bool with_po = psi.family() == PsiFamily::ExpPoly && constant_beta;
  if (with_wn && psi.power_r() <= 1.0)
    std::cerr << "note: Weyl-Nagy columns computed with r <= 1; the bracket "
                 "hypothesis r >= (n+1)/2 then only admits n = 1\n";

  std::vector<BoundsRow> rows;
  bool any_specialized = false;
  for (int n = config.n_lo; n <= config.n_hi; ++n) {
    BoundsRow row{bounds_report(psi, beta, n, config.tol), std::nullopt, std::nullopt};
    if (with_wn) {
      try {
        row.wn = weyl_nagy_report(psi.power_r(), n);
        any_specialized = true;
      } catch (const precondition_error&) {
      }
    }
    if (with_po) {
      try {
        row.poisson = poisson_report(psi.alpha(), psi.exp_r(), n);
        any_specialized = true;
      } catch (const precondition_error&) {
      }
    }
    rows.push_back(std::move(row));
  }

  emit(config, config.format == OutputFormat::Csv
                   ? bounds_to_csv(rows, with_wn, with_po)
                   : bounds_to_json(rows, with_wn, with_po));

  if ((with_wn || with_po) && !any_specialized) {
    std::cerr << "error: every n in " << config.n_lo << ".." << config.n_hi
              << " violates the specialization hypothesis\n";
    return kExitPrecondition;
  }
  return kExitOk;
}

int cmd_deviation(const RunConfig& config) {
  const PsiSequence psi = psi_from_json_text(config.psi_json);
  if (!(config.tol > 0.0)) throw std::invalid_argument("--tol must be positive");
  std::vector<std::pair<double, double>> pairs;
  for (int n = config.n_lo; n <= config.n_hi; ++n)
    pairs.emplace_back(n, exact_fourier_deviation(psi, n, config.tol));
  emit(config, config.format == OutputFormat::Csv
                   ? pairs_to_csv("n", "deviation", pairs)
                   : pairs_to_json("n", "deviation", pairs));
  return kExitOk;
}

int cmd_kernel(const RunConfig& config) {
  const KernelSpec spec{psi_from_json_text(config.psi_json),
                        beta_from_json_text(config.beta_json)};
  if (!(config.tol > 0.0)) throw std::invalid_argument("--tol must be positive");
  if (config.t_count < 1) throw std::invalid_argument("--t-count must be >= 1");
  std::vector<std::pair<double, double>> pairs;
  for (int j = 0; j < config.t_count; ++j) {
    const double t = config.t_start + 2.0 * std::numbers::pi * j / config.t_count;
    pairs.emplace_back(t, eval_kernel(spec, t, config.tol));
  }
  emit(config, config.format == OutputFormat::Csv ? pairs_to_csv("t", "kernel", pairs)
                                                  : pairs_to_json("t", "kernel", pairs));
  return kExitOk;
}

int cmd_verify(const RunConfig& config, bool psi_given, bool beta_given) {
  SuiteConfig suite;
  suite.suite = config.suite;
  if (psi_given) suite.psi = psi_from_json_text(config.psi_json);
  if (beta_given) suite.beta = beta_from_json_text(config.beta_json);
  suite.n_lo = config.n_lo;
  suite.n_hi = config.n_hi;
  suite.samples = config.samples;
  suite.trend_n_max = config.trend_n_max;
  suite.tol = config.tol > 0.0 ? config.tol : 1e-6;
  suite.seed = config.seed;

  const std::vector<VerificationReport> reports = run_suite(suite);
  for (const auto& rep : reports) std::cerr << report_summary_line(rep) << '\n';
  emit(config, reports_to_json(reports));

  for (const auto& rep : reports)
    if (!rep.pass && !rep.expected_fail) return kExitVerifyFailure;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-sided width estimates for periodic convolution classes"};
  app.require_subcommand(1);

  RunConfig config;
  if (const char* env_seed = std::getenv("WIDTHLAB_SEED"))
    config.seed = std::strtoull(env_seed, nullptr, 10);

  std::string n_text;
  std::string format_text = "csv";
  std::string config_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--psi", config.psi_json, "psi sequence as JSON");
    sub->add_option("--beta", config.beta_json, "beta sequence as JSON");
    sub->add_option("--n", n_text, "index range, e.g. 2 or 1..6");
    sub->add_option("--tol", config.tol, "relative tolerance for series sums");
    sub->add_option("--seed", config.seed, "seed for randomized checks");
    sub->add_option("--format", format_text, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", config.out_path, "output path (default stdout)");
    sub->add_option("--config", config_path, "JSON run configuration overriding flags");
  };

  CLI::App* bounds = app.add_subcommand("bounds", "per-n width bound table");
  add_common(bounds);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify);
  verify->add_option("--suite", config.suite,
                     "all | deviation | embedding | coefficients | inequalities | "
                     "trend | beta");
  verify->add_option("--samples", config.samples, "random samples per check");
  verify->add_option("--trend-n-max", config.trend_n_max, "last index of trend checks");

  CLI::App* kernel = app.add_subcommand("kernel", "sample the kernel on a uniform grid");
  add_common(kernel);
  kernel->add_option("--t-count", config.t_count, "number of grid points");
  kernel->add_option("--t", config.t_start, "grid start (radians)");

  CLI::App* deviation = app.add_subcommand("deviation", "exact Fourier deviations");
  add_common(deviation);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    config.command = sub->get_name();
    config.format = format_text == "json" ? OutputFormat::Json : OutputFormat::Csv;
    if (!n_text.empty()) parse_n_range(n_text, config);
    // A config file overrides whatever the flags set.
    if (!config_path.empty()) apply_config_file(config, config_path);
    if (config.n_lo < 1 || config.n_hi < config.n_lo)
      throw std::invalid_argument("n range must be nonempty with lower bound >= 1");

    if (config.command == "bounds") return cmd_bounds(config);
    if (config.command == "deviation") return cmd_deviation(config);
    if (config.command == "kernel") return cmd_kernel(config);
    if (config.command == "verify")
      return cmd_verify(config, sub->count("--psi") > 0, sub->count("--beta") > 0);
    throw std::invalid_argument("unknown command: " + config.command);
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
}
