#pragma once

// Wire formats: JSON schemas for class specifications and run configuration,
// and the CSV / JSON report writers.
//
// Output numbers are rendered with std::to_chars (locale-independent), 10
// significant digits in CSV and 17 in JSON, so byte-identical golden files
// stay byte-identical.

#include <optional>
#include <string>
#include <vector>

#include "widthlab/beta_sequence.hpp"
#include "widthlab/psi_sequence.hpp"
#include "widthlab/verify.hpp"
#include "widthlab/width_bounds.hpp"

namespace widthlab {

// {"family":"power","r":2.0} | {"family":"exp_poly","alpha":1.0,"r":2.0} |
// {"family":"geometric","q":0.5} | {"family":"table","values":[...],"tail_q":0.5}
PsiSequence psi_from_json_text(const std::string& text);

// {"mode":"constant","beta":1.0} | {"mode":"list","values":[...],"default":0.0} |
// {"mode":"periodic","values":[...]}
BetaSequence beta_from_json_text(const std::string& text);

enum class OutputFormat { Csv, Json };

struct RunConfig {
  std::string command;  // bounds | verify | kernel | deviation
  std::string psi_json = R"({"family":"geometric","q":0.5})";
  std::string beta_json = R"({"mode":"constant","beta":0.0})";
  int n_lo = 1;
  int n_hi = 4;
  double tol = 1e-12;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;  // empty: standard output

  // verify extras
  std::string suite = "all";
  int samples = 1000;
  int trend_n_max = 10;

  // kernel extras
  int t_count = 256;
  double t_start = 0.0;
};

// Overlays the fields present in a JSON RunConfig file onto base.
void apply_config_file(RunConfig& base, const std::string& path);

// value rendered with `digits` significant decimal digits, locale-free
std::string format_sig(double value, int digits);

struct BoundsRow {
  WidthBoundsReport report;
  std::optional<WeylNagyBounds> wn;      // power + constant-beta classes
  std::optional<PoissonBounds> poisson;  // exp-poly + constant-beta classes
};

// Header: n,N_even,N_odd,lower,leading,upper,gauge_head,gauge_tail plus
// wn_lower,wn_upper and/or po_lower,po_upper,po_gamma when the class carries
// a specialization.  Rows whose n violates the specialization hypothesis get
// "n/a(precondition)" markers.
std::string bounds_to_csv(const std::vector<BoundsRow>& rows, bool with_wn, bool with_po);
std::string bounds_to_json(const std::vector<BoundsRow>& rows, bool with_wn, bool with_po);

std::string reports_to_json(const std::vector<VerificationReport>& reports);
// "PASS <check_id> ..." one-liner for log output.
std::string report_summary_line(const VerificationReport& report);

std::string pairs_to_csv(const std::string& x_name, const std::string& y_name,
                         const std::vector<std::pair<double, double>>& pairs);
std::string pairs_to_json(const std::string& x_name, const std::string& y_name,
                          const std::vector<std::pair<double, double>>& pairs);

}  // namespace widthlab
