#include "widthlab/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace widthlab {

namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded())
    throw std::invalid_argument(std::string("malformed JSON for ") + what);
  return j;
}

double require_number(const json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw std::invalid_argument(std::string(what) + " requires numeric field \"" + key +
                                "\"");
  return j.at(key).get<double>();
}

std::vector<double> require_array(const json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw std::invalid_argument(std::string(what) + " requires array field \"" + key +
                                "\"");
  std::vector<double> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number())
      throw std::invalid_argument(std::string(what) + ": \"" + key +
                                  "\" must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

PsiSequence psi_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string())
    throw std::invalid_argument("psi spec requires string field \"family\"");
  const std::string family = j.at("family").get<std::string>();
  if (family == "power") return PsiSequence::power(require_number(j, "r", "power psi"));
  if (family == "exp_poly")
    return PsiSequence::exp_poly(require_number(j, "alpha", "exp_poly psi"),
                                 require_number(j, "r", "exp_poly psi"));
  if (family == "geometric")
    return PsiSequence::geometric(require_number(j, "q", "geometric psi"));
  if (family == "table")
    return PsiSequence::table_with_tail(require_array(j, "values", "table psi"),
                                        require_number(j, "tail_q", "table psi"));
  throw std::invalid_argument("unknown psi family: " + family);
}

BetaSequence beta_from_json(const json& j) {
  if (!j.is_object() || !j.contains("mode") || !j.at("mode").is_string())
    throw std::invalid_argument("beta spec requires string field \"mode\"");
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "constant")
    return BetaSequence::constant(require_number(j, "beta", "constant beta"));
  if (mode == "list")
    return BetaSequence::list(require_array(j, "values", "list beta"),
                              require_number(j, "default", "list beta"));
  if (mode == "periodic")
    return BetaSequence::periodic(require_array(j, "values", "periodic beta"));
  throw std::invalid_argument("unknown beta mode: " + mode);
}

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
}

void append_number(std::string& out, double v) { out += format_sig(v, 17); }

constexpr const char* kNaMarker = "n/a(precondition)";

}  // namespace

PsiSequence psi_from_json_text(const std::string& text) {
  return psi_from_json(parse(text, "psi spec"));
}

BetaSequence beta_from_json_text(const std::string& text) {
  return beta_from_json(parse(text, "beta spec"));
}

void apply_config_file(RunConfig& base, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const json j = parse(buf.str(), "run config");
  if (!j.is_object()) throw std::invalid_argument("run config must be a JSON object");

  if (j.contains("command")) {
    const std::string cmd = j.at("command").get<std::string>();
    if (!base.command.empty() && cmd != base.command)
      throw std::invalid_argument("config command \"" + cmd +
                                  "\" does not match the invoked subcommand");
    base.command = cmd;
  }
  if (j.contains("class_spec")) {
    const auto& cs = j.at("class_spec");
    if (cs.contains("psi")) base.psi_json = cs.at("psi").dump();
    if (cs.contains("beta")) base.beta_json = cs.at("beta").dump();
  }
  if (j.contains("n_range")) {
    const auto& nr = j.at("n_range");
    if (!nr.is_array() || nr.size() != 2)
      throw std::invalid_argument("n_range must be [lo, hi]");
    base.n_lo = nr.at(0).get<int>();
    base.n_hi = nr.at(1).get<int>();
  }
  if (j.contains("tol")) base.tol = j.at("tol").get<double>();
  if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("output")) {
    const std::string fmt = j.at("output").get<std::string>();
    if (fmt == "csv")
      base.format = OutputFormat::Csv;
    else if (fmt == "json")
      base.format = OutputFormat::Json;
    else
      throw std::invalid_argument("unknown output format: " + fmt);
  }
  if (j.contains("out_path")) base.out_path = j.at("out_path").get<std::string>();
  if (j.contains("suite")) base.suite = j.at("suite").get<std::string>();
  if (j.contains("samples")) base.samples = j.at("samples").get<int>();
  if (j.contains("trend_n_max")) base.trend_n_max = j.at("trend_n_max").get<int>();
  if (j.contains("t_count")) base.t_count = j.at("t_count").get<int>();
  if (j.contains("t_start")) base.t_start = j.at("t_start").get<double>();
}

std::string format_sig(double value, int digits) {
  char buf[64];
  auto res =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

std::string bounds_to_csv(const std::vector<BoundsRow>& rows, bool with_wn,
                          bool with_po) {
  std::string out = "n,N_even,N_odd,lower,leading,upper,gauge_head,gauge_tail";
  if (with_wn) out += ",wn_lower,wn_upper";
  if (with_po) out += ",po_lower,po_upper,po_gamma";
  out += '\n';

  for (const auto& row : rows) {
    const auto& r = row.report;
    out += std::to_string(r.n) + ',' + std::to_string(r.N_even) + ',' +
           std::to_string(r.N_odd) + ',' + format_sig(r.lower, 10) + ',' +
           format_sig(r.leading, 10) + ',' + format_sig(r.upper, 10) + ',' +
           format_sig(r.gauge.head_term, 10) + ',' + format_sig(r.gauge.tail_term, 10);
    if (with_wn) {
      if (row.wn)
        out += ',' + format_sig(row.wn->lower, 10) + ',' + format_sig(row.wn->upper, 10);
      else
        out += std::string(",") + kNaMarker + ',' + kNaMarker;
    }
    if (with_po) {
      if (row.poisson)
        out += ',' + format_sig(row.poisson->lower, 10) + ',' +
               format_sig(row.poisson->upper, 10) + ',' +
               format_sig(row.poisson->gamma, 10);
      else
        out += std::string(",") + kNaMarker + ',' + kNaMarker + ',' + kNaMarker;
    }
    out += '\n';
  }
  return out;
}

std::string bounds_to_json(const std::vector<BoundsRow>& rows, bool with_wn,
                           bool with_po) {
  std::string out = "[";
  bool first_row = true;
  for (const auto& row : rows) {
    const auto& r = row.report;
    out += first_row ? "\n" : ",\n";
    first_row = false;
    out += "  {\"n\":" + std::to_string(r.n);
    out += ",\"N_even\":" + std::to_string(r.N_even);
    out += ",\"N_odd\":" + std::to_string(r.N_odd);
    out += ",\"lower\":";
    append_number(out, r.lower);
    out += ",\"leading\":";
    append_number(out, r.leading);
    out += ",\"upper\":";
    append_number(out, r.upper);
    out += ",\"gauge_head\":";
    append_number(out, r.gauge.head_term);
    out += ",\"gauge_tail\":";
    append_number(out, r.gauge.tail_term);
    if (with_wn) {
      if (row.wn) {
        out += ",\"wn_lower\":";
        append_number(out, row.wn->lower);
        out += ",\"wn_upper\":";
        append_number(out, row.wn->upper);
      } else {
        out += std::string(",\"wn_lower\":\"") + kNaMarker + "\",\"wn_upper\":\"" +
               kNaMarker + "\"";
      }
    }
    if (with_po) {
      if (row.poisson) {
        out += ",\"po_lower\":";
        append_number(out, row.poisson->lower);
        out += ",\"po_upper\":";
        append_number(out, row.poisson->upper);
        out += ",\"po_gamma\":";
        append_number(out, row.poisson->gamma);
      } else {
        out += std::string(",\"po_lower\":\"") + kNaMarker + "\",\"po_upper\":\"" +
               kNaMarker + "\",\"po_gamma\":\"" + kNaMarker + "\"";
      }
    }
    out += "}";
  }
  out += "\n]\n";
  return out;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  std::string out = "[";
  bool first = true;
  for (const auto& rep : reports) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "  {\"check_id\":";
    append_escaped(out, rep.check_id);
    out += ",\"inputs\":{";
    bool first_kv = true;
    for (const auto& [key, value] : rep.inputs) {
      if (!first_kv) out += ',';
      first_kv = false;
      append_escaped(out, key);
      out += ':';
      append_escaped(out, value);
    }
    if (rep.expected_fail) {
      if (!first_kv) out += ',';
      out += "\"expected_fail\":\"true\"";
    }
    out += "},\"analytic\":";
    append_number(out, rep.analytic);
    out += ",\"oracle\":";
    append_number(out, rep.oracle);
    out += ",\"margin\":";
    append_number(out, rep.margin);
    out += ",\"tolerance\":";
    append_number(out, rep.tolerance);
    out += ",\"pass\":";
    out += rep.pass ? "true" : "false";
    out += ",\"seed\":" + std::to_string(rep.seed);
    out += "}";
  }
  out += "\n]\n";
  return out;
}

std::string report_summary_line(const VerificationReport& report) {
  std::string status;
  if (report.pass)
    status = report.expected_fail ? "XPASS" : "PASS ";
  else
    status = report.expected_fail ? "XFAIL" : "FAIL ";
  return status + " " + report.check_id + "  analytic=" + format_sig(report.analytic, 6) +
         " oracle=" + format_sig(report.oracle, 6) +
         " margin=" + format_sig(report.margin, 6);
}

std::string pairs_to_csv(const std::string& x_name, const std::string& y_name,
                         const std::vector<std::pair<double, double>>& pairs) {
  std::string out = x_name + ',' + y_name + '\n';
  for (const auto& [x, y] : pairs)
    out += format_sig(x, 10) + ',' + format_sig(y, 10) + '\n';
  return out;
}

std::string pairs_to_json(const std::string& x_name, const std::string& y_name,
                          const std::vector<std::pair<double, double>>& pairs) {
  std::string out = "[";
  bool first = true;
  for (const auto& [x, y] : pairs) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "  {\"" + x_name + "\":";
    append_number(out, x);
    out += ",\"" + y_name + "\":";
    append_number(out, y);
    out += "}";
  }
  out += "\n]\n";
  return out;
}

}  // namespace widthlab
