#include "exsuff/report.hpp"

#include <cstdio>
#include <sstream>

namespace exsuff {

namespace {

const char* format_name(ReportFormat f) { return f == ReportFormat::json ? "json" : "csv"; }

Json envelope(const ExperimentConfig& cfg) {
  Json j;
  j["tool"] = "exsuff";
  j["version"] = kToolVersion;
  j["command"] = cfg.command;
  j["config"] = config_to_json(cfg);
  return j;
}

Json perm_to_json(const Perm& p) { return Json(std::vector<Perm::index_type>(p.mapping().begin(), p.mapping().end())); }

Json discrepancy_to_json(const DiscrepancyReport& r) {
  Json j;
  j["max_abs_discrepancy"] = r.max_abs_discrepancy;
  j["worst_case"] = r.worst_case;
  j["cases_checked"] = r.cases_checked;
  j["within_tolerance"] = r.within_tolerance;
  return j;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

Json config_to_json(const ExperimentConfig& cfg) {
  Json j;
  j["seed"] = cfg.seed;
  if (cfg.command == "verify-conditional") {
    j["default_catalog"] = cfg.default_catalog;
    j["pmf_files"] = cfg.pmf_paths;
    j["fuzz_sets"] = cfg.fuzz_sets;
  } else if (cfg.command == "symmetrize") {
    j["estimand"] = cfg.estimand_spec;
    j["mc_draws"] = cfg.mc_draws;
  } else {
    j["n"] = cfg.n;
    j["samples"] = cfg.samples;
    j["sampler"] = cfg.sampler_spec;
    if (cfg.command == "rank-uniformity") {
      j["alpha"] = cfg.alpha;
    } else {
      j["estimand"] = cfg.estimand_spec;
    }
  }
  j["format"] = format_name(cfg.format);
  return j;
}

Json report_to_json(const ExperimentConfig& cfg, const RankUniformityReport& r) {
  Json j = envelope(cfg);
  Json result;
  result["n"] = r.n;
  result["samples"] = r.samples;
  result["excluded_ties"] = r.excluded_ties;
  result["degenerate"] = r.degenerate;
  result["chi2"] = r.chi2;
  result["df"] = r.df;
  result["p_value"] = r.p_value;
  result["passed"] = !r.degenerate && r.p_value >= cfg.alpha;
  Json cells = Json::array();
  for (const auto& [perm, count] : r.cell_counts) {
    Json c;
    c["perm"] = perm_to_json(perm);
    c["count"] = count;
    cells.push_back(std::move(c));
  }
  result["cell_counts"] = std::move(cells);
  j["result"] = std::move(result);
  return j;
}

Json report_to_json(const ExperimentConfig& cfg, const std::vector<VerifyEntry>& entries) {
  Json j = envelope(cfg);
  Json list = Json::array();
  bool all_passed = true;
  for (const VerifyEntry& e : entries) {
    Json item;
    item["fixture"] = e.fixture;
    item["check"] = e.check;
    item["expectation"] = e.expected_exchangeable ? "within-tolerance" : "expected-fail";
    item["report"] = discrepancy_to_json(e.report);
    item["passed"] = e.passed;
    all_passed = all_passed && e.passed;
    list.push_back(std::move(item));
  }
  Json result;
  result["tolerance"] = kExactTolerance;
  result["passed"] = all_passed;
  result["entries"] = std::move(list);
  j["result"] = std::move(result);
  return j;
}

Json report_to_json(const ExperimentConfig& cfg, const RbComparison& r) {
  Json j = envelope(cfg);
  Json result;
  result["samples"] = r.samples;
  result["mean_raw"] = r.mean_raw;
  result["var_raw"] = r.var_raw;
  result["mean_rb"] = r.mean_rb;
  result["var_rb"] = r.var_rb;
  result["se_mean_raw"] = r.se_mean_raw;
  result["se_mean_rb"] = r.se_mean_rb;
  result["se_var_raw"] = r.se_var_raw;
  result["se_var_rb"] = r.se_var_rb;
  if (const auto ratio = r.variance_ratio()) {
    result["variance_ratio"] = *ratio;
  } else {
    result["variance_ratio"] = nullptr;
  }
  result["passed"] = rao_blackwell_consistent(r);
  j["result"] = std::move(result);
  return j;
}

Json report_to_json(const ExperimentConfig& cfg, const std::vector<SymmetrizeRecord>& records) {
  Json j = envelope(cfg);
  Json rows = Json::array();
  std::size_t errors = 0;
  for (const SymmetrizeRecord& r : records) {
    Json row;
    row["row"] = r.row;
    if (r.error.empty()) {
      row["order_statistics"] = r.order_statistics;
      row["value"] = *r.value;
      row["std_error"] = r.std_error;
      row["draws"] = r.draws;
      row["exact"] = r.exact;
    } else {
      ++errors;
      row["error"] = r.error;
    }
    rows.push_back(std::move(row));
  }
  Json result;
  result["rows"] = records.size();
  result["errors"] = errors;
  result["records"] = std::move(rows);
  j["result"] = std::move(result);
  return j;
}

std::string report_to_csv(const RankUniformityReport& r) {
  std::ostringstream os;
  os << "# n=" << r.n << " samples=" << r.samples << " excluded_ties=" << r.excluded_ties
     << " chi2=" << num(r.chi2) << " df=" << r.df << " p_value=" << num(r.p_value)
     << " degenerate=" << (r.degenerate ? "true" : "false") << '\n';
  os << "perm,count\n";
  for (const auto& [perm, count] : r.cell_counts) {
    for (std::size_t i = 0; i < perm.size(); ++i) os << (i ? " " : "") << perm[i];
    os << ',' << count << '\n';
  }
  return os.str();
}

std::string report_to_csv(const std::vector<VerifyEntry>& entries) {
  std::ostringstream os;
  os << "fixture,check,expectation,max_abs_discrepancy,cases_checked,passed,worst_case\n";
  for (const VerifyEntry& e : entries) {
    os << csv_quote(e.fixture) << ',' << e.check << ',' << (e.expected_exchangeable ? "within-tolerance" : "expected-fail")
       << ',' << num(e.report.max_abs_discrepancy) << ',' << e.report.cases_checked << ','
       << (e.passed ? "true" : "false") << ',' << csv_quote(e.report.worst_case) << '\n';
  }
  return os.str();
}

std::string report_to_csv(const RbComparison& r) {
  std::ostringstream os;
  os << "samples,mean_raw,var_raw,mean_rb,var_rb,se_mean_raw,se_mean_rb,se_var_raw,se_var_rb,variance_ratio\n";
  const auto ratio = r.variance_ratio();
  os << r.samples << ',' << num(r.mean_raw) << ',' << num(r.var_raw) << ',' << num(r.mean_rb) << ',' << num(r.var_rb)
     << ',' << num(r.se_mean_raw) << ',' << num(r.se_mean_rb) << ',' << num(r.se_var_raw) << ','
     << num(r.se_var_rb) << ',' << (ratio ? num(*ratio) : "NA") << '\n';
  return os.str();
}

std::string report_to_csv(const std::vector<SymmetrizeRecord>& records) {
  std::ostringstream os;
  os << "row,value,std_error,draws,exact,error\n";
  for (const SymmetrizeRecord& r : records) {
    os << r.row << ',';
    if (r.error.empty()) {
      os << num(*r.value) << ',' << num(r.std_error) << ',' << r.draws << ',' << (r.exact ? "true" : "false") << ',';
    } else {
      os << ",,,," << csv_quote(r.error);
    }
    os << '\n';
  }
  return os.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace exsuff
