// exsuff: experiments on order-statistic sufficiency for exchangeable vectors.
//
// Exit status: 0 all checks passed, 1 a verification failed, 2 usage or parse
// error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "exsuff/error.hpp"
#include "exsuff/experiments.hpp"
#include "exsuff/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

constexpr std::uint64_t kFallbackSeed = 12345;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("EXSUFF_SEED")) {
    try {
      std::size_t used = 0;
      const std::string s(env);
      const unsigned long long v = std::stoull(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw exsuff::ParseError("EXSUFF_SEED is not an unsigned integer: '" + std::string(env) + "'");
  }
  return kFallbackSeed;
}

void emit(const exsuff::ExperimentConfig& cfg, const std::string& json_text, const std::string& csv_text) {
  const std::string& text = cfg.format == exsuff::ReportFormat::json ? json_text : csv_text;
  if (cfg.output_path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) throw exsuff::ParseError("cannot write report to '" + cfg.output_path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace exsuff;

  CLI::App app{"Order-statistic sufficiency experiments for exchangeable random vectors"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::optional<std::uint64_t> seed_flag;
  std::string format = "json";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed_flag, "Master seed (default: $EXSUFF_SEED, else 12345)");
    sub->add_option("--out", cfg.output_path, "Report path, '-' for stdout")->capture_default_str();
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Dimension")->capture_default_str();
    sub->add_option("--samples", cfg.samples, "Number of sampled vectors")->capture_default_str();
    sub->add_option("--sampler", cfg.sampler_spec,
                    "uniform | normal | exponential | equicorr:RHO | urn:V,... | dirac:C | mixture:W@S,...")
        ->capture_default_str();
  };
  const std::string estimand_help =
      "proj[:K] | sum | wsum:W1,...,Wn | product | max | threshold:T | indicator:A1/A2;B1/B2";

  CLI::App* verify = app.add_subcommand("verify-conditional", "Check conditional laws on finite-support fixtures");
  add_common(verify);
  verify->add_option("--pmf", cfg.pmf_paths, "Additional pmf file(s) in the 'dim n' text format");
  verify->add_flag("!--no-default-catalog", cfg.default_catalog, "Skip the built-in fixture catalog");
  verify->add_option("--fuzz-sets", cfg.fuzz_sets, "Random events per fixture")->capture_default_str();

  CLI::App* rank = app.add_subcommand("rank-uniformity", "Chi-square test that rank vectors are uniform");
  add_common(rank);
  add_sampling(rank);
  rank->add_option("--alpha", cfg.alpha, "Rejection level")->capture_default_str();

  CLI::App* rb = app.add_subcommand("rao-blackwell", "Compare raw and symmetrized estimator variance");
  add_common(rb);
  add_sampling(rb);
  rb->add_option("--estimand", cfg.estimand_spec, estimand_help)->capture_default_str();

  CLI::App* sym = app.add_subcommand("symmetrize", "Symmetrize an estimand over each input row");
  add_common(sym);
  sym->add_option("--input", cfg.input_path, "Data file, '-' for stdin")->capture_default_str();
  sym->add_option("--estimand", cfg.estimand_spec, estimand_help)->capture_default_str();
  sym->add_option("--m", cfg.mc_draws, "Monte Carlo draws for rows with more than 10 values")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.seed = resolve_seed(seed_flag);
    cfg.format = format == "csv" ? ReportFormat::csv : ReportFormat::json;

    if (*verify) {
      cfg.command = "verify-conditional";
      const auto entries = run_conditional_verify(cfg, resolve_fixtures(cfg));
      emit(cfg, dump(report_to_json(cfg, entries)), report_to_csv(entries));
      for (const auto& e : entries) {
        if (!e.passed) return kExitVerificationFailed;
      }
      return kExitOk;
    }
    if (*rank) {
      cfg.command = "rank-uniformity";
      const auto report = run_rank_uniformity(cfg);
      emit(cfg, dump(report_to_json(cfg, report)), report_to_csv(report));
      return !report.degenerate && report.p_value >= cfg.alpha ? kExitOk : kExitVerificationFailed;
    }
    if (*rb) {
      cfg.command = "rao-blackwell";
      const auto cmp = run_rao_blackwell(cfg);
      emit(cfg, dump(report_to_json(cfg, cmp)), report_to_csv(cmp));
      return rao_blackwell_consistent(cmp) ? kExitOk : kExitVerificationFailed;
    }
    if (*sym) {
      cfg.command = "symmetrize";
      std::vector<SymmetrizeRecord> records;
      if (cfg.input_path == "-") {
        records = run_symmetrize(cfg, std::cin);
      } else {
        std::ifstream in(cfg.input_path);
        if (!in) throw ParseError("cannot open input '" + cfg.input_path + "'");
        records = run_symmetrize(cfg, in);
      }
      emit(cfg, dump(report_to_json(cfg, records)), report_to_csv(records));
      for (const auto& r : records) {
        if (!r.error.empty()) return kExitUsage;
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "exsuff: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
