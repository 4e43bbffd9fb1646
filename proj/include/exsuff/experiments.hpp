#pragma once

// Experiment drivers behind the CLI subcommands. Each run is a deterministic
// function of its ExperimentConfig.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exsuff/dist.hpp"
#include "exsuff/oracle.hpp"
#include "exsuff/perm.hpp"
#include "exsuff/symmetrize.hpp"

namespace exsuff {

enum class ReportFormat { json, csv };

struct ExperimentConfig {
  std::string command;
  std::uint64_t seed = 0;
  std::size_t n = 3;
  std::uint64_t samples = 10000;
  std::string sampler_spec = "uniform";
  std::string estimand_spec = "proj";
  std::string output_path = "-";
  ReportFormat format = ReportFormat::json;

  // Per-command options.
  std::uint64_t mc_draws = kDefaultMcDraws;  // symmetrize
  double alpha = 0.001;                      // rank-uniformity
  std::string input_path = "-";              // symmetrize
  std::vector<std::string> pmf_paths;        // verify-conditional
  bool default_catalog = true;               // verify-conditional
  std::size_t fuzz_sets = 25;                // verify-conditional
};

// -- rank uniformity -------------------------------------------------------

struct RankUniformityReport {
  std::size_t n = 0;
  std::uint64_t samples = 0;
  /// One entry per permutation, including empty cells.
  std::map<Perm, std::uint64_t> cell_counts;
  std::uint64_t excluded_ties = 0;
  double chi2 = 0.0;
  std::uint64_t df = 0;
  double p_value = 1.0;
  /// Every draw was tied; no test was possible.
  bool degenerate = false;
};

/// Requires 2 <= n <= 6 and samples >= 20 n!.
RankUniformityReport run_rank_uniformity(const ExperimentConfig& cfg);

// -- conditional-law verification -----------------------------------------

struct PmfFixture {
  std::string name;
  FinitePmf pmf;
  /// false for negative controls, which must exceed the tolerance.
  bool exchangeable;
};

/// iid Bernoulli(0.3) n=2,3,4; two-component Bernoulli mixtures n=2,3; urns
/// {1,1,2} and {1,2,3} n=2; 20 orbit-averaged random pmfs n=2,3 (seeded);
/// Dirac n=3; and the named negative control.
std::vector<PmfFixture> default_fixture_catalog(std::uint64_t seed);

/// Seeded random point sets over the coordinate values of p's support (plus
/// one value outside it), for the integral identity check.
std::vector<PointSet> fuzz_point_sets(const FinitePmf& p, std::size_t count, Rng& rng);

struct VerifyEntry {
  std::string fixture;
  std::string check;  // "conditional-law" or "event-integral"
  bool expected_exchangeable;
  DiscrepancyReport report;
  bool passed;
};

/// Two entries per fixture. Throws DomainError for an empty catalog.
std::vector<VerifyEntry> run_conditional_verify(const ExperimentConfig& cfg,
                                                const std::vector<PmfFixture>& fixtures);

/// Catalog selected by cfg: default fixtures (if enabled) plus pmf files.
std::vector<PmfFixture> resolve_fixtures(const ExperimentConfig& cfg);

// -- Rao-Blackwell ---------------------------------------------------------

RbComparison run_rao_blackwell(const ExperimentConfig& cfg);

/// Mean preservation and variance dominance, each at 3 standard errors.
bool rao_blackwell_consistent(const RbComparison& cmp);

// -- row-wise symmetrization ----------------------------------------------

struct SymmetrizeRecord {
  std::size_t row = 0;  // one-based line number in the input
  std::vector<double> order_statistics;
  std::optional<double> value;
  double std_error = 0.0;
  std::uint64_t draws = 0;
  bool exact = false;
  std::string error;
};

/// Rows of comma- or whitespace-separated reals; `#` starts a comment.
/// Malformed rows become error records; processing continues.
std::vector<SymmetrizeRecord> run_symmetrize(const ExperimentConfig& cfg, std::istream& input);

}  // namespace exsuff
