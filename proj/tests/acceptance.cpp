// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "exsuff/catalog.hpp"
#include "exsuff/chisq.hpp"
#include "exsuff/experiments.hpp"
#include "exsuff/oracle.hpp"
#include "exsuff/stats.hpp"
#include "exsuff/symmetrize.hpp"

using namespace exsuff;

namespace {

constexpr std::uint64_t kSeed = 20261019;

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_seconds;  // 0 = no runtime bound
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::vector<PmfFixture> exchangeable_catalog() {
  std::vector<PmfFixture> out;
  for (auto& f : default_fixture_catalog(kSeed)) {
    if (f.exchangeable) out.push_back(std::move(f));
  }
  return out;
}

Outcome conditional_law_exactness() {
  double worst = 0.0;
  std::string where;
  const auto fixtures = exchangeable_catalog();
  for (const auto& f : fixtures) {
    const DiscrepancyReport r = compare_conditional(f.pmf, kExactTolerance);
    if (r.max_abs_discrepancy >= worst) {
      worst = r.max_abs_discrepancy;
      where = f.name;
    }
  }
  return {worst <= 1e-12, std::to_string(fixtures.size()) + " fixtures, max discrepancy " + fmt(worst) + " (" + where + ")"};
}

Outcome distribution_independence() {
  const auto fixtures = exchangeable_catalog();
  std::size_t pairs = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const FinitePmf yi = order_statistics_pmf(fixtures[i].pmf);
    for (std::size_t j = i + 1; j < fixtures.size(); ++j) {
      if (fixtures[i].pmf.dimension() != fixtures[j].pmf.dimension()) continue;
      const FinitePmf yj = order_statistics_pmf(fixtures[j].pmf);
      for (const auto& [y_point, mass] : yi.atoms()) {
        if (yj.probability(y_point) == 0.0) continue;
        ++pairs;
        const SortedPoint y(y_point);
        const ConditionalLaw a = conditional_law_bruteforce(fixtures[i].pmf, y);
        const ConditionalLaw b = conditional_law_bruteforce(fixtures[j].pmf, y);
        const ConditionalLaw f = conditional_law_formula(y);
        std::set<Point> atoms;
        for (const auto* law : {&a, &b, &f}) {
          for (const auto& [x, w] : law->weights) atoms.insert(x);
        }
        for (const Point& x : atoms) {
          worst = std::max({worst, std::abs(a.weight(x) - b.weight(x)), std::abs(a.weight(x) - f.weight(x)),
                            std::abs(b.weight(x) - f.weight(x))});
        }
      }
    }
  }
  return {pairs > 0 && worst <= 1e-12, std::to_string(pairs) + " shared (pair, y) cases, max discrepancy " + fmt(worst)};
}

Outcome event_integral_identity() {
  double worst = 0.0;
  std::size_t cases = 0;
  Rng rng(derive_seed(kSeed, 3));
  for (const auto& f : exchangeable_catalog()) {
    if (f.pmf.dimension() > 4) continue;
    const auto events = fuzz_point_sets(f.pmf, 25, rng);
    for (std::size_t e = 0; e < events.size(); ++e) {
      const auto estimands = catalog_estimands(f.pmf.dimension(), events[(e + 1) % events.size()]);
      for (const Estimand& g : estimands) {
        worst = std::max(worst, verify_event_integral_identity(f.pmf, g, events[e]));
        ++cases;
      }
    }
  }
  const FinitePmf control = negative_control_pmf();
  const double control_gap =
      verify_event_integral_identity(control, estimands::projection(0), symmetric_closure(control.support()));
  const bool ok = worst <= 1e-12 && std::abs(control_gap - 0.1) <= 1e-12;
  return {ok, std::to_string(cases) + " cases, max " + fmt(worst) + "; negative control " + fmt(control_gap)};
}

Outcome negative_control_detection() {
  const FinitePmf control = negative_control_pmf();
  const DiscrepancyReport r = compare_conditional(control, kExactTolerance);
  const SortedPoint y{0, 1};
  const double truth = conditional_law_bruteforce(control, y).weight(Point{0, 1});
  const double formula = conditional_law_formula(y).weight(Point{0, 1});
  const bool ok = std::abs(r.max_abs_discrepancy - 0.1) <= 1e-12 && !r.within_tolerance &&
                  std::abs(truth - 0.6) <= 1e-12 && std::abs(formula - 0.5) <= 1e-12;
  return {ok, "max discrepancy " + fmt(r.max_abs_discrepancy) + " (truth " + fmt(truth) + " vs formula " + fmt(formula) + ")"};
}

Outcome rao_blackwell() {
  ExperimentConfig cfg;
  cfg.command = "rao-blackwell";
  cfg.seed = kSeed;
  cfg.n = 2;
  cfg.samples = 1000000;
  cfg.sampler_spec = "uniform";
  cfg.estimand_spec = "proj";
  const RbComparison r = run_rao_blackwell(cfg);
  const bool raw_ok = r.var_raw >= 0.0825 && r.var_raw <= 0.0842;
  const bool rb_ok = r.var_rb >= 0.0408 && r.var_rb <= 0.0425;

  std::size_t grid = 0;
  std::string violations;
  std::uint64_t index = 0;
  for (const std::string& spec : builtin_sampler_specs()) {
    const Sampler sampler = parse_sampler(spec, 3);
    for (const Estimand& g : catalog_estimands(3, PointSet{Point{1, 2, 3}, Point{2, 3, 1}})) {
      Rng rng(derive_seed(kSeed, 500 + index++));
      const RbComparison c = rao_blackwell_compare(sampler, g, 20000, rng);
      ++grid;
      if (!(c.var_rb <= c.var_raw)) violations += " " + spec + "/" + g.name();
    }
  }
  return {raw_ok && rb_ok && violations.empty(),
          "var_raw " + fmt(r.var_raw) + ", var_rb " + fmt(r.var_rb) + "; dominance on " + std::to_string(grid) +
              " pairs" + (violations.empty() ? "" : ", violated:" + violations)};
}

Outcome rank_uniformity() {
  ExperimentConfig cfg;
  cfg.command = "rank-uniformity";
  cfg.seed = kSeed;
  cfg.n = 3;
  cfg.samples = 60000;
  cfg.sampler_spec = "equicorr:0.5";
  const double p = run_rank_uniformity(cfg).p_value;

  cfg.sampler_spec = "uniform";
  cfg.samples = 30000;
  int rejections = 0;
  const int replicates = 200;
  for (int i = 0; i < replicates; ++i) {
    cfg.seed = derive_seed(kSeed, 1000 + static_cast<std::uint64_t>(i));
    if (run_rank_uniformity(cfg).p_value < 0.05) ++rejections;
  }
  const double rate = static_cast<double>(rejections) / replicates;
  return {p > 0.001 && rate >= 0.02 && rate <= 0.09,
          "equicorrelated p=" + fmt(p) + "; rejection rate " + fmt(rate) + " over " + std::to_string(replicates) + " seeds"};
}

Outcome enumerator_cross_check() {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto lex = enumerate_permutations_lex(n);
    const auto mc = enumerate_permutations_minimal_change(n);
    const std::set<Perm> a(lex.begin(), lex.end());
    const std::set<Perm> b(mc.begin(), mc.end());
    if (a.size() != factorial(n) || b.size() != factorial(n) || a != b) {
      return {false, "mismatch at n=" + std::to_string(n)};
    }
  }
  return {true, "sets equal with n! elements for n = 1..8"};
}

Outcome mc_unbiasedness() {
  const Point y{0, 1, 2};
  const Estimand g = estimands::projection(0);
  const double exact = symmetrize_exact(g, y);
  Rng rng(kSeed);
  RunningStats grand;
  for (int i = 0; i < 10000; ++i) grand.push(symmetrize_mc(g, y, 8, rng).value);
  const double gap = std::abs(grand.mean() - exact);
  return {gap <= 3 * grand.std_error_of_mean(),
          "grand mean " + fmt(grand.mean()) + " vs exact " + fmt(exact) + " (3 SE = " + fmt(3 * grand.std_error_of_mean()) + ")"};
}

Outcome chi_square_kernel() {
  double worst = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double x = 0.1 * i;
    worst = std::max(worst, std::abs(chi_square_sf(x, 2) - std::exp(-x / 2)));
  }
  const double df1 = chi_square_sf(3.8414588, 1);
  return {worst <= 1e-10 && std::abs(df1 - 0.05) <= 1e-6,
          "df=2 max error " + fmt(worst) + "; df=1 at 3.8414588 -> " + fmt(df1)};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome cli_determinism() {
  const std::string cli = EXSUFF_CLI_PATH;
  const std::string data = EXSUFF_TEST_DATA_DIR;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"verify-conditional", "verify-conditional --seed 11"},
      {"rank-uniformity", "rank-uniformity --seed 11 --n 3 --samples 6000 --sampler equicorr:0.5"},
      {"rao-blackwell", "rao-blackwell --seed 11 --n 3 --samples 20000 --sampler mixture:0.5@1,0.5@4 --estimand threshold:1"},
      {"symmetrize", "symmetrize --seed 11 --estimand proj --m 256 --input " + data + "/rows.csv"},
  };
  std::string failures;
  for (const auto& [name, args] : commands) {
    std::string runs[2];
    for (int k = 0; k < 2; ++k) {
      const std::string out = "determinism_" + name + "_" + std::to_string(k) + ".json";
      const int status = std::system((cli + " " + args + " --out " + out).c_str());
      if (status != 0) failures += " " + name + "(exit)";
      runs[k] = slurp(out);
    }
    if (runs[0].empty() || runs[0] != runs[1]) failures += " " + name;
  }
  return {failures.empty(), failures.empty() ? "4 commands byte-identical across reruns" : "differs:" + failures};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "conditional law exactness on the fixture catalog", 5.0, conditional_law_exactness},
      {2, "conditional law independent of the exchangeable law", 0.0, distribution_independence},
      {3, "event integral identity and its negative control", 0.0, event_integral_identity},
      {4, "negative control detection", 0.0, negative_control_detection},
      {5, "Rao-Blackwell variance reduction", 30.0, rao_blackwell},
      {6, "rank vector uniformity", 60.0, rank_uniformity},
      {7, "enumerator cross-check", 10.0, enumerator_cross_check},
      {8, "Monte Carlo symmetrization unbiased", 0.0, mc_unbiasedness},
      {9, "chi-square survival accuracy", 0.0, chi_square_kernel},
      {10, "CLI report determinism", 0.0, cli_determinism},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_seconds > 0 && seconds >= c.time_limit_seconds) {
      o.passed = false;
      o.detail += "; runtime " + fmt(seconds) + " s exceeds " + fmt(c.time_limit_seconds) + " s";
    }
    failed += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << ": " << o.detail << " ("
              << fmt(seconds) << " s)\n";
  }
  std::cout << (failed ? "acceptance FAILED: " + std::to_string(failed) + " criteria" : std::string("acceptance passed"))
            << '\n';
  return failed ? 1 : 0;
}
