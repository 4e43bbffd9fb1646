#include <doctest.h>

#include <cmath>
#include <sstream>

#include "exsuff/catalog.hpp"
#include "exsuff/error.hpp"
#include "exsuff/experiments.hpp"
#include "exsuff/report.hpp"

using namespace exsuff;

namespace {

ExperimentConfig rank_config(std::string sampler, std::size_t n, std::uint64_t samples, std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.command = "rank-uniformity";
  cfg.sampler_spec = std::move(sampler);
  cfg.n = n;
  cfg.samples = samples;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("spec parsing") {
  CHECK(parse_sampler("urn:1,2,3", 2).dimension == 2);
  CHECK(parse_sampler("mixture:0.5@1,0.5@4", 3).name == "mixture");
  CHECK_THROWS_AS(parse_sampler("bogus", 2), ParseError);
  CHECK_THROWS_AS(parse_sampler("equicorr", 2), ParseError);
  CHECK_THROWS_AS(parse_sampler("equicorr:2", 2), ParseError);
  CHECK_THROWS_AS(parse_sampler("uniform:3", 2), ParseError);
  CHECK_THROWS_AS(parse_sampler("urn:1,x", 2), ParseError);
  CHECK_THROWS_AS(parse_sampler("urn:1", 2), ParseError);
  CHECK_THROWS_AS(parse_sampler("mixture:1", 2), ParseError);

  CHECK(parse_estimand("proj", 3)(Point{4, 5, 6}) == 4);
  CHECK(parse_estimand("proj:2", 3)(Point{4, 5, 6}) == 6);
  CHECK(parse_estimand("wsum:1,0,-1", 3)(Point{4, 5, 6}) == -2);
  CHECK(parse_estimand("indicator:1/2;2/1", 2)(Point{2, 1}) == 1);
  CHECK(parse_estimand("threshold:0.5", 2)(Point{0.5, 9}) == 1);
  CHECK_THROWS_AS(parse_estimand("proj:3", 3), ParseError);
  CHECK_THROWS_AS(parse_estimand("proj:1.5", 3), ParseError);
  CHECK_THROWS_AS(parse_estimand("wsum:1,2", 3), ParseError);
  CHECK_THROWS_AS(parse_estimand("indicator:1/2/3", 2), ParseError);
  CHECK_THROWS_AS(parse_estimand("median", 3), ParseError);
}

TEST_CASE("rank uniformity: dirac draws are all ties and the run is degenerate") {
  const auto r = run_rank_uniformity(rank_config("dirac:1.5", 3, 200, 1));
  CHECK(r.degenerate);
  CHECK(r.excluded_ties == 200);
  CHECK(r.df == 5);
  CHECK(r.cell_counts.size() == 6);
}

TEST_CASE("rank uniformity: equicorrelated gaussian") {
  const auto r = run_rank_uniformity(rank_config("equicorr:0.5", 3, 60000, 20261019));
  CHECK_FALSE(r.degenerate);
  CHECK(r.excluded_ties == 0);
  CHECK(r.df == 5);
  CHECK(r.p_value > 0.001);
  // Regression anchors for this seed.
  CHECK(r.chi2 == doctest::Approx(3.7954000000000003).epsilon(1e-12));
  CHECK(r.p_value == doctest::Approx(0.5792331943679865).epsilon(1e-9));
}

TEST_CASE("rank uniformity: iid uniform pairs split evenly") {
  const auto r = run_rank_uniformity(rank_config("uniform", 2, 40000, 99));
  std::uint64_t total = r.excluded_ties;
  for (const auto& [perm, count] : r.cell_counts) {
    CHECK(std::abs(static_cast<double>(count) - 20000.0) <= 3 * std::sqrt(10000.0));
    total += count;
  }
  CHECK(total == 40000);
}

TEST_CASE("rank uniformity preconditions") {
  CHECK_THROWS_AS(run_rank_uniformity(rank_config("uniform", 7, 1000000, 1)), BoundsError);
  CHECK_THROWS_AS(run_rank_uniformity(rank_config("uniform", 1, 1000, 1)), BoundsError);
  CHECK_THROWS_AS(run_rank_uniformity(rank_config("uniform", 3, 119, 1)), DomainError);
  CHECK_NOTHROW(run_rank_uniformity(rank_config("uniform", 3, 120, 1)));
}

TEST_CASE("conditional verification over the default catalog") {
  ExperimentConfig cfg;
  cfg.command = "verify-conditional";
  cfg.seed = 5;
  const auto fixtures = default_fixture_catalog(cfg.seed);
  CHECK(fixtures.size() == 3 + 2 + 2 + 20 + 1 + 1);
  const auto entries = run_conditional_verify(cfg, fixtures);
  CHECK(entries.size() == 2 * fixtures.size());
  for (const auto& e : entries) {
    CAPTURE(e.fixture);
    CAPTURE(e.check);
    CHECK(e.passed);
    if (e.expected_exchangeable) {
      CHECK(e.report.max_abs_discrepancy <= 1e-12);
    } else {
      CHECK(e.fixture == "negative-control");
      CHECK(std::abs(e.report.max_abs_discrepancy - 0.1) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(run_conditional_verify(cfg, {}), DomainError);
}

TEST_CASE("conditional verification of pmf files") {
  ExperimentConfig cfg;
  cfg.command = "verify-conditional";
  cfg.default_catalog = false;
  cfg.pmf_paths = {EXSUFF_TEST_DATA_DIR "/urn_112.pmf", EXSUFF_TEST_DATA_DIR "/negative_control.pmf"};
  const auto fixtures = resolve_fixtures(cfg);
  REQUIRE(fixtures.size() == 2);
  CHECK(fixtures[0].exchangeable);
  CHECK_FALSE(fixtures[1].exchangeable);
  for (const auto& e : run_conditional_verify(cfg, fixtures)) CHECK(e.passed);

  cfg.pmf_paths = {EXSUFF_TEST_DATA_DIR "/rows.csv"};
  CHECK_THROWS_AS(resolve_fixtures(cfg), ParseError);
}

TEST_CASE("rao-blackwell runs") {
  ExperimentConfig cfg;
  cfg.command = "rao-blackwell";
  cfg.seed = 8;
  cfg.n = 2;
  cfg.samples = 1000000;
  cfg.sampler_spec = "uniform";
  cfg.estimand_spec = "proj";
  const RbComparison r = run_rao_blackwell(cfg);
  REQUIRE(r.variance_ratio());
  CHECK(*r.variance_ratio() >= 0.45);
  CHECK(*r.variance_ratio() <= 0.55);
  CHECK(rao_blackwell_consistent(r));

  cfg.samples = 20000;
  cfg.estimand_spec = "sum";
  CHECK(*run_rao_blackwell(cfg).variance_ratio() == 1.0);

  cfg.sampler_spec = "dirac:3";
  const RbComparison d = run_rao_blackwell(cfg);
  CHECK_FALSE(d.variance_ratio());
  CHECK(report_to_json(cfg, d)["result"]["variance_ratio"].is_null());
  CHECK(report_to_csv(d).find(",NA\n") != std::string::npos);

  cfg.estimand_spec = "nope";
  CHECK_THROWS_AS(run_rao_blackwell(cfg), ParseError);
}

TEST_CASE("row-wise symmetrization") {
  ExperimentConfig cfg;
  cfg.command = "symmetrize";
  cfg.estimand_spec = "sum";
  std::istringstream rows("# header comment\n1,2,5\n\n4 4 1  # trailing comment\n");
  const auto sums = run_symmetrize(cfg, rows);
  REQUIRE(sums.size() == 2);
  CHECK(sums[0].row == 2);
  CHECK(*sums[0].value == 8.0);
  CHECK(sums[0].exact);
  CHECK(sums[0].draws == 6);
  CHECK(sums[0].order_statistics == std::vector<double>{1, 2, 5});
  CHECK(*sums[1].value == 9.0);

  cfg.estimand_spec = "proj";
  std::istringstream proj("1,2,3\n");
  CHECK(*run_symmetrize(cfg, proj)[0].value == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("row-wise symmetrization reports malformed rows and continues") {
  ExperimentConfig cfg;
  cfg.command = "symmetrize";
  cfg.estimand_spec = "proj";
  std::istringstream in("1,2,3\n1,x,3\n1,2\n3,2,1\n");
  const auto records = run_symmetrize(cfg, in);
  REQUIRE(records.size() == 4);
  CHECK(records[0].error.empty());
  CHECK(records[1].row == 2);
  CHECK(records[1].error.find("'x'") != std::string::npos);
  CHECK_FALSE(records[1].value);
  CHECK(records[2].error.find("expected 3") != std::string::npos);
  CHECK(records[3].error.empty());
  const Json j = report_to_json(cfg, records);
  CHECK(j["result"]["errors"] == 2);

  cfg.estimand_spec = "proj:9";
  std::istringstream bad_spec("1,2,3\n");
  CHECK_THROWS_AS(run_symmetrize(cfg, bad_spec), ParseError);
}

TEST_CASE("row-wise symmetrization falls back to Monte Carlo above the cap") {
  ExperimentConfig cfg;
  cfg.command = "symmetrize";
  cfg.estimand_spec = "proj";
  cfg.mc_draws = 4096;
  std::istringstream in("0 1 2 3 4 5 6 7 8 9 10 11\n");
  const auto r = run_symmetrize(cfg, in);
  REQUIRE(r.size() == 1);
  CHECK_FALSE(r[0].exact);
  CHECK(r[0].draws == 4096);
  CHECK(r[0].std_error > 0.0);
  CHECK(std::abs(*r[0].value - 5.5) <= 4 * r[0].std_error);
}

TEST_CASE("reports are deterministic and echo their configuration") {
  ExperimentConfig cfg = rank_config("normal", 3, 6000, 77);
  const std::string a = dump(report_to_json(cfg, run_rank_uniformity(cfg)));
  const std::string b = dump(report_to_json(cfg, run_rank_uniformity(cfg)));
  CHECK(a == b);
  const Json j = Json::parse(a);
  CHECK(j["tool"] == "exsuff");
  CHECK(j["version"] == kToolVersion);
  CHECK(j["config"]["seed"] == 77);
  CHECK(j["config"]["sampler"] == "normal");
  CHECK(j["result"]["cell_counts"].size() == 6);

  cfg.seed = 78;
  CHECK(dump(report_to_json(cfg, run_rank_uniformity(cfg))) != a);
}

TEST_CASE("csv exports") {
  const auto rank = run_rank_uniformity(rank_config("uniform", 2, 100, 3));
  const std::string csv = report_to_csv(rank);
  CHECK(csv.find("perm,count\n0 1,") != std::string::npos);

  ExperimentConfig cfg;
  cfg.seed = 1;
  const auto entries = run_conditional_verify(cfg, {PmfFixture{"neg", negative_control_pmf(), false}});
  const std::string v = report_to_csv(entries);
  CHECK(v.rfind("fixture,check,expectation", 0) == 0);
  CHECK(v.find("\"neg\",conditional-law,expected-fail") != std::string::npos);
}
