#include "exsuff/experiments.hpp"

#include <algorithm>
#include <istream>
#include <cmath>
#include <set>
#include <sstream>
#include <variant>

#include "exsuff/catalog.hpp"
#include "exsuff/chisq.hpp"
#include "exsuff/error.hpp"

namespace exsuff {

RankUniformityReport run_rank_uniformity(const ExperimentConfig& cfg) {
  if (cfg.n < 2 || cfg.n > 6) {
    throw BoundsError("rank uniformity needs 2 <= n <= 6 (got " + std::to_string(cfg.n) + ")");
  }
  const std::uint64_t cells = factorial(cfg.n);
  if (cfg.samples < 20 * cells) {
    throw DomainError("undersized sample budget: rank uniformity with n=" + std::to_string(cfg.n) + " needs at least " +
                      std::to_string(20 * cells) + " samples");
  }
  const Sampler sampler = parse_sampler(cfg.sampler_spec, cfg.n);
  Rng rng(cfg.seed);

  RankUniformityReport report;
  report.n = cfg.n;
  report.samples = cfg.samples;
  for (Perm& p : enumerate_permutations_lex(cfg.n)) report.cell_counts.emplace(std::move(p), 0);
  for (std::uint64_t i = 0; i < cfg.samples; ++i) {
    const RankVector rv = rank_vector(sampler(rng));
    if (rv.tie_flag) {
      ++report.excluded_ties;
    } else {
      ++report.cell_counts.at(rv.perm);
    }
  }
  report.df = cells - 1;
  const std::uint64_t kept = cfg.samples - report.excluded_ties;
  if (kept == 0) {
    report.degenerate = true;
    return report;
  }
  const double expected = static_cast<double>(kept) / static_cast<double>(cells);
  double chi2 = 0.0;
  for (const auto& [perm, count] : report.cell_counts) {
    const double d = static_cast<double>(count) - expected;
    chi2 += d * d / expected;
  }
  report.chi2 = chi2;
  report.p_value = chi_square_sf(chi2, report.df);
  return report;
}

namespace {

// Random pmf on the grid {0,1,2}^n with 1..6 atoms and integer weights.
FinitePmf random_grid_pmf(std::size_t n, Rng& rng) {
  const std::size_t atoms = 1 + static_cast<std::size_t>(rng.below(6));
  std::map<Point, double> raw;
  while (raw.size() < atoms) {
    std::vector<double> c(n);
    for (double& v : c) v = static_cast<double>(rng.below(3));
    raw.emplace(Point(std::move(c)), static_cast<double>(1 + rng.below(8)));
  }
  double total = 0.0;
  for (const auto& [x, w] : raw) total += w;
  for (auto& [x, w] : raw) w /= total;
  return FinitePmf(n, std::move(raw));
}

}  // namespace

std::vector<PmfFixture> default_fixture_catalog(std::uint64_t seed) {
  const Marginal bernoulli03 = {{0.0, 0.7}, {1.0, 0.3}};
  const std::vector<std::pair<double, Marginal>> bernoulli_mix = {{0.5, {{0.0, 0.9}, {1.0, 0.1}}},
                                                                  {0.5, {{0.0, 0.1}, {1.0, 0.9}}}};
  std::vector<PmfFixture> out;
  for (std::size_t n : {2, 3, 4}) {
    out.push_back({"iid-bernoulli-0.3-n" + std::to_string(n), make_iid_pmf(bernoulli03, n), true});
  }
  for (std::size_t n : {2, 3}) {
    out.push_back({"mixture-bernoulli-n" + std::to_string(n), make_mixture_pmf(bernoulli_mix, n), true});
  }
  out.push_back({"urn-1-1-2-n2", make_urn_pmf({1.0, 1.0, 2.0}, 2), true});
  out.push_back({"urn-1-2-3-n2", make_urn_pmf({1.0, 2.0, 3.0}, 2), true});
  for (std::uint64_t i = 0; i < 20; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
    Rng rng(derive_seed(seed, 1000 + i));
    out.push_back({"orbit-average-n" + std::to_string(n) + "-" + std::to_string(i),
                   symmetrize_pmf(random_grid_pmf(n, rng)), true});
  }
  out.push_back({"dirac-n3", make_iid_pmf({{1.5, 1.0}}, 3), true});
  out.push_back({"negative-control", negative_control_pmf(), false});
  return out;
}

std::vector<PointSet> fuzz_point_sets(const FinitePmf& p, std::size_t count, Rng& rng) {
  std::set<double> value_set;
  for (const auto& [x, w] : p.atoms()) value_set.insert(x.coords().begin(), x.coords().end());
  value_set.insert(*value_set.rbegin() + 1.0);
  const std::vector<double> values(value_set.begin(), value_set.end());

  std::vector<PointSet> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t size = 1 + static_cast<std::size_t>(rng.below(6));
    std::vector<Point> pts;
    for (std::size_t k = 0; k < size; ++k) {
      std::vector<double> c(p.dimension());
      for (double& v : c) v = values[rng.below(values.size())];
      // Half the points land in the cone so that b meets it often.
      if (rng.below(2) == 0) std::sort(c.begin(), c.end());
      pts.emplace_back(std::move(c));
    }
    out.emplace_back(std::move(pts));
  }
  return out;
}

std::vector<VerifyEntry> run_conditional_verify(const ExperimentConfig& cfg, const std::vector<PmfFixture>& fixtures) {
  if (fixtures.empty()) throw DomainError("empty fixture catalog: nothing to verify");
  std::vector<VerifyEntry> out;
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const PmfFixture& f = fixtures[i];
    auto judge = [&](const DiscrepancyReport& r) {
      return f.exchangeable ? r.max_abs_discrepancy <= kExactTolerance : r.max_abs_discrepancy > kExactTolerance;
    };

    DiscrepancyReport law = compare_conditional(f.pmf, kExactTolerance);
    out.push_back({f.name, "conditional-law", f.exchangeable, law, judge(law)});

    Rng rng(derive_seed(cfg.seed, i));
    std::vector<PointSet> events = fuzz_point_sets(f.pmf, cfg.fuzz_sets, rng);
    events.push_back(symmetric_closure(f.pmf.support()));
    DiscrepancyReport integral;
    bool have_worst = false;
    for (std::size_t e = 0; e < events.size(); ++e) {
      const PointSet indicator_set = events[(e + 1) % events.size()];
      for (const Estimand& g : catalog_estimands(f.pmf.dimension(), indicator_set)) {
        const double d = verify_event_integral_identity(f.pmf, g, events[e]);
        ++integral.cases_checked;
        if (!have_worst || d > integral.max_abs_discrepancy) {
          have_worst = true;
          integral.max_abs_discrepancy = d;
          integral.worst_case = "estimand=" + g.name() + " event=" + std::to_string(e) +
                                (e + 1 == events.size() ? " (symmetric support)" : "");
        }
      }
    }
    integral.within_tolerance = integral.max_abs_discrepancy <= kExactTolerance;
    out.push_back({f.name, "event-integral", f.exchangeable, integral, judge(integral)});
  }
  return out;
}

std::vector<PmfFixture> resolve_fixtures(const ExperimentConfig& cfg) {
  std::vector<PmfFixture> fixtures;
  if (cfg.default_catalog) fixtures = default_fixture_catalog(cfg.seed);
  for (const std::string& path : cfg.pmf_paths) {
    FinitePmf pmf = load_pmf(path);
    const bool exchangeable = is_exchangeable(pmf, kLoadMassTolerance);
    fixtures.push_back({path, std::move(pmf), exchangeable});
  }
  return fixtures;
}

RbComparison run_rao_blackwell(const ExperimentConfig& cfg) {
  const Sampler sampler = parse_sampler(cfg.sampler_spec, cfg.n);
  const Estimand g = parse_estimand(cfg.estimand_spec, cfg.n);
  Rng rng(cfg.seed);
  return rao_blackwell_compare(sampler, g, cfg.samples, rng);
}

bool rao_blackwell_consistent(const RbComparison& cmp) {
  const bool mean_ok = std::abs(cmp.mean_rb - cmp.mean_raw) <= 3.0 * cmp.se_mean_raw + 3.0 * cmp.se_mean_rb;
  const bool variance_ok = cmp.var_rb <= cmp.var_raw + 3.0 * cmp.se_var_raw;
  return mean_ok && variance_ok;
}

namespace {

// Returns the parsed coordinates, or an error message.
std::variant<std::vector<double>, std::string> parse_row(std::string line) {
  std::replace(line.begin(), line.end(), ',', ' ');
  std::istringstream is(line);
  std::vector<double> out;
  std::string token;
  while (is >> token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      return "not a number: '" + token + "'";
    }
    if (used != token.size() || std::isnan(v)) return "not a number: '" + token + "'";
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<SymmetrizeRecord> run_symmetrize(const ExperimentConfig& cfg, std::istream& input) {
  std::vector<SymmetrizeRecord> records;
  std::optional<Estimand> g;
  std::size_t dimension = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;

    SymmetrizeRecord rec;
    rec.row = line_no;
    auto parsed = parse_row(line);
    if (auto* msg = std::get_if<std::string>(&parsed)) {
      rec.error = *msg;
      records.push_back(std::move(rec));
      continue;
    }
    auto& coords = std::get<std::vector<double>>(parsed);
    if (dimension == 0) {
      dimension = coords.size();
      g = parse_estimand(cfg.estimand_spec, dimension);
    } else if (coords.size() != dimension) {
      rec.error = "row has " + std::to_string(coords.size()) + " values; expected " + std::to_string(dimension);
      records.push_back(std::move(rec));
      continue;
    }
    try {
      const SortedPoint y = order_statistics(Point(std::move(coords)));
      rec.order_statistics.assign(y.coords().begin(), y.coords().end());
      if (dimension <= kEnumerationCap) {
        rec.value = symmetrize_exact(*g, y.point());
        rec.exact = true;
        rec.draws = factorial(dimension);
      } else {
        Rng rng(derive_seed(cfg.seed, line_no));
        const McEstimate est = symmetrize_mc(*g, y.point(), cfg.mc_draws, rng);
        rec.value = est.value;
        rec.std_error = est.std_error;
        rec.draws = est.draws;
      }
    } catch (const Error& e) {
      rec.value.reset();
      rec.error = e.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace exsuff
