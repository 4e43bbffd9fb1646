#include "exsuff/catalog.hpp"

#include <cmath>
#include <sstream>

#include "exsuff/error.hpp"

namespace exsuff {

namespace {

struct SpecParts {
  std::string name;
  std::string args;
  bool has_args;
};

SpecParts split_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, "", false};
  return {spec.substr(0, colon), spec.substr(colon + 1), true};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double parse_real(const std::string& token, const std::string& spec) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw ParseError("spec '" + spec + "': not a number: '" + token + "'");
  }
  if (used != token.size() || std::isnan(v)) throw ParseError("spec '" + spec + "': not a number: '" + token + "'");
  return v;
}

std::vector<double> parse_reals(const std::string& list, const std::string& spec) {
  std::vector<double> out;
  for (const auto& t : split(list, ',')) out.push_back(parse_real(t, spec));
  if (out.empty()) throw ParseError("spec '" + spec + "': empty parameter list");
  return out;
}

void require_args(const SpecParts& parts, bool wanted, const std::string& spec) {
  if (parts.has_args != wanted) {
    throw ParseError("spec '" + spec + "': " + (wanted ? "missing parameters" : "takes no parameters"));
  }
}

}  // namespace

Sampler parse_sampler(const std::string& spec, std::size_t n) {
  const SpecParts parts = split_spec(spec);
  try {
    if (parts.name == "uniform") {
      require_args(parts, false, spec);
      return sampler_iid("uniform", uniform01_marginal(), n);
    }
    if (parts.name == "normal") {
      require_args(parts, false, spec);
      return sampler_iid("normal", standard_normal_marginal(), n);
    }
    if (parts.name == "exponential") {
      require_args(parts, false, spec);
      return sampler_iid("exponential", exponential_marginal(1.0), n);
    }
    if (parts.name == "equicorr") {
      require_args(parts, true, spec);
      return sampler_equicorrelated_gaussian(n, parse_real(parts.args, spec));
    }
    if (parts.name == "urn") {
      require_args(parts, true, spec);
      return sampler_urn(parse_reals(parts.args, spec), n);
    }
    if (parts.name == "dirac") {
      require_args(parts, true, spec);
      return sampler_dirac_diagonal(parse_real(parts.args, spec), n);
    }
    if (parts.name == "mixture") {
      require_args(parts, true, spec);
      std::vector<std::pair<double, ScalarSampler>> components;
      for (const auto& item : split(parts.args, ',')) {
        const auto at = item.find('@');
        if (at == std::string::npos) throw ParseError("spec '" + spec + "': mixture items are WEIGHT@SCALE");
        components.emplace_back(parse_real(item.substr(0, at), spec),
                                exponential_marginal(parse_real(item.substr(at + 1), spec)));
      }
      return sampler_mixture_iid(std::move(components), n);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError("spec '" + spec + "': " + e.what());
  }
  throw ParseError("unknown sampler '" + parts.name + "'");
}

Estimand parse_estimand(const std::string& spec, std::size_t n) {
  const SpecParts parts = split_spec(spec);
  if (parts.name == "proj") {
    std::size_t k = 0;
    if (parts.has_args) {
      const double v = parse_real(parts.args, spec);
      if (v < 0 || v != std::floor(v)) throw ParseError("spec '" + spec + "': index must be a nonnegative integer");
      k = static_cast<std::size_t>(v);
    }
    if (k >= n) throw ParseError("spec '" + spec + "': coordinate index out of range for n=" + std::to_string(n));
    return estimands::projection(k);
  }
  if (parts.name == "sum") {
    require_args(parts, false, spec);
    return estimands::sum();
  }
  if (parts.name == "wsum") {
    require_args(parts, true, spec);
    auto w = parse_reals(parts.args, spec);
    if (w.size() != n) throw ParseError("spec '" + spec + "': needs exactly " + std::to_string(n) + " weights");
    return estimands::weighted_sum(std::move(w));
  }
  if (parts.name == "product") {
    require_args(parts, false, spec);
    return estimands::product();
  }
  if (parts.name == "max") {
    require_args(parts, false, spec);
    return estimands::maximum();
  }
  if (parts.name == "threshold") {
    require_args(parts, true, spec);
    return estimands::threshold(parse_real(parts.args, spec));
  }
  if (parts.name == "indicator") {
    require_args(parts, true, spec);
    std::vector<Point> pts;
    for (const auto& item : split(parts.args, ';')) {
      std::vector<double> c;
      for (const auto& t : split(item, '/')) c.push_back(parse_real(t, spec));
      if (c.size() != n) throw ParseError("spec '" + spec + "': indicator points need " + std::to_string(n) + " coordinates");
      pts.emplace_back(std::move(c));
    }
    return estimands::indicator(PointSet(std::move(pts)));
  }
  throw ParseError("unknown estimand '" + parts.name + "'");
}

std::vector<std::string> builtin_sampler_specs() {
  return {"uniform", "normal", "exponential", "equicorr:0.5", "urn:1,2,3,4,5", "dirac:2.5", "mixture:0.5@1,0.5@4"};
}

std::vector<Estimand> catalog_estimands(std::size_t n, const PointSet& b) {
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<double>(i + 1);
  return {estimands::projection(0), estimands::weighted_sum(std::move(w)), estimands::product(),
          estimands::maximum(),     estimands::threshold(0.5),             estimands::indicator(b)};
}

}  // namespace exsuff
