#pragma once

// Textual sampler and estimand specifications used by the CLI.
//
// Samplers:  uniform | normal | exponential | equicorr:RHO | urn:V1,V2,...
//            | dirac:C | mixture:W1@S1,W2@S2,...  (iid exponential, scale S_j)
// Estimands: proj[:K] | sum | wsum:W1,...,Wn | product | max | threshold:T
//            | indicator:A1/A2/...;B1/B2/...

#include <cstddef>
#include <string>
#include <vector>

#include "exsuff/dist.hpp"
#include "exsuff/symmetrize.hpp"

namespace exsuff {

/// Throws ParseError for unknown names or malformed parameters.
Sampler parse_sampler(const std::string& spec, std::size_t n);
Estimand parse_estimand(const std::string& spec, std::size_t n);

/// Sampler specs covering every built-in family.
std::vector<std::string> builtin_sampler_specs();

/// The six catalog estimands for dimension n: projection x_0, weighted sum
/// with weights 1..n, product, maximum, threshold 1{x_0 <= 0.5} and the
/// indicator of b.
std::vector<Estimand> catalog_estimands(std::size_t n, const PointSet& b);

}  // namespace exsuff
