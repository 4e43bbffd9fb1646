#pragma once

#include <cstdint>

namespace exsuff {

/// Maximum series / continued-fraction iterations before ConvergenceError.
inline constexpr int kGammaMaxIterations = 300;

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
/// Series for x < a + 1, Lentz continued fraction otherwise.
double regularized_gamma_q(double a, double x);

/// P(chi2_df > x). Throws DomainError for x < 0 or df < 1.
double chi_square_sf(double x, std::uint64_t df);

}  // namespace exsuff
