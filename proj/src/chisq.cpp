#include "exsuff/chisq.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "exsuff/error.hpp"

namespace exsuff {

namespace {

constexpr double kEpsilon = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;

// log(x^a e^-x / Gamma(a))
double log_prefactor(double a, double x) { return a * std::log(x) - x - std::lgamma(a); }

// Lower regularized P(a, x) by its power series; converges fast for x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int i = 1; i <= kGammaMaxIterations; ++i) {
    term *= x / (a + i);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEpsilon) return sum * std::exp(log_prefactor(a, x));
  }
  throw ConvergenceError("incomplete gamma series did not converge for a=" + std::to_string(a) +
                         " x=" + std::to_string(x));
}

// Upper regularized Q(a, x) by the Legendre continued fraction, modified Lentz.
double gamma_q_continued_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kGammaMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEpsilon) return std::exp(log_prefactor(a, x)) * h;
  }
  throw ConvergenceError("incomplete gamma continued fraction did not converge for a=" + std::to_string(a) +
                         " x=" + std::to_string(x));
}

}  // namespace

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0)) throw DomainError("incomplete gamma shape must be positive");
  if (!(x >= 0.0)) throw DomainError("incomplete gamma argument must be nonnegative");
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_continued_fraction(a, x);
}

double chi_square_sf(double x, std::uint64_t df) {
  if (df < 1) throw DomainError("chi-square degrees of freedom must be >= 1");
  if (!(x >= 0.0)) throw DomainError("chi-square statistic must be nonnegative");
  return regularized_gamma_q(0.5 * static_cast<double>(df), 0.5 * x);
}

}  // namespace exsuff
