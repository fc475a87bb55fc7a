#pragma once

namespace gpfstab {

/// Query for the one-parameter Mittag-Leffler function E_alpha(x).
///
/// Only the domain the stability criteria actually use is supported:
/// real order alpha in (0, 1] and a nonnegative real argument. On that
/// domain every series term is nonnegative, which is what makes the
/// truncation bound below valid.
struct MLQuery {
    double alpha = 1.0;     // series order, in (0, 1]
    double x = 0.0;         // argument, >= 0
    double rel_tol = 1e-12; // relative tolerance, in (0, 1e-3]
};

/// Euler Gamma function for x > 0.
///
/// Lanczos approximation (g = 7, 9 coefficients), reflection for x < 0.5.
/// Relative error is a few 1e-14 over the range the criteria use.
/// Throws std::domain_error for x <= 0 and std::overflow_error once the
/// result is no longer representable in double (x > ~171.62).
double gamma_fn(double x);

/// log(Gamma(x)) for x > 0. Used internally by the Mittag-Leffler series
/// so that large-index terms never overflow.
double log_gamma(double x);

/// E_alpha(x) = sum_k x^k / Gamma(alpha k + 1), summed directly with Kahan
/// compensation. Terms are generated as exp(k log x - log Gamma(alpha k + 1));
/// summation stops once the term ratio drops below 1 and the geometric tail
/// bound falls under rel_tol (term ratios are decreasing in k, so the tail
/// after term t_k is at most t_k * rho / (1 - rho)).
///
/// Returns +inf if the value exceeds the double range. Throws
/// std::runtime_error if 10000 terms do not reach the tolerance,
/// std::domain_error on invalid queries.
double mittag_leffler(const MLQuery& q);
double mittag_leffler(double alpha, double x, double rel_tol = 1e-12);

/// Term budget for the series; all criterion-scale arguments converge in
/// well under 200 terms.
inline constexpr int kMittagLefflerTermBudget = 10000;

} // namespace gpfstab
