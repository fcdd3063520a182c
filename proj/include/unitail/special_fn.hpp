#pragma once

namespace unitail {

/// Density of the standard normal, phi(x) = exp(-x^2/2) / sqrt(2 pi).
/// Relative error <= 1e-14 for finite x. Throws std::domain_error on
/// non-finite input.
double std_normal_density(double x);

/// Upper tail Q(x) = P(G > x) of the standard normal. Computed through the
/// complementary error function (regime-split rational/continued-fraction
/// evaluation, no 1 - CDF cancellation), relative error <= 1e-13 on
/// |x| <= 40; underflows to 0 beyond roughly x = 38.5.
double upper_tail(double x);

/// P(|G| > t * sqrt(3)) = 2 Q(t sqrt(3)) for t >= 0; strictly decreasing on
/// t > 0, equals 1 at t = 0.
double scaled_two_sided_tail(double t);

/// log Q(x) from the asymptotic expansion Q(x) ~ phi(x)/x (1 - 1/x^2 + ...),
/// usable where Q itself underflows. Requires x >= 10; truncation error is
/// below 1e-9 there and below 1e-15 for x >= 30.
double log_upper_tail_asymptotic(double x);

}  // namespace unitail
