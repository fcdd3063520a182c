#include "unitail/special_fn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace unitail {

namespace {
constexpr double kInvSqrt2Pi = 0.39894228040143267793994605993438;
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
constexpr double kSqrt3 = 1.7320508075688772935274463415059;

void require_finite(double x, const char* fn) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(fn) + ": non-finite argument");
  }
}
}  // namespace

double std_normal_density(double x) {
  require_finite(x, "std_normal_density");
  return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

double upper_tail(double x) {
  require_finite(x, "upper_tail");
  // erfc is evaluated directly on the signed argument; for x < 0 the result
  // approaches 2 with no cancellation, for x > 0 it carries the full relative
  // accuracy of the tail.
  return 0.5 * std::erfc(x * kInvSqrt2);
}

double scaled_two_sided_tail(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw std::domain_error("scaled_two_sided_tail: requires finite t >= 0");
  }
  double v = 2.0 * upper_tail(t * kSqrt3);
  return v > 1.0 ? 1.0 : v;
}

double log_upper_tail_asymptotic(double x) {
  if (!std::isfinite(x) || x < 10.0) {
    throw std::domain_error("log_upper_tail_asymptotic: requires x >= 10");
  }
  // Q(x) = phi(x)/x * (1 - 1/x^2 + 3/x^4 - 15/x^6 + 105/x^8 - ...)
  const double ix2 = 1.0 / (x * x);
  const double series = 1.0 + ix2 * (-1.0 + ix2 * (3.0 + ix2 * (-15.0 + ix2 * 105.0)));
  return -0.5 * x * x - std::log(x) + std::log(kInvSqrt2Pi) + std::log(series);
}

}  // namespace unitail
