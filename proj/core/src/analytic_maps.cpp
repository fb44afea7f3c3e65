#include "koebe/analytic_maps.hpp"

#include <cmath>
#include <string>

#include "koebe/errors.hpp"

namespace koebe {

namespace {

// exp(w) - 1 without cancellation for small w.
Complex expm1(Complex w) {
  const double x = w.real();
  const double y = w.imag();
  const double s = std::sin(0.5 * y);
  const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
  const double im = std::exp(x) * std::sin(y);
  return {re, im};
}

// Principal Log((1+z)/(1-z)) = 2 artanh(z); both 1 +- z lie in the right
// half-plane so no branch cut is crossed inside the disk.
Complex cayley_log(Complex z) { return 2.0 * std::atanh(z); }

}  // namespace

Complex koebe_generalized(double a, Complex z, int order) {
  if (!std::isfinite(a)) fail(ErrorCode::InvalidArgument, "koebe_generalized: a must be finite");
  if (order < 0 || order > 3) fail(ErrorCode::InvalidArgument, "koebe_generalized: order must be 0..3");
  require_in_disk(z, "koebe_generalized");

  const Complex log_w = cayley_log(z);
  if (order == 0) {
    if (a == 0.0) return 0.5 * log_w;
    return expm1(a * log_w) / (2.0 * a);
  }
  const Complex one_minus_z2 = 1.0 - z * z;
  // k_a' = (1+z)^(a-1) (1-z)^(-a-1) = w^a / (1 - z^2)
  const Complex d1 = std::exp(a * log_w) / one_minus_z2;
  switch (order) {
    case 1: return d1;
    case 2: return 2.0 * (a + z) / one_minus_z2 * d1;
    default:
      return 2.0 * (3.0 * z * z + 6.0 * a * z + 2.0 * a * a + 1.0) / (one_minus_z2 * one_minus_z2) * d1;
  }
}

Complex lens_map(double R, Complex z) {
  if (!(R >= 0.0 && R <= 1.0)) fail(ErrorCode::InvalidArgument, "lens_map: R must lie in [0,1]");
  require_in_disk(z, "lens_map");
  // (w^R - 1)/(w^R + 1) = tanh(R log(w) / 2)
  return std::tanh(0.5 * R * cayley_log(z));
}

}  // namespace koebe
