#pragma once

// Growth, derivative and area sandwiches for f_{a,lambda} on |z| = r.

#include <string_view>

#include "koebe/shear.hpp"

namespace koebe {

// Which of the three bound formulas applies. At a = +-1 adjacent formulas
// coincide; regime_of picks AtLeastOne / AtMostMinusOne there.
enum class Regime { AtLeastOne, Between, AtMostMinusOne };

Regime regime_of(double a) noexcept;
std::string_view to_string(Regime r) noexcept;

struct BoundsInterval {
  double lo = 0.0;
  double hi = 0.0;
  double lo_err = 0.0;
  double hi_err = 0.0;
  Regime regime = Regime::Between;
  bool converged = true;
};

// Closed-form envelope of the two derivative factors, without the
// (1 -+ lambda r) denominators:
//   upper(r) >= |k_a'(xi)| >= lower(r) on |xi| = r.
struct KoebeEnvelope {
  double lower;
  double upper;
};
KoebeEnvelope koebe_derivative_envelope(double a, Regime regime, double r);

// Bounds for |h'| on |xi| = r (no quadrature).
BoundsInterval derivative_envelope(const Params& p, double r);
BoundsInterval derivative_envelope(const Params& p, Regime regime, double r);

// Integrated bounds for |f(z)| on |z| = r.
BoundsInterval growth_bounds(const Params& p, double r);
BoundsInterval growth_bounds(const Params& p, Regime regime, double r);

// Bounds for the area of f(|z| < r).
BoundsInterval area_bounds(const Params& p, double r);
BoundsInterval area_bounds(const Params& p, Regime regime, double r);

struct AreaValue {
  double value = 0.0;
  double err = 0.0;
  bool converged = true;
};

// Area of f(|z| < r) as the disk integral of the Jacobian
// (1 - lambda^2 |xi|^2) |h'(xi)|^2.
AreaValue area_empirical(const Params& p, double r);

}  // namespace koebe
