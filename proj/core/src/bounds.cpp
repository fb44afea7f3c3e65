#include "koebe/bounds.hpp"

#include <cmath>
#include <numbers>

#include "koebe/errors.hpp"

namespace koebe {

namespace {

void require_radius(double r) {
  if (!(r > 0.0 && r < 1.0)) fail(ErrorCode::InvalidArgument, "radius must lie in (0,1)");
}

}  // namespace

Regime regime_of(double a) noexcept {
  if (a >= 1.0) return Regime::AtLeastOne;
  if (a <= -1.0) return Regime::AtMostMinusOne;
  return Regime::Between;
}

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::AtLeastOne: return "a>=1";
    case Regime::Between: return "-1<a<1";
    case Regime::AtMostMinusOne: return "a<=-1";
  }
  return "?";
}

KoebeEnvelope koebe_derivative_envelope(double a, Regime regime, double rho) {
  const double up = 1.0 + rho;
  const double dn = 1.0 - rho;
  switch (regime) {
    case Regime::AtLeastOne:
      return {std::pow(dn, a - 1.0) / std::pow(up, a + 1.0), std::pow(up, a - 1.0) / std::pow(dn, a + 1.0)};
    case Regime::Between:
      return {1.0 / std::pow(up, 2.0), 1.0 / std::pow(dn, 2.0)};
    case Regime::AtMostMinusOne:
      // (1+r)^(a-1)/(1-r)^(a+1) and its mirror, written with positive
      // exponents so a = -1 and a -> -a reproduce the other regimes bit for bit.
      return {std::pow(dn, -(a + 1.0)) / std::pow(up, 1.0 - a), std::pow(up, -(a + 1.0)) / std::pow(dn, 1.0 - a)};
  }
  return {0.0, 0.0};
}

BoundsInterval derivative_envelope(const Params& p, double r) { return derivative_envelope(p, regime_of(p.a), r); }

BoundsInterval derivative_envelope(const Params& p, Regime regime, double r) {
  p.validate();
  require_radius(r);
  const KoebeEnvelope e = koebe_derivative_envelope(p.a, regime, r);
  BoundsInterval out;
  out.lo = e.lower / (1.0 + p.lambda * r);
  out.hi = e.upper / (1.0 - p.lambda * r);
  out.regime = regime;
  return out;
}

BoundsInterval growth_bounds(const Params& p, double r) { return growth_bounds(p, regime_of(p.a), r); }

BoundsInterval growth_bounds(const Params& p, Regime regime, double r) {
  p.validate();
  require_radius(r);
  const double l = p.lambda;
  auto lower = [&](double rho) {
    return (1.0 - l * rho) / (1.0 + l * rho) * koebe_derivative_envelope(p.a, regime, rho).lower;
  };
  auto upper = [&](double rho) {
    return (1.0 + l * rho) / (1.0 - l * rho) * koebe_derivative_envelope(p.a, regime, rho).upper;
  };
  auto lo = integrate<double>(lower, 0.0, r, p.quad);
  auto hi = integrate<double>(upper, 0.0, r, p.quad);
  return {lo.value, hi.value, lo.err, hi.err, regime, lo.converged && hi.converged};
}

BoundsInterval area_bounds(const Params& p, double r) { return area_bounds(p, regime_of(p.a), r); }

BoundsInterval area_bounds(const Params& p, Regime regime, double r) {
  p.validate();
  require_radius(r);
  const double l = p.lambda;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  auto lower = [&](double rho) {
    const double e = koebe_derivative_envelope(p.a, regime, rho).lower / (1.0 + l * rho);
    return (rho - l * l * rho * rho * rho) * e * e;
  };
  auto upper = [&](double rho) {
    const double e = koebe_derivative_envelope(p.a, regime, rho).upper / (1.0 - l * rho);
    return (rho - l * l * rho * rho * rho) * e * e;
  };
  auto lo = integrate<double>(lower, 0.0, r, p.quad);
  auto hi = integrate<double>(upper, 0.0, r, p.quad);
  return {two_pi * lo.value, two_pi * hi.value, two_pi * lo.err, two_pi * hi.err, regime,
          lo.converged && hi.converged};
}

AreaValue area_empirical(const Params& p, double r) {
  p.validate();
  require_radius(r);
  const double l2 = p.lambda * p.lambda;
  auto density = [&](Complex xi) {
    const Complex hp = shear_derivatives(p, xi).hp;
    return (1.0 - l2 * std::norm(xi)) * std::norm(hp);
  };
  const AreaIntegral res = polar_area_integral(density, r, p.quad);
  return {res.value, res.err, res.converged};
}

}  // namespace koebe
