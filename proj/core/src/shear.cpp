#include "koebe/shear.hpp"

#include <cmath>
#include <string>

#include "koebe/errors.hpp"

namespace koebe {

namespace {

struct HgPair {
  Complex h;
  Complex g;

  friend HgPair operator+(const HgPair& x, const HgPair& y) { return {x.h + y.h, x.g + y.g}; }
  friend HgPair operator*(double s, const HgPair& x) { return {s * x.h, s * x.g}; }
  friend HgPair operator-(const HgPair& x, const HgPair& y) { return {x.h - y.h, x.g - y.g}; }
};

// Error aggregates h and g by summation.
double quad_norm(const HgPair& v) { return std::abs(v.h) + std::abs(v.g); }

template <class Deriv>
QuadResult<HgPair> integrate_leg(const Deriv& deriv, Complex from, Complex to, const QuadSpec& spec) {
  const Complex delta = to - from;
  if (delta == Complex(0.0, 0.0)) return {};
  auto integrand = [&](double t) {
    const ShearDerivatives d = deriv(from + t * delta);
    return HgPair{d.hp * delta, d.gp * delta};
  };
  return integrate<HgPair>(integrand, 0.0, 1.0, spec);
}

}  // namespace

void Params::validate() const {
  if (!std::isfinite(a)) fail(ErrorCode::InvalidArgument, "a must be finite");
  if (!(lambda >= 0.0 && lambda < 1.0)) fail(ErrorCode::InvalidArgument, "lambda must lie in [0,1)");
  quad.validate();
}

Params make_params(double a, double lambda, QuadSpec quad) {
  Params p{a, lambda, quad};
  p.validate();
  return p;
}

ShearDerivatives shear_derivatives(const Params& p, Complex z) {
  require_in_disk(z, "shear_derivatives");
  const Complex hp = koebe_d1(p.a, z) / (1.0 - p.lambda * z);
  return {hp, p.lambda * z * hp};
}

HarmonicValue eval_f(const Params& p, Complex z) {
  const Complex path[] = {z};
  return eval_f_along(p, path);
}

HarmonicValue eval_f_along(const Params& p, std::span<const Complex> path) {
  p.validate();
  Complex from(0.0, 0.0);
  HgPair total{};
  double err = 0.0;
  bool converged = true;
  auto deriv = [&](Complex xi) { return shear_derivatives(p, xi); };
  for (Complex to : path) {
    require_in_disk(to, "eval_f");
    auto leg = integrate_leg(deriv, from, to, p.quad);
    total = total + leg.value;
    err += leg.err;
    converged = converged && leg.converged;
    from = to;
  }
  return HarmonicValue::from_parts(total.h, total.g, err, converged);
}

TaylorPair<double> hg_series(const Params& p, std::size_t order) {
  p.validate();
  return hg_series<double>(p.a, p.lambda, order);
}

HarmonicValue eval_series(const TaylorPair<double>& pair, Complex z) {
  return HarmonicValue::from_parts(pair.a_coeffs.evaluate(z), pair.b_coeffs.evaluate(z));
}

HarmonicValue harmonic_koebe_eval(Complex z) {
  require_in_disk(z, "harmonic_koebe_eval");
  const Complex z2 = z * z;
  const Complex z3 = z2 * z;
  const Complex den = (1.0 - z) * (1.0 - z) * (1.0 - z);
  const Complex big_h = (z - 0.5 * z2 + z3 / 6.0) / den;
  const Complex big_g = (0.5 * z2 + z3 / 6.0) / den;
  return HarmonicValue::from_parts(big_h, big_g);
}

HarmonicValue f_lambda_explicit(double lambda, Complex z) {
  if (!(lambda >= 0.0 && lambda < 1.0)) fail(ErrorCode::InvalidArgument, "f_lambda_explicit: lambda must lie in [0,1)");
  require_in_disk(z, "f_lambda_explicit");
  const double l = lambda;
  const double cube = (l - 1.0) * (l - 1.0) * (l - 1.0);
  const Complex one_minus_z = 1.0 - z;
  const Complex sq = one_minus_z * one_minus_z;
  // Principal Log((1-z)/(1-lambda z)); both factors lie in the right half-plane.
  const Complex log_ratio = std::log(one_minus_z) - std::log(1.0 - l * z);
  const Complex h = ((l - 1.0) * (1.0 - 3.0 * l + 2.0 * l * z) * z / sq + l * (l + 1.0) * log_ratio) / cube;
  const Complex g = l * ((1.0 - l) * (1.0 + l - 2.0 * z) * z / sq + (l + 1.0) * log_ratio) / cube;
  return HarmonicValue::from_parts(h, g);
}

double jacobian(const Params& p, Complex z) {
  const ShearDerivatives d = shear_derivatives(p, z);
  return (1.0 - p.lambda * p.lambda * std::norm(z)) * std::norm(d.hp);
}

HarmonicValue general_shear(const std::function<Complex(Complex)>& phi_prime,
                            const std::function<Complex(Complex)>& omega, Complex nu, Complex z,
                            const QuadSpec& quad) {
  if (std::abs(std::abs(nu) - 1.0) > 1e-12) fail(ErrorCode::InvalidArgument, "general_shear: |nu| must be 1");
  require_in_disk(z, "general_shear");
  auto deriv = [&](Complex xi) {
    const Complex w = omega(xi);
    if (!(std::abs(w) < 1.0)) {
      fail(ErrorCode::DilatationOutOfRange, "|omega(" + format_complex(xi) + ")| >= 1");
    }
    const Complex hp = phi_prime(xi) / (1.0 - nu * w);
    return ShearDerivatives{hp, w * hp};
  };
  deriv(z);
  auto leg = integrate_leg(deriv, Complex(0.0, 0.0), z, quad);
  return HarmonicValue::from_parts(leg.value.h, leg.value.g, leg.err, leg.converged);
}

}  // namespace koebe
