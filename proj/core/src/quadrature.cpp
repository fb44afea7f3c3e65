#include "koebe/quadrature.hpp"

#include <numbers>
#include <string>

namespace koebe {

void QuadSpec::validate() const {
  if (!(rel_tol >= 0.0) || !(abs_tol >= 0.0) || !(rel_tol > 0.0 || abs_tol > 0.0) || !std::isfinite(rel_tol) ||
      !std::isfinite(abs_tol)) {
    fail(ErrorCode::InvalidArgument, "quadrature tolerances must be non-negative and not both zero");
  }
  if (max_subdivisions <= 0) fail(ErrorCode::InvalidArgument, "max_subdivisions must be positive");
}

SegmentIntegral segment_integral(const ComplexFn& f, Complex z_end, const QuadSpec& spec) {
  return segment_integral(f, Complex(0.0, 0.0), z_end, spec);
}

SegmentIntegral segment_integral(const ComplexFn& f, Complex z_start, Complex z_end,
                                 const QuadSpec& spec) {
  const Complex delta = z_end - z_start;
  if (delta == Complex(0.0, 0.0)) return {Complex(0.0, 0.0), 0.0, true};
  auto g = [&](double t) { return f(z_start + t * delta); };
  // Tolerances apply to the integral itself, so rescale by |delta|.
  QuadSpec scaled = spec;
  scaled.abs_tol = spec.abs_tol / std::abs(delta);
  auto res = integrate<Complex>(g, 0.0, 1.0, scaled);
  return {res.value * delta, res.err * std::abs(delta), res.converged};
}

AreaIntegral polar_area_integral(const RealFn& f, double r, const QuadSpec& spec) {
  if (!(r > 0.0) || !(r < 1.0)) fail(ErrorCode::InvalidArgument, "polar_area_integral: r must lie in (0,1)");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double worst_inner_err = 0.0;
  bool inner_ok = true;
  auto ring = [&](double rho) {
    auto angular = [&](double theta) { return f(std::polar(rho, theta)); };
    auto inner = integrate<double>(angular, 0.0, two_pi, spec);
    worst_inner_err = std::max(worst_inner_err, inner.err);
    inner_ok = inner_ok && inner.converged;
    return rho * inner.value;
  };
  auto outer = integrate<double>(ring, 0.0, r, spec);
  // Inner errors integrate against rho d(rho) over [0, r].
  const double err = outer.err + worst_inner_err * 0.5 * r * r;
  return {outer.value, err, outer.converged && inner_ok};
}

}  // namespace koebe
