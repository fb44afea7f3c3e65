#pragma once

// The family f = h + conj(g) sheared from
//     h - g = k_a,     g'/h' = lambda z     (0 <= lambda < 1),
// normalized by h(0) = g(0) = 0.

#include <cstddef>
#include <functional>
#include <span>
#include <string>

#include "koebe/analytic_maps.hpp"
#include "koebe/complex.hpp"
#include "koebe/quadrature.hpp"
#include "koebe/rational.hpp"
#include "koebe/series.hpp"

namespace koebe {

struct Params {
  double a = 2.0;
  double lambda = 0.0;
  QuadSpec quad{};

  // Throws InvalidArgument unless a is finite and 0 <= lambda < 1.
  void validate() const;
};

Params make_params(double a, double lambda, QuadSpec quad = {});

struct HarmonicValue {
  Complex h;
  Complex g;
  Complex f;  // h + conj(g)
  double err = 0.0;
  bool converged = true;

  static HarmonicValue from_parts(Complex h, Complex g, double err = 0.0, bool converged = true) {
    return {h, g, h + std::conj(g), err, converged};
  }
};

template <class T>
struct TaylorPair {
  Series<T> a_coeffs;  // a_0 = 0, a_1 = 1
  Series<T> b_coeffs;  // b_0 = b_1 = 0
};

struct ShearDerivatives {
  Complex hp;
  Complex gp;
};

// h' = k_a'/(1 - lambda z), g' = lambda z h'.
ShearDerivatives shear_derivatives(const Params& p, Complex z);

inline Complex dilatation(const Params& p, Complex z) { return p.lambda * z; }

// h, g by adaptive quadrature of h', g' along the radial segment [0, z].
HarmonicValue eval_f(const Params& p, Complex z);

// Same integrals along the polyline 0 -> path[0] -> path[1] -> ...; the end
// point is path.back().
HarmonicValue eval_f_along(const Params& p, std::span<const Complex> path);

// Taylor coefficients of h and g to order N via
//   d_n = c_n + lambda d_{n-1} (h' = sum d_n z^n, c = ka_prime_series),
//   a_n = d_{n-1}/n,  (n+1) b_{n+1} = lambda n a_n.
// lambda = 1 is accepted here as the formal harmonic-Koebe limit.
template <class T>
TaylorPair<T> hg_series(const T& a, const T& lambda, std::size_t order) {
  if (order < 1) fail(ErrorCode::InvalidArgument, "hg_series: order must be >= 1");
  if (lambda < T(0) || lambda > T(1)) fail(ErrorCode::InvalidArgument, "hg_series: lambda must lie in [0,1]");
  const Series<T> c = ka_prime_series(a, order);
  Series<T> an(order);
  Series<T> bn(order);
  T d = c[0];
  an[1] = d;
  for (std::size_t n = 1; n < order; ++n) {
    d = c[n] + lambda * d;
    an[n + 1] = d / T(static_cast<long>(n + 1));
  }
  for (std::size_t n = 1; n < order; ++n) {
    bn[n + 1] = lambda * T(static_cast<long>(n)) * an[n] / T(static_cast<long>(n + 1));
  }
  return {std::move(an), std::move(bn)};
}

TaylorPair<double> hg_series(const Params& p, std::size_t order);

// Partial sums of the two series at z.
HarmonicValue eval_series(const TaylorPair<double>& pair, Complex z);

// Harmonic Koebe function K = H + conj(G) from its rational closed form.
HarmonicValue harmonic_koebe_eval(Complex z);

// Closed form of f_{2,lambda} (harmonic quasiconformal Koebe function).
HarmonicValue f_lambda_explicit(double lambda, Complex z);

// J_f = |h'|^2 - |g'|^2 = (1 - lambda^2 |z|^2) |h'|^2.
double jacobian(const Params& p, Complex z);

// Generic shear: h - nu g = phi, g'/h' = omega, so h' = phi'/(1 - nu omega)
// and g' = omega h', integrated along [0, z]. Throws DilatationOutOfRange if
// |omega| >= 1 at any evaluated node.
HarmonicValue general_shear(const std::function<Complex(Complex)>& phi_prime,
                            const std::function<Complex(Complex)>& omega, Complex nu, Complex z,
                            const QuadSpec& quad = {});

}  // namespace koebe
