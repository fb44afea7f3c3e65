#pragma once

// Gauss hypergeometric pieces used by the closed forms of h and g, and the
// closed-form evaluation itself.

#include "koebe/complex.hpp"
#include "koebe/shear.hpp"

namespace koebe {

inline constexpr double kHypTol = 1e-15;

struct HypTerm {
  Complex a_param;
  Complex b_param;
  Complex c_param;
  Complex x;
};

struct HypValue {
  Complex value;
  long terms = 0;
  // Set when |x| > 0.95: the series still converges but slowly.
  bool slow_convergence = false;
};

// 2F1(a, b; c; x) by direct summation for |x| < 1. Summation stops once 20
// consecutive terms are below tol * |partial sum|. Throws
// DegenerateParameters if c is a nonpositive integer, DomainError if |x| >= 1.
HypValue hyp_general(const HypTerm& term, double tol = kHypTol);

// E_a(x) = 2F1(1, -a; 1 - a; x) = -a sum_n x^n / (n - a).
// Direct series for |x| <= 0.8, otherwise whichever of the direct series and
// the Pfaff transform (1 - x)^{-1} 2F1(1, 1; 1 - a; x/(x - 1)) has the
// smaller argument. Throws DegenerateParameters for integer a >= 0 and
// NonConvergence when neither series converges (|x| >= 1 and Re x >= 1/2).
Complex hyp_E(double a, Complex x, double tol = kHypTol);

// The two routes separately, for cross-checking on their common region.
Complex hyp_E_series(double a, Complex x, double tol = kHypTol);
Complex hyp_E_pfaff(double a, Complex x, double tol = kHypTol);

// h and g assembled from the hypergeometric closed forms. Refuses integer a
// with DegenerateParameters (use eval_f there).
HarmonicValue closed_form_hg(const Params& p, Complex z);

bool closed_form_defined(double a) noexcept;

}  // namespace koebe
