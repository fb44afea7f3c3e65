#pragma once

#include <cstddef>

#include "koebe/complex.hpp"
#include "koebe/series.hpp"

namespace koebe {

// Generalized Koebe function k_a(z) = ((1+z)/(1-z))^a - 1) / (2a), with the
// logarithmic limit k_0(z) = (1/2) log((1+z)/(1-z)), and its first three
// derivatives. order selects k_a (0), k_a' (1), k_a'' (2) or k_a''' (3).
// Principal branch throughout; throws DomainError unless |z| < 1.
Complex koebe_generalized(double a, Complex z, int order = 0);

inline Complex koebe(double a, Complex z) { return koebe_generalized(a, z, 0); }
inline Complex koebe_d1(double a, Complex z) { return koebe_generalized(a, z, 1); }
inline Complex koebe_d2(double a, Complex z) { return koebe_generalized(a, z, 2); }
inline Complex koebe_d3(double a, Complex z) { return koebe_generalized(a, z, 3); }

// Lens map l_R(z) = (w^R - 1)/(w^R + 1), w = (1+z)/(1-z), R in [0,1].
Complex lens_map(double R, Complex z);

// Taylor coefficients of k_a' from the recurrence of (1 - z^2) u' = 2(z + a) u:
//   c_0 = 1, c_1 = 2a, c_{n+1} = 2a c_n / (n+1) + c_{n-1}.
template <class T>
Series<T> ka_prime_series(const T& a, std::size_t order) {
  Series<T> c(order);
  c[0] = T(1);
  for (std::size_t n = 0; n < order; ++n) {
    T next = T(2) * a * c[n] / T(static_cast<long>(n + 1));
    if (n >= 1) next += c[n - 1];
    c[n + 1] = next;
  }
  return c;
}

}  // namespace koebe
