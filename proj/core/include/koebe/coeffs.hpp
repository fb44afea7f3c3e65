#pragma once

// Closed forms of the initial Taylor coefficients a_2..a_4, b_2..b_4 of the
// family and their sharp moduli bounds.

#include "koebe/errors.hpp"
#include "koebe/rational.hpp"

namespace koebe {

template <class T>
struct CoeffTable {
  T a2, a3, a4;
  T b2, b3, b4;
  // Moduli bounds, same order.
  T bound_a2, bound_a3, bound_a4;
  T bound_b2, bound_b3, bound_b4;
};

namespace detail {
template <class T>
T abs_value(const T& v) {
  return v < T(0) ? T(-v) : v;
}
}  // namespace detail

// lambda in [0,1]; lambda = 1 is the formal harmonic-Koebe limit.
template <class T>
CoeffTable<T> coeff_closed_forms(const T& a, const T& lambda) {
  if (lambda < T(0) || lambda > T(1)) fail(ErrorCode::InvalidArgument, "coeff_closed_forms: lambda must lie in [0,1]");
  const T& l = lambda;
  const T one(1), two(2), three(3), four(4);
  const T q = l * l + two * a * l + two * a * a + one;
  CoeffTable<T> t;
  t.a2 = a + l / two;
  t.a3 = q / three;
  t.a4 = a * a * a / three + two * a / three + l * q / four;
  t.b2 = l / two;
  t.b3 = l * l / three + two * a * l / three;
  t.b4 = l * q / four;

  const T abs_a = detail::abs_value(a);
  const T q_abs = l * l + two * abs_a * l + two * a * a + one;
  t.bound_a2 = abs_a + l / two;
  t.bound_a3 = q_abs / three;
  t.bound_a4 = abs_a * abs_a * abs_a / three + two * abs_a / three + l * q_abs / four;
  t.bound_b2 = l / two;
  t.bound_b3 = l * l / three + two * abs_a * l / three;
  t.bound_b4 = l * q_abs / four;
  return t;
}

}  // namespace koebe
