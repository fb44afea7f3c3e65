#pragma once

// Truncated power series over an exact (Rational) or floating (double,
// Complex) coefficient ring. A Series of order N stores N+1 coefficients
// c_0..c_N; everything beyond z^N is discarded by every operation.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "koebe/complex.hpp"
#include "koebe/errors.hpp"
#include "koebe/rational.hpp"

namespace koebe {

enum class SeriesMode { ExactRational, Floating };

// Upper bound on any requested truncation order.
inline constexpr std::size_t kMaxSeriesOrder = 100000;

template <class T>
inline constexpr SeriesMode series_mode_v =
    std::is_same_v<T, Rational> ? SeriesMode::ExactRational : SeriesMode::Floating;

inline void check_order(std::size_t order) {
  if (order > kMaxSeriesOrder) {
    fail(ErrorCode::OrderOverflow,
         "order " + std::to_string(order) + " exceeds cap " + std::to_string(kMaxSeriesOrder));
  }
}

template <class T>
class Series {
public:
  using value_type = T;

  explicit Series(std::size_t order) : coeffs_((check_order(order), order + 1), T(0)) {}
  Series(std::initializer_list<T> coeffs) : coeffs_(coeffs) {
    if (coeffs_.empty()) coeffs_.push_back(T(0));
    check_order(coeffs_.size() - 1);
  }
  explicit Series(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(T(0));
    check_order(coeffs_.size() - 1);
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  static constexpr SeriesMode mode() noexcept { return series_mode_v<T>; }

  const T& operator[](std::size_t k) const { return coeffs_[k]; }
  T& operator[](std::size_t k) { return coeffs_[k]; }

  // Coefficient k, or zero past the stored order.
  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

  const std::vector<T>& coeffs() const noexcept { return coeffs_; }

  // Horner evaluation of the truncated sum.
  template <class X>
  auto evaluate(const X& x) const {
    using R = decltype(coeffs_[0] * x);
    R acc = R(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
  }

  friend bool operator==(const Series& lhs, const Series& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

private:
  std::vector<T> coeffs_;
};

template <class T>
Series<T> mul(const Series<T>& lhs, const Series<T>& rhs, std::size_t order) {
  Series<T> out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    T acc(0);
    std::size_t kmax = std::min(n, lhs.order());
    for (std::size_t k = 0; k <= kmax; ++k) {
      if (n - k <= rhs.order()) acc += lhs[k] * rhs[n - k];
    }
    out[n] = acc;
  }
  return out;
}

template <class T>
Series<T> div(const Series<T>& num, const Series<T>& den, std::size_t order) {
  if (den[0] == T(0)) fail(ErrorCode::DivisionByZeroConstantTerm, "divisor has zero constant term");
  Series<T> out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    T acc = num.coeff(n);
    std::size_t kmax = std::min(n, den.order());
    for (std::size_t k = 1; k <= kmax; ++k) acc -= den[k] * out[n - k];
    out[n] = acc / den[0];
  }
  return out;
}

template <class T>
Series<T> derivative(const Series<T>& s, std::size_t order) {
  Series<T> out(order);
  for (std::size_t n = 0; n <= order; ++n) out[n] = T(static_cast<long>(n + 1)) * s.coeff(n + 1);
  return out;
}

// Antiderivative with zero constant term.
template <class T>
Series<T> antiderivative(const Series<T>& s, std::size_t order) {
  Series<T> out(order);
  for (std::size_t n = 1; n <= order; ++n) out[n] = s.coeff(n - 1) / T(static_cast<long>(n));
  return out;
}

enum class SeriesOp { Mul, Div, Diff, Integ };

// Single entry point over the four operations; `rhs` is required for Mul and
// Div and must be null for Diff and Integ.
template <class T>
Series<T> combine(SeriesOp kind, const Series<T>& lhs, const std::type_identity_t<Series<T>>* rhs, std::size_t order) {
  check_order(order);
  const bool binary = kind == SeriesOp::Mul || kind == SeriesOp::Div;
  if (binary != (rhs != nullptr)) {
    fail(ErrorCode::InvalidArgument, binary ? "binary series op needs a second operand"
                                            : "unary series op takes no second operand");
  }
  switch (kind) {
    case SeriesOp::Mul: return mul(lhs, *rhs, order);
    case SeriesOp::Div: return div(lhs, *rhs, order);
    case SeriesOp::Diff: return derivative(lhs, order);
    case SeriesOp::Integ: return antiderivative(lhs, order);
  }
  fail(ErrorCode::InvalidArgument, "unknown series op");
}

// Coefficients of (1 + c z)^alpha: binomial(alpha, k) c^k.
template <class T>
Series<T> binpow(const T& c, const T& alpha, std::size_t order) {
  Series<T> out(order);
  T term(1);
  out[0] = term;
  for (std::size_t k = 1; k <= order; ++k) {
    term = term * (alpha - T(static_cast<long>(k - 1))) / T(static_cast<long>(k)) * c;
    out[k] = term;
  }
  return out;
}

}  // namespace koebe
