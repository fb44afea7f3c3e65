#include "koebe/hyp2f1.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "koebe/errors.hpp"

namespace koebe {

namespace {

constexpr long kMaxTerms = 20'000'000;
constexpr int kQuietRun = 20;

bool is_integer(double v) { return std::isfinite(v) && v == std::round(v); }

// Sums t_0 = 1, t_n = t_{n-1} * ratio(n).
template <class Ratio>
HypValue sum_series(const Ratio& ratio, const char* who, double tol) {
  Complex sum(1.0, 0.0);
  Complex term(1.0, 0.0);
  int quiet = 0;
  long n = 1;
  for (; n < kMaxTerms; ++n) {
    term *= ratio(n);
    sum += term;
    if (std::abs(term) <= tol * std::abs(sum)) {
      if (++quiet >= kQuietRun) break;
    } else {
      quiet = 0;
    }
  }
  if (n >= kMaxTerms) fail(ErrorCode::NonConvergence, std::string(who) + ": series did not converge");
  return {sum, n, false};
}

void require_nondegenerate_E(double a) {
  if (is_integer(a) && a >= 0.0) {
    fail(ErrorCode::DegenerateParameters, "2F1(1,-a;1-a;x) undefined for integer a >= 0 (a = " +
                                              format_real(a) + ")");
  }
}

}  // namespace

HypValue hyp_general(const HypTerm& t, double tol) {
  const Complex c = t.c_param;
  if (c.imag() == 0.0 && c.real() <= 0.0 && is_integer(c.real())) {
    fail(ErrorCode::DegenerateParameters, "2F1 with nonpositive integer c");
  }
  if (!(std::abs(t.x) < 1.0)) fail(ErrorCode::DomainError, "hyp_general requires |x| < 1");
  auto ratio = [&](long n) {
    const double k = static_cast<double>(n - 1);
    return (t.a_param + k) * (t.b_param + k) / ((c + k) * (k + 1.0)) * t.x;
  };
  HypValue v = sum_series(ratio, "hyp_general", tol);
  v.slow_convergence = std::abs(t.x) > 0.95;
  return v;
}

Complex hyp_E_series(double a, Complex x, double tol) {
  require_nondegenerate_E(a);
  if (!(std::abs(x) < 1.0)) fail(ErrorCode::NonConvergence, "hyp_E_series requires |x| < 1");
  // (-a)_n / (1-a)_n = -a / (n - a); ratio of consecutive terms (n-1-a)/(n-a) x.
  auto ratio = [&](long n) { return (static_cast<double>(n) - 1.0 - a) / (static_cast<double>(n) - a) * x; };
  return sum_series(ratio, "hyp_E_series", tol).value;
}

Complex hyp_E_pfaff(double a, Complex x, double tol) {
  require_nondegenerate_E(a);
  if (x == Complex(1.0, 0.0)) fail(ErrorCode::DomainError, "hyp_E at x = 1");
  const Complex y = x / (x - 1.0);
  if (!(std::abs(y) < 1.0)) fail(ErrorCode::NonConvergence, "Pfaff argument outside the unit disk");
  // 2F1(1,1;1-a;y): t_n / t_{n-1} = n y / (n - a)
  auto ratio = [&](long n) { return static_cast<double>(n) / (static_cast<double>(n) - a) * y; };
  return sum_series(ratio, "hyp_E_pfaff", tol).value / (1.0 - x);
}

Complex hyp_E(double a, Complex x, double tol) {
  require_nondegenerate_E(a);
  if (std::abs(x) <= 0.8) return hyp_E_series(a, x, tol);
  // Otherwise take whichever series has the smaller argument.
  const double y = std::abs(x / (x - 1.0));
  if (y < 1.0 && (y < std::abs(x) || std::abs(x) >= 1.0)) return hyp_E_pfaff(a, x, tol);
  if (std::abs(x) < 1.0) return hyp_E_series(a, x, tol);
  fail(ErrorCode::NonConvergence, "hyp_E: argument " + format_complex(x) + " is outside both series regions");
}

bool closed_form_defined(double a) noexcept { return std::isfinite(a) && !is_integer(a); }

HarmonicValue closed_form_hg(const Params& p, Complex z) {
  p.validate();
  const double a = p.a;
  if (!closed_form_defined(a)) {
    fail(ErrorCode::DegenerateParameters, "closed form undefined for integer a = " + format_real(a));
  }
  require_in_disk(z, "closed_form_hg");
  const double l = p.lambda;

  const Complex e_const = hyp_E(a, Complex((l + 1.0) / (l - 1.0), 0.0));
  const Complex x = -(z - 1.0) * (l + 1.0) / ((z + 1.0) * (l - 1.0));
  const Complex e_z = hyp_E(a, x);
  const Complex half = 0.5 * (1.0 - z);
  const HypValue f1 = hyp_general({1.0 - a, 1.0 - a, 2.0 - a, half});
  const HypValue f2 = hyp_general({-a, -a, 1.0 - a, half});

  const Complex pow_inv_1mz = std::exp(-a * std::log(1.0 - z));  // (1/(1-z))^a
  const Complex pow_1pz = std::exp(a * std::log(1.0 + z));       // (z+1)^a
  const Complex pow_w = std::exp(2.0 * a * std::atanh(z));       // ((1+z)/(1-z))^a
  const double two_a = std::exp2(a);

  const Complex psi_first = 4.0 * (a - 1.0) * l * pow_1pz * e_z;
  const Complex psi_second = two_a * (l - 1.0) * (a * (z - 1.0) * f1.value - 2.0 * (a - 1.0) * f2.value);
  const Complex psi = pow_inv_1mz * (psi_first + psi_second);

  const double h_den = 2.0 * a * (l * l - 1.0);
  const Complex h_const = -(-2.0 * l * e_const + l - 1.0) / h_den;
  const Complex h_var = -psi / (4.0 * (a - 1.0) * a * (l - 1.0) * (l + 1.0));
  const Complex h = h_const + h_var;

  const Complex varpi = l * (2.0 * e_const - pow_w * (2.0 * e_z + l - 1.0) + l - 1.0);
  const Complex g = varpi / h_den;

  // Cancellation between the constant and variable parts dominates the error.
  const double scale = std::abs(h_const) + std::abs(h_var) + std::abs(g) +
                       std::abs(pow_inv_1mz) * (std::abs(psi_first) + std::abs(psi_second)) /
                           std::abs(4.0 * (a - 1.0) * a * (l * l - 1.0));
  const double err = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  return HarmonicValue::from_parts(h, g, err, !(f1.slow_convergence || f2.slow_convergence));
}

}  // namespace koebe
