#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <string_view>

namespace koebe {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Throws DomainError unless |z| < 1 and z is finite. `who` names the caller.
void require_in_disk(Complex z, const char* who);

// Shortest round-trip decimal, at most `max_digits` significant digits.
std::string format_real(double x, int max_digits = 17);

// "<re>(+|-)<im>i", e.g. "0.3+0.4i", "1-2i", "-0.5+0i".
std::string format_complex(Complex z, int max_digits = 17);

// Accepts the format_complex grammar plus a bare real ("0.5") or a bare
// imaginary ("0.25i", "-i"). Throws InvalidArgument on malformed input.
Complex parse_complex(std::string_view text);

double parse_real(std::string_view text);

}  // namespace koebe
