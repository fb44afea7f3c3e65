#include "koebe/rational.hpp"

#include <cctype>

#include "koebe/errors.hpp"

namespace koebe {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

cpp_int parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) fail(ErrorCode::InvalidArgument, "malformed rational '" + std::string(whole) + "'");
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  cpp_int v{std::string(s)};
  return negative ? cpp_int(-v) : v;
}

cpp_int pow10(long n) {
  cpp_int p = 1;
  for (long k = 0; k < n; ++k) p *= 10;
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    cpp_int num = parse_integer(text.substr(0, slash), text);
    cpp_int den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    cpp_int ev = parse_integer(exp_text, text);
    if (ev > 4096 || ev < -4096) fail(ErrorCode::InvalidArgument, "exponent out of range in '" + std::string(text) + "'");
    exponent = ev.convert_to<long>();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mantissa.substr(0, dot);
    std::string_view fp = mantissa.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty())) {
      fail(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    }
    digits = std::string(ip) + std::string(fp);
    frac_digits = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mantissa)) fail(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    digits = std::string(mantissa);
  }
  // cpp_int reads a leading 0 as an octal prefix.
  const auto nz = digits.find_first_not_of('0');
  digits = nz == std::string::npos ? "0" : digits.substr(nz);
  cpp_int num(digits);
  if (negative) num = -num;
  long shift = exponent - frac_digits;
  if (shift >= 0) return Rational(num * pow10(shift));
  return Rational(num, pow10(-shift));
}

std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  std::string out = numerator(q).str();
  if (denominator(q) != 1) out += "/" + denominator(q).str();
  return out;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace koebe
