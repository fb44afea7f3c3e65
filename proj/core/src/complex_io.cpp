#include "koebe/complex.hpp"

#include <array>
#include <charconv>
#include <system_error>

#include "koebe/errors.hpp"

namespace koebe {

void require_in_disk(Complex z, const char* who) {
  if (!is_finite(z) || std::abs(z) >= 1.0) {
    fail(ErrorCode::DomainError, std::string(who) + ": point " + format_complex(z) +
                                     " is not in the open unit disk");
  }
}

std::string format_real(double x, int max_digits) {
  if (x == 0.0) return "0";  // folds -0
  std::array<char, 64> buf{};
  auto shortest = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  std::string out(buf.data(), shortest.ptr);
  // Only fall back to a capped precision when the shortest form is longer.
  std::size_t digits = 0;
  for (char c : out) {
    if (c == 'e' || c == 'E') break;
    if (c >= '0' && c <= '9') ++digits;
  }
  if (static_cast<int>(digits) > max_digits) {
    auto capped = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general,
                                max_digits);
    out.assign(buf.data(), capped.ptr);
  }
  return out;
}

std::string format_complex(Complex z, int max_digits) {
  std::string out = format_real(z.real(), max_digits);
  double im = z.imag();
  if (std::signbit(im) && im != 0.0) {
    out += '-';
    out += format_real(-im, max_digits);
  } else {
    out += '+';
    out += format_real(im == 0.0 ? 0.0 : im, max_digits);
  }
  out += 'i';
  return out;
}

namespace {

double parse_prefix(std::string_view text, std::size_t& pos) {
  double value = 0.0;
  const char* begin = text.data() + pos;
  const char* end = text.data() + text.size();
  // from_chars rejects a leading '+'.
  bool plus = begin != end && *begin == '+';
  if (plus) ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr == begin) {
    fail(ErrorCode::InvalidArgument, "malformed number in '" + std::string(text) + "'");
  }
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

}  // namespace

double parse_real(std::string_view text) {
  std::size_t pos = 0;
  double v = parse_prefix(text, pos);
  if (pos != text.size() || !std::isfinite(v)) {
    fail(ErrorCode::InvalidArgument, "malformed real '" + std::string(text) + "'");
  }
  return v;
}

Complex parse_complex(std::string_view text) {
  if (text.empty()) fail(ErrorCode::InvalidArgument, "empty complex literal");
  const std::string original(text);
  if (text.back() != 'i') return {parse_real(text), 0.0};
  text.remove_suffix(1);

  // Split at the last sign that is not the leading one and not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    char c = text[k];
    if ((c == '+' || c == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](std::string_view s) -> double {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
  };
  Complex z;
  if (split == std::string_view::npos) {
    z = {0.0, imag_part(text)};
  } else {
    z = {parse_real(text.substr(0, split)), imag_part(text.substr(split))};
  }
  if (!is_finite(z)) fail(ErrorCode::InvalidArgument, "non-finite complex '" + original + "'");
  return z;
}

}  // namespace koebe
