#include "koebe/differential.hpp"

#include <cmath>

#include "koebe/errors.hpp"

namespace koebe {

namespace {

struct CommonTerms {
  Complex log_deriv;   // h''/h'
  Complex anti;        // lambda^2 conj(z) / (1 - lambda^2 |z|^2)
  Complex one_minus_z2;
  Complex one_minus_lz;
  double one_minus_l2r2;
};

CommonTerms common_terms(const Params& p, Complex z, const char* who) {
  require_in_disk(z, who);
  const double l = p.lambda;
  CommonTerms t;
  t.one_minus_z2 = 1.0 - z * z;
  t.one_minus_lz = 1.0 - l * z;
  t.one_minus_l2r2 = 1.0 - l * l * std::norm(z);
  t.log_deriv = 2.0 * (z + p.a) / t.one_minus_z2 + l / t.one_minus_lz;
  t.anti = l * l * std::conj(z) / t.one_minus_l2r2;
  return t;
}

Complex schwarzian_first_four(const Params& p, Complex z, const CommonTerms& t) {
  const double a = p.a;
  const double l = p.lambda;
  const Complex zb = std::conj(z);
  return 2.0 * (1.0 - a * a) / (t.one_minus_z2 * t.one_minus_z2) +
         l * l / (2.0 * t.one_minus_lz * t.one_minus_lz) -
         2.0 * l * (z + a) / (t.one_minus_z2 * t.one_minus_lz) +
         l * l * zb * (-3.0 * l * z * z + 2.0 * (1.0 - a * l) * z + 2.0 * a + l) /
             (t.one_minus_l2r2 * t.one_minus_z2 * t.one_minus_lz);
}

}  // namespace

Complex pre_schwarzian_closed(const Params& p, Complex z) {
  const CommonTerms t = common_terms(p, z, "pre_schwarzian_closed");
  return t.log_deriv - t.anti;
}

Complex pre_schwarzian_closed_as_printed(const Params& p, Complex z) {
  const CommonTerms t = common_terms(p, z, "pre_schwarzian_closed_as_printed");
  return t.log_deriv + t.anti;
}

Complex schwarzian_closed(const Params& p, Complex z) {
  const CommonTerms t = common_terms(p, z, "schwarzian_closed");
  return schwarzian_first_four(p, z, t) - 1.5 * t.anti * t.anti;
}

Complex schwarzian_closed_as_printed(const Params& p, Complex z) {
  const CommonTerms t = common_terms(p, z, "schwarzian_closed_as_printed");
  return schwarzian_first_four(p, z, t) + 3.0 * t.anti * t.anti;
}

Operators generic_operators(const HarmonicJet& j) {
  if (j.hp == Complex(0.0, 0.0) || !is_finite(j.hp)) fail(ErrorCode::DegenerateJet, "h' vanishes");
  const double w2 = std::norm(j.w);
  if (!(w2 < 1.0)) fail(ErrorCode::DegenerateJet, "|w| >= 1");
  const Complex q = j.hpp / j.hp;
  const Complex wbar_over = std::conj(j.w) / (1.0 - w2);
  const Complex corr = j.wp * wbar_over;
  const Complex pre = q - corr;
  const Complex s = j.hppp / j.hp - 1.5 * q * q + wbar_over * (q * j.wp - j.wpp) - 1.5 * corr * corr;
  return {pre, s};
}

HarmonicJet family_jet(const Params& p, Complex z) {
  require_in_disk(z, "family_jet");
  const double l = p.lambda;
  const Complex k1 = koebe_d1(p.a, z);
  const Complex k2 = koebe_d2(p.a, z);
  const Complex k3 = koebe_d3(p.a, z);
  const Complex m = 1.0 - l * z;
  HarmonicJet j;
  j.hp = k1 / m;
  j.hpp = j.hp * (2.0 * (z + p.a) / (1.0 - z * z) + l / m);
  j.hppp = (k3 * m * m + 2.0 * l * (k2 * m + l * k1)) / (m * m * m);
  j.w = l * z;
  j.wp = l;
  j.wpp = 0.0;
  return j;
}

HarmonicJet harmonic_koebe_jet(Complex z) {
  require_in_disk(z, "harmonic_koebe_jet");
  // H' = k'/(1 - z) with k' = (1+z)/(1-z)^3, i.e. H' = (1+z)/(1-z)^4.
  const Complex u = 1.0 - z;
  const Complex u2 = u * u;
  const Complex u4 = u2 * u2;
  HarmonicJet j;
  j.hp = (1.0 + z) / u4;
  j.hpp = (5.0 + 3.0 * z) / (u4 * u);
  j.hppp = (28.0 + 12.0 * z) / (u4 * u2);
  j.w = z;
  j.wp = 1.0;
  j.wpp = 0.0;
  return j;
}

std::string_view to_string(NormKind kind) noexcept {
  return kind == NormKind::PreSchwarzian ? "pre_schwarzian" : "schwarzian";
}

double pre_schwarzian_norm_bound(double a, double lambda) {
  return 2.0 * (1.0 + std::abs(a)) + 2.0 * lambda * lambda + lambda;
}

double schwarzian_norm_bound(double a, double lambda) {
  const double l = lambda;
  const double aa = std::abs(a);
  return l * l * l * l + 2.0 * l * l * l * (aa + 1.0) + l * l * (4.0 * aa + 6.5) + 2.0 * l * (aa + 2.0) +
         2.0 * std::abs(1.0 - a * a);
}

NormReport norm_estimate(NormKind kind, const Params& p, double r_max, const SupSearchSpec& spec) {
  p.validate();
  NormReport report;
  report.kind = kind;
  report.r_max = r_max;
  SupResult sup;
  if (kind == NormKind::PreSchwarzian) {
    sup = weighted_sup([&](Complex z) { return pre_schwarzian_closed(p, z); }, 1, r_max, spec);
    report.paper_bound = pre_schwarzian_norm_bound(p.a, p.lambda);
  } else {
    sup = weighted_sup([&](Complex z) { return schwarzian_closed(p, z); }, 2, r_max, spec);
    report.paper_bound = schwarzian_norm_bound(p.a, p.lambda);
  }
  report.estimate = sup.sup;
  report.argmax = sup.argmax;
  return report;
}

}  // namespace koebe
