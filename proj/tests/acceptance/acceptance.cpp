// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Reference values come from tests/support/oracles.hpp or
// from closed forms written out below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "koebe/analytic_maps.hpp"
#include "koebe/bounds.hpp"
#include "koebe/coeffs.hpp"
#include "koebe/differential.hpp"
#include "koebe/hyp2f1.hpp"
#include "koebe/rational.hpp"
#include "koebe/render.hpp"
#include "koebe/shear.hpp"
#include "koebe/univalence.hpp"
#include "oracles.hpp"

namespace {

using koebe::Complex;
using koebe::Rational;
constexpr double kPi = std::numbers::pi;

// Accumulates sub-checks of one criterion; the first few failures are kept
// for the report line.
class Outcome {
 public:
  void check(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { info_ += (info_.empty() ? "" : ", ") + s; }
  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << count_ - failed_ << "/" << count_ << " checks";
    if (!info_.empty()) os << ", " << info_;
    if (!notes_.empty()) os << "; failed: " << notes_;
    return os.str();
  }

 private:
  int count_ = 0;
  int failed_ = 0;
  std::string notes_;
  std::string info_;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string pair_label(double a, double l) { return "(a=" + fmt(a) + ", lambda=" + fmt(l) + ")"; }

const std::vector<double> kGridA{-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0};
const std::vector<double> kGridL{0.0, 0.25, 0.5, 0.75};

// Largest |x - y| / max(1, |y|) over a list of pairs.
double rel_gap(Complex x, Complex y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }

void c1_coefficients(Outcome& out) {
  for (int ai = -4; ai <= 4; ++ai) {
    for (int li = 0; li < 4; ++li) {
      const Rational a(ai, 2);
      const Rational l(li, 4);
      const std::string label = "(a=" + koebe::to_string(a) + ", lambda=" + koebe::to_string(l) + ")";
      const auto s = koebe::hg_series(a, l, 8);
      const auto t = koebe::coeff_closed_forms(a, l);
      out.check(s.a_coeffs[2] == t.a2 && s.a_coeffs[3] == t.a3 && s.a_coeffs[4] == t.a4, "a2..a4 " + label);
      out.check(s.b_coeffs[2] == t.b2 && s.b_coeffs[3] == t.b3 && s.b_coeffs[4] == t.b4, "b2..b4 " + label);

      const auto o = oracle::hg_coefficients(a, l, 8);
      bool same = true;
      for (std::size_t n = 0; n <= 8; ++n) {
        same = same && s.a_coeffs.coeff(n) == o.a[n] && s.b_coeffs.coeff(n) == o.b[n];
      }
      out.check(same, "binomial-product oracle " + label);

      out.check(t.a2 - t.b2 == a, "a2 - b2 = a " + label);
      out.check(t.a3 - t.b3 == (2 * a * a + 1) / 3, "a3 - b3 " + label);
      out.check(t.a4 - t.b4 == a * a * a / 3 + 2 * a / 3, "a4 - b4 " + label);
      out.check(2 * t.b2 == l, "2 b2 = lambda " + label);
      out.check(3 * t.b3 == 2 * l * t.a2, "3 b3 = 2 lambda a2 " + label);
      out.check(4 * t.b4 == 3 * l * t.a3, "4 b4 = 3 lambda a3 " + label);
    }
  }
}

void c2_shear(Outcome& out) {
  const auto pts = oracle::disk_points(1000, 0.95, 7001);
  double worst = 0.0;
  for (double a : {-2.0, -0.5, 1.0, 2.0}) {
    for (double l : {0.0, 0.5, 0.9}) {
      const auto p = koebe::make_params(a, l);
      double pair_worst = 0.0;
      for (Complex z : pts) {
        const auto v = koebe::eval_f(p, z);
        pair_worst = std::max(pair_worst, std::abs(v.h - v.g - oracle::koebe_direct(a, z)));
      }
      worst = std::max(worst, pair_worst);
      out.check(pair_worst < 1e-9, pair_label(a, l) + " gap " + fmt(pair_worst));
    }
  }
  out.note("max |h - g - k_a| = " + fmt(worst));
}

void c3_operators(Outcome& out) {
  double worst_p = 0.0;
  double worst_s = 0.0;
  std::uint64_t seed = 3001;
  for (double a : kGridA) {
    for (double l : kGridL) {
      const auto p = koebe::make_params(a, l);
      for (Complex z : oracle::disk_points(100, 0.95, seed++)) {
        const auto g = koebe::generic_operators(koebe::family_jet(p, z));
        const double dp = rel_gap(koebe::pre_schwarzian_closed(p, z), g.pre_schwarzian);
        const double ds = rel_gap(koebe::schwarzian_closed(p, z), g.schwarzian);
        worst_p = std::max(worst_p, dp);
        worst_s = std::max(worst_s, ds);
        out.check(dp < 1e-8, "P_f " + pair_label(a, l));
        out.check(ds < 1e-8, "S_f " + pair_label(a, l));
      }
    }
  }
  out.note("max rel diff P_f " + fmt(worst_p) + ", S_f " + fmt(worst_s));
}

void c4_norms(Outcome& out) {
  using koebe::NormKind;
  const auto koebe2 = koebe::make_params(2.0, 0.0);
  const auto p2 = koebe::norm_estimate(NormKind::PreSchwarzian, koebe2, 1.0 - 1e-4);
  out.check(std::abs(p2.estimate - 6.0) < 5e-3, "||P|| (2,0) = " + fmt(p2.estimate));
  const auto s2 = koebe::norm_estimate(NormKind::Schwarzian, koebe2);
  out.check(std::abs(s2.estimate - 6.0) < 1e-6, "||S|| (2,0) = " + fmt(s2.estimate));
  // |S(z)| (1-|z|^2)^2 = 6 (1-|z|^2)^2 / |1-z^2|^2 equals 6 on the whole real diameter, z = 0 included.
  const double at_zero = std::abs(koebe::schwarzian_closed(koebe2, 0.0));
  out.check(std::abs(at_zero - 6.0) < 1e-12, "|S(0)| (2,0) = " + fmt(at_zero));
  const Complex zs = s2.argmax;
  const double at_argmax = 6.0 * std::pow(1.0 - std::norm(zs), 2) / std::norm(1.0 - zs * zs);
  out.check(std::abs(at_argmax - 6.0) < 1e-6, "||S|| (2,0) argmax not a maximizer");
  const auto s1 = koebe::norm_estimate(NormKind::Schwarzian, koebe::make_params(1.0, 0.0));
  out.check(std::abs(s1.estimate) < 1e-10, "||S|| (1,0) = " + fmt(s1.estimate));
  const auto p0 = koebe::norm_estimate(NormKind::PreSchwarzian, koebe::make_params(0.0, 0.0), 1.0 - 1e-4);
  out.check(std::abs(p0.estimate - 2.0) < 5e-3, "||P|| (0,0) = " + fmt(p0.estimate));
  out.note("||P||(2,0)=" + fmt(p2.estimate) + ", ||S||(2,0)=" + fmt(s2.estimate) + ", ||S||(1,0)=" +
           fmt(s1.estimate) + ", ||P||(0,0)=" + fmt(p0.estimate));

  double slack = INFINITY;
  for (double a : kGridA) {
    for (double l : kGridL) {
      const auto p = koebe::make_params(a, l);
      for (NormKind kind : {NormKind::PreSchwarzian, NormKind::Schwarzian}) {
        const auto rep = koebe::norm_estimate(kind, p);
        const double bound = kind == NormKind::PreSchwarzian ? 2.0 * (1.0 + std::abs(a)) + 2.0 * l * l + l
                                                             : std::pow(l, 4) + 2.0 * std::pow(l, 3) * (std::abs(a) + 1.0) +
                                                                   l * l * (4.0 * std::abs(a) + 6.5) +
                                                                   2.0 * l * (std::abs(a) + 2.0) + 2.0 * std::abs(1.0 - a * a);
        out.check(std::abs(rep.paper_bound - bound) <= 1e-12 * std::max(1.0, bound),
                  std::string(koebe::to_string(kind)) + " bound formula " + pair_label(a, l));
        out.check(rep.estimate <= bound + 1e-9,
                  std::string(koebe::to_string(kind)) + " " + pair_label(a, l) + " " + fmt(rep.estimate) + " > " + fmt(bound));
        slack = std::min(slack, bound - rep.estimate);
      }
    }
  }
  out.note("min bound - estimate over grid " + fmt(slack));
}

void c5_growth(Outcome& out) {
  for (double a : kGridA) {
    for (double l : kGridL) {
      const auto p = koebe::make_params(a, l);
      for (double r : {0.3, 0.6, 0.9}) {
        const auto b = koebe::growth_bounds(p, r);
        for (int k = 0; k < 64; ++k) {
          const auto v = koebe::eval_f(p, std::polar(r, 2.0 * kPi * k / 64));
          const double m = std::abs(v.f);
          const double tol_lo = 10.0 * (b.lo_err + v.err);
          const double tol_hi = 10.0 * (b.hi_err + v.err);
          out.check(m >= b.lo - tol_lo && m <= b.hi + tol_hi,
                    pair_label(a, l) + " r=" + fmt(r) + " |f|=" + fmt(m) + " not in [" + fmt(b.lo) + ", " + fmt(b.hi) + "]");
        }
      }
    }
  }
  const double r = 0.5;
  const auto b = koebe::growth_bounds(koebe::make_params(2.0, 0.0), r);
  const double lo = r / ((1 + r) * (1 + r));
  const double hi = r / ((1 - r) * (1 - r));
  out.check(std::abs(lo - 2.0 / 9.0) < 1e-15 && std::abs(hi - 2.0) < 1e-15, "closed-form oracle");
  out.check(std::abs(b.lo - lo) < 1e-8 && std::abs(b.hi - hi) < 1e-8,
            "(2,0,1/2) bounds [" + fmt(b.lo) + ", " + fmt(b.hi) + "]");
  out.note("(2,0,1/2) -> [" + fmt(b.lo) + ", " + fmt(b.hi) + "]");
}

void c6_area(Outcome& out) {
  double worst = 0.0;
  for (double a : kGridA) {
    for (double l : kGridL) {
      const auto p = koebe::make_params(a, l);
      const auto coeffs = oracle::hg_coefficients(a, l, 80);
      for (double r : {0.3, 0.5, 0.7}) {
        const auto e = koebe::area_empirical(p, r);
        const double ref = oracle::series_area(coeffs, r);
        const double rel = std::abs(e.value - ref) / ref;
        worst = std::max(worst, rel);
        out.check(rel < 1e-5, pair_label(a, l) + " r=" + fmt(r) + " rel " + fmt(rel));
        const auto b = koebe::area_bounds(p, r);
        out.check(e.value >= b.lo - 10.0 * (b.lo_err + e.err) && e.value <= b.hi + 10.0 * (b.hi_err + e.err),
                  pair_label(a, l) + " r=" + fmt(r) + " outside area bounds");
      }
    }
  }
  out.note("max rel vs series " + fmt(worst));

  const auto p0 = koebe::make_params(0.0, 0.0);
  const auto e0 = koebe::area_empirical(p0, 0.5);
  const double target = kPi * std::atanh(0.25);
  out.check(std::abs(e0.value - target) < 1e-6, "(0,0,1/2) area " + fmt(e0.value));
  const auto b0 = koebe::area_bounds(p0, 0.5);
  out.check(std::abs(b0.lo - 7.0 * kPi / 81.0) < 1e-8 && std::abs(b0.hi - 5.0 * kPi / 3.0) < 1e-8,
            "(0,0,1/2) bounds [" + fmt(b0.lo) + ", " + fmt(b0.hi) + "]");
  // The same endpoints as 2 pi int_0^r rho (1 +- rho)^-4 d rho.
  const double lo_q = 2.0 * kPi * oracle::simpson([](double t) { return t / std::pow(1.0 + t, 4); }, 0.0, 0.5);
  const double hi_q = 2.0 * kPi * oracle::simpson([](double t) { return t / std::pow(1.0 - t, 4); }, 0.0, 0.5);
  out.check(std::abs(lo_q - 7.0 * kPi / 81.0) < 1e-10 && std::abs(hi_q - 5.0 * kPi / 3.0) < 1e-10,
            "area bound quadrature oracle");
}

void c7_univalence(Outcome& out) {
  for (double a : {2.5, 3.0}) {
    for (double l : {0.0, 0.5}) {
      const auto p = koebe::make_params(a, l);
      const auto rep = koebe::univalence_verdict(p);
      out.check(rep.verdict == koebe::Verdict::NotUnivalent, "verdict " + pair_label(a, l));
      if (!rep.witness) {
        out.check(false, "no witness " + pair_label(a, l));
        continue;
      }
      const auto& w = *rep.witness;
      const double gap = std::abs(koebe::eval_f(p, w.z1).f - koebe::eval_f(p, w.z2).f);
      out.check(w.z1 != w.z2 && std::abs(w.z1 - w.z2) >= 1.0, "|z1 - z2| " + pair_label(a, l));
      out.check(gap < 1e-7, "image gap " + fmt(gap) + " " + pair_label(a, l));
    }
  }
  for (double a : {2.5, 3.0, 4.0}) {
    const Complex z1(0.0, std::tan(kPi / (2.0 * a)));
    out.check(std::abs(koebe::non_univalence_witness_point(a) - z1) < 1e-15, "witness point a=" + fmt(a));
    out.check(std::abs(koebe::koebe(a, z1) + 1.0 / a) < 1e-12, "k_a(z1) a=" + fmt(a));
    out.check(std::abs(oracle::koebe_direct(a, z1) + 1.0 / a) < 1e-12, "direct k_a(z1) a=" + fmt(a));
  }
  for (double a : kGridA) {
    for (double l : kGridL) {
      const auto scan = koebe::injectivity_scan(koebe::make_params(a, l), 0.98, 4096);
      out.check(scan.passed && !scan.crossing, "scan " + pair_label(a, l));
    }
  }
  const auto bad = koebe::injectivity_scan(koebe::make_params(3.0, 0.5), 0.7, 4096);
  out.check(!bad.passed && bad.crossing.has_value(), "no crossing for (3, 1/2) at r = 0.7");
}

void c8_closed_form(Outcome& out) {
  double worst = 0.0;
  std::uint64_t seed = 8001;
  for (double a : {-1.5, -0.5, 0.5, 1.5}) {
    for (double l : {0.25, 0.5}) {
      const auto p = koebe::make_params(a, l);
      for (Complex z : oracle::disk_points(50, 0.9, seed++)) {
        const auto c = koebe::closed_form_hg(p, z);
        const auto q = koebe::eval_f(p, z);
        const double d = std::max(std::abs(c.h - q.h), std::abs(c.g - q.g));
        worst = std::max(worst, d);
        out.check(d < 1e-6, pair_label(a, l) + " diff " + fmt(d));
      }
    }
  }
  out.note("max |closed - quad| " + fmt(worst));

  double worst_hyp = 0.0;
  for (double a : {-1.5, -0.5, 0.5, 1.5, -2.5, 2.5}) {
    for (double rho : {0.6, 0.7, 0.8}) {
      for (int k = 0; k <= 8; ++k) {
        const Complex x = std::polar(rho, kPi / 2.0 + kPi * k / 8.0);
        const Complex s = koebe::hyp_E_series(a, x);
        const Complex f = koebe::hyp_E_pfaff(a, x);
        const double d = std::abs(s - f) / std::max(1.0, std::abs(s));
        worst_hyp = std::max(worst_hyp, d);
        out.check(d < 1e-9, "hyp_E overlap a=" + fmt(a) + " x=" + fmt(x.real()) + "," + fmt(x.imag()));
        const double o = std::abs(s - oracle::hyp_E_bruteforce(a, x)) / std::max(1.0, std::abs(s));
        out.check(o < 1e-9, "hyp_E vs term sum a=" + fmt(a));
      }
    }
  }
  out.note("max series/Pfaff diff " + fmt(worst_hyp));
}

void c9_degenerations(Outcome& out) {
  std::uint64_t seed = 9001;
  double worst_l = 0.0;
  for (double l : {0.25, 0.5, 0.75}) {
    const auto p = koebe::make_params(2.0, l);
    for (Complex z : oracle::disk_points(50, 0.9, seed++)) {
      const double d = std::abs(koebe::eval_f(p, z).f - koebe::f_lambda_explicit(l, z).f);
      worst_l = std::max(worst_l, d);
      out.check(d < 1e-9, "f_{2," + fmt(l) + "} diff " + fmt(d));
    }
  }
  double worst_k = 0.0;
  for (double a : kGridA) {
    const auto p = koebe::make_params(a, 0.0);
    for (Complex z : oracle::disk_points(50, 0.9, seed++)) {
      const auto v = koebe::eval_f(p, z);
      const double d = rel_gap(v.f, oracle::koebe_direct(a, z));
      worst_k = std::max(worst_k, d);
      out.check(d < 1e-12, "f_{" + fmt(a) + ",0} vs k_a rel " + fmt(d));
    }
  }
  const auto s = koebe::hg_series(Rational(2), Rational(1), 6);
  for (long n = 1; n <= 6; ++n) {
    const auto i = static_cast<std::size_t>(n);
    out.check(s.a_coeffs[i] == Rational((n + 1) * (2 * n + 1), 6), "a_" + std::to_string(n) + " at (2,1)");
    out.check(s.b_coeffs[i] == Rational((n - 1) * (2 * n - 1), 6), "b_" + std::to_string(n) + " at (2,1)");
  }
  out.note("max f_{2,l} diff " + fmt(worst_l) + ", max f_{a,0}/k_a rel diff " + fmt(worst_k));
}

double min_real(const koebe::MeshImage& img) {
  double m = INFINITY;
  for (const auto* group : {&img.circles, &img.rays}) {
    for (const auto& curve : *group) {
      for (Complex v : curve) m = std::min(m, v.real());
    }
  }
  return m;
}

void c10_render(Outcome& out) {
  const koebe::MeshSpec mesh;
  for (const auto& preset : koebe::figure_presets()) {
    const std::string a = koebe::render_preset(preset, mesh);
    const std::string b = koebe::render_preset(preset, mesh);
    out.check(a == b, preset.name + " not byte-deterministic");
    const bool valid = a.rfind("<?xml version=\"1.0\"", 0) == 0 && a.find("<svg") != std::string::npos &&
                       a.find("xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos &&
                       a.find("viewBox=\"") != std::string::npos && a.find("nan") == std::string::npos &&
                       a.find("inf") == std::string::npos && a.size() > 7 && a.rfind("</svg>\n") == a.size() - 7;
    std::size_t polylines = 0;
    for (std::size_t pos = a.find("<polyline"); pos != std::string::npos; pos = a.find("<polyline", pos + 1)) ++polylines;
    out.check(valid && polylines == static_cast<std::size_t>(mesh.n_circles + mesh.n_rays),
              preset.name + " invalid SVG structure");
  }

  // Leftmost abscissa of the (2,0) preset image, over every mesh vertex.
  const auto& fig3 = koebe::find_preset("fig3");
  out.check(fig3.a == 2.0 && fig3.lambda == 0.0 && !fig3.harmonic_koebe, "fig3 is not the (2,0) preset");
  std::string trace;
  double prev = NAN;
  for (double r : {0.9, 0.95, 0.99, 0.999}) {
    koebe::MeshSpec m;
    m.r_max = r;
    const auto img = koebe::map_mesh(fig3, m);
    const double x = min_real(img);
    const auto& neg = img.rays[static_cast<std::size_t>(m.n_rays / 2)];
    double tip = INFINITY;
    for (Complex v : neg) tip = std::min(tip, v.real());
    trace += (trace.empty() ? "" : " ") + ("r=" + fmt(r) + ":" + fmt(x) + "[axis " + fmt(tip) + "]");
    out.check(x >= -0.25 - 1e-2, "leftmost " + fmt(x) + " at r_max=" + fmt(r));
    if (!std::isnan(prev)) out.check(std::abs(x + 0.25) <= std::abs(prev + 0.25), "leftmost moves away from -1/4");
    prev = x;
  }
  out.note("leftmost abscissa " + trace);

  const auto img0 = koebe::map_mesh(koebe::find_preset("fig1"), mesh);
  double worst_im = 0.0;
  for (const auto* group : {&img0.circles, &img0.rays}) {
    for (const auto& curve : *group) {
      for (Complex v : curve) worst_im = std::max(worst_im, std::abs(v.imag()));
    }
  }
  out.check(worst_im < kPi / 4 + 1e-6, "(0,0) |Im w| = " + fmt(worst_im));
  out.note("(0,0) max |Im w| " + fmt(worst_im));
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Outcome&)> run;
  double time_limit_s;  // 0: no limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "coefficient exactness", c1_coefficients, 1.0},
      {2, "shear identity", c2_shear, 30.0},
      {3, "operator consistency", c3_operators, 0.0},
      {4, "norm values and bounds", c4_norms, 0.0},
      {5, "growth sandwich", c5_growth, 0.0},
      {6, "area", c6_area, 0.0},
      {7, "univalence", c7_univalence, 60.0},
      {8, "closed-form path", c8_closed_form, 0.0},
      {9, "degenerations", c9_degenerations, 0.0},
      {10, "rendering", c10_render, 0.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit_s > 0.0) out.check(secs < c.time_limit_s, "runtime " + fmt(secs) + " s over " + fmt(c.time_limit_s) + " s");
    const bool ok = out.passed();
    if (!ok) ++failures;
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", ok ? "PASS" : "FAIL", c.id, c.title, out.summary().c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
