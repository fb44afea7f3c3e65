#include "koebe/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "koebe/analytic_maps.hpp"
#include "koebe/bounds.hpp"
#include "koebe/coeffs.hpp"
#include "koebe/differential.hpp"
#include "koebe/errors.hpp"
#include "koebe/hyp2f1.hpp"
#include "koebe/shear.hpp"
#include "koebe/univalence.hpp"

namespace koebe {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::pair<Suite, std::string_view> kSuiteNames[] = {
    {Suite::Coeffs, "coeffs"}, {Suite::Shear, "shear"},           {Suite::Norms, "norms"},
    {Suite::Growth, "growth"}, {Suite::Area, "area"},             {Suite::Univalence, "univalence"},
    {Suite::Hyp, "hyp"},       {Suite::All, "all"},
};

// Uniform doubles from the raw engine output; std distributions are not
// reproducible across standard libraries.
class PointSampler {
public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  Complex in_disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, 2.0 * std::numbers::pi * uniform());
  }

private:
  std::mt19937_64 rng_;
};

struct CheckSink {
  std::vector<Check>& out;

  void add(std::string name, std::vector<std::pair<std::string, double>> params, CheckValue measured,
           CheckValue expected, double tol, bool pass) {
    out.push_back({std::move(name), std::move(params), std::move(measured), std::move(expected), tol, pass});
  }

  // measured <= bound + tol
  void at_most(std::string name, std::vector<std::pair<std::string, double>> params, double measured, double bound,
               double tol) {
    add(std::move(name), std::move(params), measured, bound, tol, measured <= bound + tol);
  }
};

using ParamList = std::vector<std::pair<std::string, double>>;

ParamList al(double a, double l) { return {{"a", a}, {"lambda", l}}; }
ParamList alr(double a, double l, double r) { return {{"a", a}, {"lambda", l}, {"r", r}}; }

Rational exact_of(double v) { return parse_rational(format_real(v)); }

void suite_coeffs(const VerifyConfig& cfg, CheckSink& sink) {
  std::vector<double> lambdas = cfg.lambda_values;
  if (std::find(lambdas.begin(), lambdas.end(), 1.0) == lambdas.end()) lambdas.push_back(1.0);
  for (double a : cfg.a_values) {
    for (double l : lambdas) {
      const Rational qa = exact_of(a);
      const Rational ql = exact_of(l);
      const auto series = hg_series<Rational>(qa, ql, 8);
      const auto t = coeff_closed_forms(qa, ql);
      const auto& A = series.a_coeffs;
      const auto& B = series.b_coeffs;
      int mismatches = (A[2] != t.a2) + (A[3] != t.a3) + (A[4] != t.a4) + (B[2] != t.b2) + (B[3] != t.b3) +
                       (B[4] != t.b4) + (A[1] != 1) + (B[1] != 0);
      sink.add("coeffs.series_equals_closed_form", al(a, l), static_cast<double>(mismatches), 0.0, 0.0,
               mismatches == 0);

      int system_violations = 0;
      system_violations += (A[2] - B[2] != qa);
      system_violations += (A[3] - B[3] != (2 * qa * qa + 1) / 3);
      system_violations += (A[4] - B[4] != qa * qa * qa / 3 + 2 * qa / 3);
      system_violations += (2 * B[2] != ql);
      system_violations += (3 * B[3] != 2 * ql * A[2]);
      system_violations += (4 * B[4] != 3 * ql * A[3]);
      sink.add("coeffs.defining_systems", al(a, l), static_cast<double>(system_violations), 0.0, 0.0,
               system_violations == 0);

      auto within = [](const Rational& v, const Rational& bound) { return abs(v) <= bound; };
      const bool bounded = within(t.a2, t.bound_a2) && within(t.a3, t.bound_a3) && within(t.a4, t.bound_a4) &&
                           within(t.b2, t.bound_b2) && within(t.b3, t.bound_b3) && within(t.b4, t.bound_b4);
      sink.add("coeffs.moduli_bounds", al(a, l), std::string(bounded ? "within" : "exceeded"),
               std::string("within"), 0.0, bounded);
      if (a >= 0.0) {
        const bool sharp = abs(t.a2) == t.bound_a2 && abs(t.a3) == t.bound_a3 && abs(t.a4) == t.bound_a4 &&
                           abs(t.b2) == t.bound_b2 && abs(t.b3) == t.bound_b3 && abs(t.b4) == t.bound_b4;
        sink.add("coeffs.bounds_attained", al(a, l), std::string(sharp ? "equal" : "strict"),
                 std::string("equal"), 0.0, sharp);
      }
    }
  }
}

void suite_shear(const VerifyConfig& cfg, CheckSink& sink) {
  for (double a : cfg.a_values) {
    for (double l : cfg.lambda_values) {
      const Params p = make_params(a, l, {cfg.rel_tol, 1e-13, 10000});
      PointSampler sampler(cfg.seed);
      double worst_identity = 0.0;
      double min_jacobian = INFINITY;
      double worst_series = 0.0;
      const auto series = hg_series(p, 64);
      for (int k = 0; k < cfg.random_points; ++k) {
        const Complex z = sampler.in_disk(0.95);
        const HarmonicValue v = eval_f(p, z);
        worst_identity = std::max(worst_identity, std::abs(v.h - v.g - koebe(a, z)));
        min_jacobian = std::min(min_jacobian, jacobian(p, z));
        const Complex zs = 0.5 / 0.95 * z;
        const HarmonicValue q = eval_f(p, zs);
        const HarmonicValue s = eval_series(series, zs);
        worst_series = std::max(worst_series, std::abs(q.f - s.f));
      }
      sink.at_most("shear.identity_h_minus_g_equals_ka", al(a, l), worst_identity, 0.0, 1e-9);
      sink.add("shear.jacobian_positive", al(a, l), min_jacobian, 0.0, 0.0, min_jacobian > 0.0);
      sink.at_most("shear.series_matches_quadrature", al(a, l), worst_series, 0.0, 1e-8);

      double worst_recurrence = 0.0;
      for (std::size_t n = 1; n < 64; ++n) {
        const double lhs = static_cast<double>(n + 1) * series.b_coeffs[n + 1];
        const double rhs = l * static_cast<double>(n) * series.a_coeffs[n];
        worst_recurrence = std::max(worst_recurrence, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
      }
      sink.at_most("shear.coefficient_recurrence", al(a, l), worst_recurrence, 0.0, 1e-12);
    }
  }
}

void suite_norms(const VerifyConfig& cfg, CheckSink& sink) {
  for (double a : cfg.a_values) {
    for (double l : cfg.lambda_values) {
      const Params p = make_params(a, l);
      PointSampler sampler(cfg.seed);
      double worst_pre = 0.0;
      double worst_sch = 0.0;
      for (int k = 0; k < cfg.random_points; ++k) {
        const Complex z = sampler.in_disk(0.95);
        const Operators ops = generic_operators(family_jet(p, z));
        const Complex pc = pre_schwarzian_closed(p, z);
        const Complex sc = schwarzian_closed(p, z);
        worst_pre = std::max(worst_pre, std::abs(ops.pre_schwarzian - pc) / std::max(1.0, std::abs(pc)));
        worst_sch = std::max(worst_sch, std::abs(ops.schwarzian - sc) / std::max(1.0, std::abs(sc)));
      }
      sink.at_most("norms.pre_schwarzian_matches_generic", al(a, l), worst_pre, 0.0, 1e-8);
      sink.at_most("norms.schwarzian_matches_generic", al(a, l), worst_sch, 0.0, 1e-8);

      const NormReport pre = norm_estimate(NormKind::PreSchwarzian, p);
      sink.at_most("norms.pre_schwarzian_within_bound", al(a, l), pre.estimate, pre.paper_bound, 1e-9);
      const NormReport sch = norm_estimate(NormKind::Schwarzian, p);
      sink.at_most("norms.schwarzian_within_bound", al(a, l), sch.estimate, sch.paper_bound, 1e-9);
    }
  }
}

void suite_growth(const VerifyConfig& cfg, CheckSink& sink) {
  for (double a : cfg.a_values) {
    if (std::abs(a) > 2.0) continue;
    for (double l : cfg.lambda_values) {
      const Params p = make_params(a, l, {cfg.rel_tol, 1e-13, 10000});
      for (double r : cfg.r_values) {
        const BoundsInterval g = growth_bounds(p, r);
        const BoundsInterval d = derivative_envelope(p, r);
        double min_f = INFINITY, max_f = 0.0, worst_err = 0.0;
        double min_hp = INFINITY, max_hp = 0.0;
        for (int k = 0; k < cfg.angles; ++k) {
          const Complex z = std::polar(r, 2.0 * std::numbers::pi * k / cfg.angles);
          const HarmonicValue v = eval_f(p, z);
          min_f = std::min(min_f, std::abs(v.f));
          max_f = std::max(max_f, std::abs(v.f));
          worst_err = std::max(worst_err, v.err);
          const double hp = std::abs(shear_derivatives(p, z).hp);
          min_hp = std::min(min_hp, hp);
          max_hp = std::max(max_hp, hp);
        }
        const double tol_lo = 10.0 * (g.lo_err + worst_err);
        const double tol_hi = 10.0 * (g.hi_err + worst_err);
        sink.add("growth.lower_bound", alr(a, l, r), min_f, g.lo, tol_lo, min_f >= g.lo - tol_lo);
        sink.at_most("growth.upper_bound", alr(a, l, r), max_f, g.hi, tol_hi);
        const double dtol = 1e-12 * max_hp;
        sink.add("derivative.lower_envelope", alr(a, l, r), min_hp, d.lo, dtol, min_hp >= d.lo - dtol);
        sink.at_most("derivative.upper_envelope", alr(a, l, r), max_hp, d.hi, dtol);
      }
    }
  }
}

double series_area(const TaylorPair<double>& pair, double r) {
  double sum = 0.0;
  for (std::size_t n = pair.a_coeffs.order(); n >= 1; --n) {
    const double an = pair.a_coeffs[n];
    const double bn = pair.b_coeffs[n];
    sum += static_cast<double>(n) * (an * an - bn * bn) * std::pow(r, 2.0 * static_cast<double>(n));
  }
  return std::numbers::pi * sum;
}

void suite_area(const VerifyConfig& cfg, CheckSink& sink) {
  for (double a : cfg.a_values) {
    if (std::abs(a) > 2.0) continue;
    for (double l : cfg.lambda_values) {
      const Params p = make_params(a, l, {cfg.rel_tol, 1e-13, 10000});
      const auto series = hg_series(p, 80);
      for (double r : cfg.r_values) {
        const BoundsInterval b = area_bounds(p, r);
        const AreaValue e = area_empirical(p, r);
        const double tol_lo = 10.0 * (b.lo_err + e.err);
        const double tol_hi = 10.0 * (b.hi_err + e.err);
        sink.add("area.lower_bound", alr(a, l, r), e.value, b.lo, tol_lo, e.value >= b.lo - tol_lo);
        sink.at_most("area.upper_bound", alr(a, l, r), e.value, b.hi, tol_hi);
        if (r <= 0.7) {
          const double oracle = series_area(series, r);
          const double rel = std::abs(e.value - oracle) / std::abs(oracle);
          sink.at_most("area.matches_series_oracle", alr(a, l, r), rel, 0.0, 1e-5);
        }
      }
    }
  }
}

void suite_univalence(const VerifyConfig& cfg, CheckSink& sink) {
  std::vector<double> as = cfg.a_values;
  as.insert(as.end(), cfg.nonunivalent_a.begin(), cfg.nonunivalent_a.end());
  for (double a : as) {
    for (double l : cfg.lambda_values) {
      const Params p = make_params(a, l);
      const UnivalenceReport rep = univalence_verdict(p);
      const bool expect_univalent = std::abs(a) <= 2.0;
      const std::string expected(to_string(expect_univalent ? Verdict::Univalent : Verdict::NotUnivalent));
      sink.add("univalence.verdict", al(a, l), std::string(to_string(rep.verdict)), expected, 0.0,
               to_string(rep.verdict) == expected && rep.witness.has_value() != expect_univalent);
      if (rep.witness) {
        sink.at_most("univalence.witness_image_gap", al(a, l), rep.witness->image_gap, 0.0, 1e-7);
        sink.at_most("univalence.koebe_witness_value", al(a, l), rep.witness->koebe_residual, 0.0, 1e-12);
      }
      const double r = cfg.scan_radius;
      const bool crossing_expected = !expect_univalent && r > std::tan(std::numbers::pi / (2.0 * std::abs(a)));
      if (!expect_univalent && !crossing_expected) continue;
      const ParamList params = {{"a", a}, {"lambda", l}, {"r", r}, {"samples", cfg.scan_samples}};
      try {
        const ScanResult scan = injectivity_scan(p, r, cfg.scan_samples);
        const std::string got = scan.passed ? "passed" : "crossing_found";
        const std::string want = crossing_expected ? "crossing_found" : "passed";
        sink.add("univalence.injectivity_scan", params, got, want, 0.0, got == want);
      } catch (const Error& e) {
        sink.add("univalence.injectivity_scan", params, std::string(e.what()), std::string("scan"), 0.0, false);
      }
    }
  }
}

void suite_hyp(const VerifyConfig& cfg, CheckSink& sink) {
  for (double a : cfg.a_values) {
    if (!closed_form_defined(a)) continue;
    PointSampler overlap(cfg.seed);
    double worst_overlap = 0.0;
    for (int k = 0; k < 64; ++k) {
      const double rho = 0.6 + 0.2 * overlap.uniform();
      // The Pfaff series needs Re x < 1/2; stay at Re x <= 0.3.
      const double phi = std::acos(std::min(1.0, 0.3 / rho));
      const double theta = phi + (2.0 * std::numbers::pi - 2.0 * phi) * overlap.uniform();
      const Complex x = std::polar(rho, theta);
      const Complex s = hyp_E_series(a, x);
      worst_overlap = std::max(worst_overlap, std::abs(s - hyp_E_pfaff(a, x)) / std::max(1.0, std::abs(s)));
    }
    sink.at_most("hyp.series_matches_pfaff", {{"a", a}}, worst_overlap, 0.0, 1e-9);

    for (double l : cfg.lambda_values) {
      const Params p = make_params(a, l, {1e-12, 1e-14, 10000});
      PointSampler sampler(cfg.seed);
      double worst = 0.0;
      double worst_identity = 0.0;
      const int points = std::min(cfg.random_points, 50);
      for (int k = 0; k < points; ++k) {
        const Complex z = sampler.in_disk(0.9);
        const HarmonicValue c = closed_form_hg(p, z);
        worst = std::max(worst, std::abs(c.f - eval_f(p, z).f));
        worst_identity = std::max(worst_identity, std::abs(c.h - c.g - koebe(a, z)));
      }
      sink.at_most("hyp.closed_form_matches_quadrature", al(a, l), worst, 0.0, 1e-6);
      sink.at_most("hyp.closed_form_shear_identity", al(a, l), worst_identity, 0.0, 1e-6);
    }
  }
}

ojson value_json(const CheckValue& v) {
  return std::visit([](const auto& x) { return ojson(x); }, v);
}

std::vector<double> read_list(const ojson& j, const char* key) {
  std::vector<double> out;
  if (!j[key].is_array()) throw Error(ErrorCode::ConfigError, std::string("'") + key + "' must be an array");
  for (const auto& v : j[key]) {
    if (!v.is_number()) throw Error(ErrorCode::ConfigError, std::string("'") + key + "' must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

std::string_view to_string(Suite s) noexcept {
  for (const auto& [suite, name] : kSuiteNames) {
    if (suite == s) return name;
  }
  return "?";
}

Suite parse_suite(std::string_view name) {
  for (const auto& [suite, n] : kSuiteNames) {
    if (n == name) return suite;
  }
  fail(ErrorCode::ConfigError, "unknown suite '" + std::string(name) + "'");
}

void VerifyConfig::validate() const {
  auto bad = [](const std::string& what) { fail(ErrorCode::ConfigError, what); };
  if (a_values.empty() || lambda_values.empty() || r_values.empty()) bad("grid lists must be non-empty");
  for (double a : a_values) {
    if (!std::isfinite(a)) bad("a values must be finite");
  }
  for (double a : nonunivalent_a) {
    if (!(std::abs(a) > 2.0)) bad("nonunivalent_a entries must satisfy |a| > 2");
  }
  for (double l : lambda_values) {
    if (!(l >= 0.0 && l < 1.0)) bad("lambda values must lie in [0,1)");
  }
  for (double r : r_values) {
    if (!(r > 0.0 && r < 1.0)) bad("r values must lie in (0,1)");
  }
  if (random_points < 1 || angles < 1) bad("random_points and angles must be positive");
  if (scan_samples < 256) bad("scan_samples must be >= 256");
  if (!(scan_radius > 0.0 && scan_radius < 1.0)) bad("scan_radius must lie in (0,1)");
  if (!(rel_tol > 0.0)) bad("rel_tol must be positive");
}

VerifyConfig load_verify_config(const std::string& json_text) {
  ojson j;
  try {
    j = ojson::parse(json_text);
  } catch (const std::exception& e) {
    fail(ErrorCode::ConfigError, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::ConfigError, "config must be a JSON object");
  static const char* const known[] = {"a",      "lambda",       "r",           "nonunivalent_a", "random_points",
                                      "angles", "scan_samples", "scan_radius", "seed",           "rel_tol"};
  for (const auto& item : j.items()) {
    if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return item.key() == k; }) ==
        std::end(known)) {
      fail(ErrorCode::ConfigError, "unknown config key '" + item.key() + "'");
    }
  }
  VerifyConfig cfg;
  try {
    if (j.contains("a")) cfg.a_values = read_list(j, "a");
    if (j.contains("lambda")) cfg.lambda_values = read_list(j, "lambda");
    if (j.contains("r")) cfg.r_values = read_list(j, "r");
    if (j.contains("nonunivalent_a")) cfg.nonunivalent_a = read_list(j, "nonunivalent_a");
    if (j.contains("random_points")) cfg.random_points = j.at("random_points").get<int>();
    if (j.contains("angles")) cfg.angles = j.at("angles").get<int>();
    if (j.contains("scan_samples")) cfg.scan_samples = j.at("scan_samples").get<int>();
    if (j.contains("scan_radius")) cfg.scan_radius = j.at("scan_radius").get<double>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("rel_tol")) cfg.rel_tol = j.at("rel_tol").get<double>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ConfigError, e.what());
  }
  cfg.validate();
  return cfg;
}

bool VerifyReport::all_passed() const noexcept { return failures() == 0; }

std::size_t VerifyReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

VerifyReport run_verify(Suite suite, const VerifyConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.suite = std::string(to_string(suite));
  report.grid = config;
  CheckSink sink{report.checks};
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Coeffs) suite_coeffs(config, sink);
  if (all || suite == Suite::Shear) suite_shear(config, sink);
  if (all || suite == Suite::Norms) suite_norms(config, sink);
  if (all || suite == Suite::Growth) suite_growth(config, sink);
  if (all || suite == Suite::Area) suite_area(config, sink);
  if (all || suite == Suite::Univalence) suite_univalence(config, sink);
  if (all || suite == Suite::Hyp) suite_hyp(config, sink);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string to_json(const VerifyReport& report, int indent) {
  ojson grid;
  grid["a"] = report.grid.a_values;
  grid["lambda"] = report.grid.lambda_values;
  grid["r"] = report.grid.r_values;
  grid["nonunivalent_a"] = report.grid.nonunivalent_a;
  grid["random_points"] = report.grid.random_points;
  grid["angles"] = report.grid.angles;
  grid["scan_samples"] = report.grid.scan_samples;
  grid["scan_radius"] = report.grid.scan_radius;
  grid["seed"] = report.grid.seed;
  grid["rel_tol"] = report.grid.rel_tol;

  ojson checks = ojson::array();
  for (const Check& c : report.checks) {
    ojson params = ojson::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    ojson item;
    item["name"] = c.name;
    item["params"] = std::move(params);
    item["measured"] = value_json(c.measured);
    item["bound_or_expected"] = value_json(c.bound_or_expected);
    item["tol"] = c.tol;
    item["pass"] = c.pass;
    checks.push_back(std::move(item));
  }
  ojson out;
  out["suite"] = report.suite;
  out["grid"] = std::move(grid);
  out["checks"] = std::move(checks);
  out["elapsed_ms"] = report.elapsed_ms;
  return out.dump(indent);
}

std::string to_text(const VerifyReport& report) {
  std::ostringstream os;
  auto show = [](const CheckValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, double>) {
            return format_real(x, 10);
          } else {
            return x;
          }
        },
        v);
  };
  for (const Check& c : report.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << " {";
    bool first = true;
    for (const auto& [k, v] : c.params) {
      os << (first ? "" : ", ") << k << "=" << format_real(v, 10);
      first = false;
    }
    os << "} measured=" << show(c.measured) << " expected=" << show(c.bound_or_expected)
       << " tol=" << format_real(c.tol, 6) << "\n";
  }
  os << report.suite << ": " << (report.checks.size() - report.failures()) << "/" << report.checks.size()
     << " checks passed in " << format_real(std::round(report.elapsed_ms), 12) << " ms\n";
  return os.str();
}

}  // namespace koebe
