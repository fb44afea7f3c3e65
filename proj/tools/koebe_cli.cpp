// koebe: command-line front end for the generalized harmonic Koebe family.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage/config error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "koebe/bounds.hpp"
#include "koebe/coeffs.hpp"
#include "koebe/complex.hpp"
#include "koebe/differential.hpp"
#include "koebe/errors.hpp"
#include "koebe/hyp2f1.hpp"
#include "koebe/render.hpp"
#include "koebe/shear.hpp"
#include "koebe/univalence.hpp"
#include "koebe/verify.hpp"

namespace {

using koebe::Complex;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct SharedOptions {
  std::string a = "2";
  std::string lambda = "0";
  std::string z = "0.5+0i";
  double r = 0.5;
  int order = 8;
  bool exact = false;
  double tol = 1e-10;
  bool json = false;
  std::string out;
};

void add_shared(CLI::App* cmd, SharedOptions& o) {
  cmd->add_option("--a", o.a, "Koebe exponent a (decimal or p/q)");
  cmd->add_option("--lambda", o.lambda, "dilatation parameter lambda in [0,1) (decimal or p/q)");
  cmd->add_option("--tol", o.tol, "relative quadrature tolerance")->check(CLI::PositiveNumber);
  cmd->add_flag("--json", o.json, "emit JSON");
  cmd->add_option("-o", o.out, "write output to this path");
}

double real_of(const std::string& text) { return koebe::to_double(koebe::parse_rational(text)); }

koebe::Params params_of(const SharedOptions& o) {
  koebe::QuadSpec q;
  q.rel_tol = o.tol;
  return koebe::make_params(real_of(o.a), real_of(o.lambda), q);
}

std::string cplx(Complex z) { return koebe::format_complex(z); }

void emit(const SharedOptions& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    koebe::write_text_file(o.out, text);
  }
}

int cmd_eval(const SharedOptions& o, const std::string& method) {
  const koebe::Params p = params_of(o);
  const Complex z = koebe::parse_complex(o.z);
  koebe::HarmonicValue v;
  if (method == "quad") {
    v = koebe::eval_f(p, z);
  } else if (method == "series") {
    v = koebe::eval_series(koebe::hg_series(p, static_cast<std::size_t>(o.order)), z);
  } else {
    v = koebe::closed_form_hg(p, z);
  }
  ojson j;
  j["a"] = p.a;
  j["lambda"] = p.lambda;
  j["z"] = cplx(z);
  j["method"] = method;
  j["h"] = cplx(v.h);
  j["g"] = cplx(v.g);
  j["f"] = cplx(v.f);
  j["err"] = v.err;
  j["converged"] = v.converged;
  j["jacobian"] = koebe::jacobian(p, z);
  if (o.json) {
    emit(o, j.dump(2));
  } else {
    std::ostringstream os;
    for (const auto& item : j.items()) os << item.key() << " = " << (item.value().is_string() ? item.value().get<std::string>() : item.value().dump()) << "\n";
    emit(o, os.str());
  }
  return kExitOk;
}

template <class T, class Fmt>
ojson table_json(const koebe::CoeffTable<T>& t, const Fmt& fmt) {
  ojson j;
  j["a2"] = fmt(t.a2);
  j["a3"] = fmt(t.a3);
  j["a4"] = fmt(t.a4);
  j["b2"] = fmt(t.b2);
  j["b3"] = fmt(t.b3);
  j["b4"] = fmt(t.b4);
  ojson b;
  b["a2"] = fmt(t.bound_a2);
  b["a3"] = fmt(t.bound_a3);
  b["a4"] = fmt(t.bound_a4);
  b["b2"] = fmt(t.bound_b2);
  b["b3"] = fmt(t.bound_b3);
  b["b4"] = fmt(t.bound_b4);
  j["bounds"] = std::move(b);
  return j;
}

int cmd_coeffs(const SharedOptions& o) {
  const auto n = static_cast<std::size_t>(o.order);
  ojson j;
  if (o.exact) {
    const koebe::Rational a = koebe::parse_rational(o.a);
    const koebe::Rational l = koebe::parse_rational(o.lambda);
    auto fmt = [](const koebe::Rational& q) { return koebe::to_string(q); };
    const auto series = koebe::hg_series<koebe::Rational>(a, l, n);
    j["a"] = fmt(a);
    j["lambda"] = fmt(l);
    j["mode"] = "exact";
    j["closed_forms"] = table_json(koebe::coeff_closed_forms(a, l), fmt);
    ojson an = ojson::array(), bn = ojson::array();
    for (std::size_t k = 0; k <= n; ++k) {
      an.push_back(fmt(series.a_coeffs[k]));
      bn.push_back(fmt(series.b_coeffs[k]));
    }
    j["a_n"] = std::move(an);
    j["b_n"] = std::move(bn);
  } else {
    const double a = real_of(o.a);
    const double l = real_of(o.lambda);
    auto fmt = [](double v) { return v; };
    const auto series = koebe::hg_series<double>(a, l, n);
    j["a"] = a;
    j["lambda"] = l;
    j["mode"] = "floating";
    j["closed_forms"] = table_json(koebe::coeff_closed_forms(a, l), fmt);
    j["a_n"] = series.a_coeffs.coeffs();
    j["b_n"] = series.b_coeffs.coeffs();
  }
  if (o.json) {
    emit(o, j.dump(2));
  } else {
    std::ostringstream os;
    os << "a = " << j["a"].dump() << ", lambda = " << j["lambda"].dump() << " (" << j["mode"].get<std::string>()
       << ")\n";
    for (const char* key : {"a2", "a3", "a4", "b2", "b3", "b4"}) {
      os << "  " << key << " = " << j["closed_forms"][key].dump() << "   |" << key
         << "| <= " << j["closed_forms"]["bounds"][key].dump() << "\n";
    }
    os << "  a_n = " << j["a_n"].dump() << "\n  b_n = " << j["b_n"].dump() << "\n";
    emit(o, os.str());
  }
  return kExitOk;
}

int cmd_norms(const SharedOptions& o, double r_max) {
  const koebe::Params p = params_of(o);
  ojson j = ojson::array();
  std::ostringstream os;
  for (auto kind : {koebe::NormKind::PreSchwarzian, koebe::NormKind::Schwarzian}) {
    const koebe::NormReport rep = koebe::norm_estimate(kind, p, r_max);
    ojson item;
    item["kind"] = std::string(koebe::to_string(kind));
    item["a"] = p.a;
    item["lambda"] = p.lambda;
    item["estimate"] = rep.estimate;
    item["argmax"] = cplx(rep.argmax);
    item["paper_bound"] = rep.paper_bound;
    item["r_max"] = rep.r_max;
    j.push_back(item);
    os << koebe::to_string(kind) << ": estimate " << koebe::format_real(rep.estimate, 12) << " at "
       << koebe::format_complex(rep.argmax, 8) << ", bound " << koebe::format_real(rep.paper_bound, 12) << "\n";
  }
  emit(o, o.json ? j.dump(2) : os.str());
  return kExitOk;
}

ojson interval_json(const koebe::BoundsInterval& b) {
  ojson j;
  j["lo"] = b.lo;
  j["hi"] = b.hi;
  j["lo_err"] = b.lo_err;
  j["hi_err"] = b.hi_err;
  j["regime"] = std::string(koebe::to_string(b.regime));
  j["converged"] = b.converged;
  return j;
}

int cmd_growth(const SharedOptions& o) {
  const koebe::Params p = params_of(o);
  ojson j;
  j["a"] = p.a;
  j["lambda"] = p.lambda;
  j["r"] = o.r;
  j["growth"] = interval_json(koebe::growth_bounds(p, o.r));
  j["derivative"] = interval_json(koebe::derivative_envelope(p, o.r));
  if (o.json) {
    emit(o, j.dump(2));
  } else {
    std::ostringstream os;
    os << "growth     [" << j["growth"]["lo"].dump() << ", " << j["growth"]["hi"].dump() << "] ("
       << j["growth"]["regime"].get<std::string>() << ")\n";
    os << "derivative [" << j["derivative"]["lo"].dump() << ", " << j["derivative"]["hi"].dump() << "]\n";
    emit(o, os.str());
  }
  return kExitOk;
}

int cmd_area(const SharedOptions& o) {
  const koebe::Params p = params_of(o);
  const koebe::AreaValue e = koebe::area_empirical(p, o.r);
  ojson j;
  j["a"] = p.a;
  j["lambda"] = p.lambda;
  j["r"] = o.r;
  j["bounds"] = interval_json(koebe::area_bounds(p, o.r));
  j["empirical"] = e.value;
  j["empirical_err"] = e.err;
  if (o.json) {
    emit(o, j.dump(2));
  } else {
    std::ostringstream os;
    os << "area bounds [" << j["bounds"]["lo"].dump() << ", " << j["bounds"]["hi"].dump() << "]\n";
    os << "area        " << koebe::format_real(e.value, 14) << " (+- " << koebe::format_real(e.err, 3) << ")\n";
    emit(o, os.str());
  }
  return kExitOk;
}

int cmd_univalence(const SharedOptions& o, std::optional<double> scan_r, int samples) {
  const koebe::Params p = params_of(o);
  const koebe::UnivalenceReport rep = koebe::univalence_verdict(p);
  ojson j;
  j["a"] = p.a;
  j["lambda"] = p.lambda;
  j["verdict"] = std::string(koebe::to_string(rep.verdict));
  if (rep.witness) {
    j["witness"] = {{"z1", cplx(rep.witness->z1)},
                    {"z2", cplx(rep.witness->z2)},
                    {"image_gap", rep.witness->image_gap},
                    {"koebe_residual", rep.witness->koebe_residual}};
  } else {
    j["witness"] = nullptr;
  }
  if (scan_r) {
    const koebe::ScanResult scan = koebe::injectivity_scan(p, *scan_r, samples);
    ojson s;
    s["r"] = scan.r;
    s["samples"] = scan.samples;
    s["status"] = scan.passed ? "passed" : "crossing_found";
    if (scan.crossing) s["crossing"] = {scan.crossing->theta1, scan.crossing->theta2};
    j["scan"] = std::move(s);
  }
  if (o.json) {
    emit(o, j.dump(2));
    return kExitOk;
  }
  std::ostringstream os;
  os << "verdict: " << j["verdict"].get<std::string>() << "\n";
  if (rep.witness) {
    os << "witness: f(" << cplx(rep.witness->z1) << ") = f(" << cplx(rep.witness->z2) << "), gap "
       << koebe::format_real(rep.witness->image_gap, 3) << "\n";
  }
  if (j.contains("scan")) {
    os << "scan r=" << j["scan"]["r"].dump() << " n=" << j["scan"]["samples"].dump() << ": "
       << j["scan"]["status"].get<std::string>() << "\n";
  }
  emit(o, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized harmonic quasiconformal Koebe functions"};
  app.require_subcommand(1);
  SharedOptions o;
  std::string method = "quad";
  std::optional<double> scan_r;
  int samples = 4096;
  std::string preset;
  koebe::MeshSpec mesh;
  std::string suite_name = "all";
  std::string config_path;
  double r_max = koebe::kDefaultNormRadius;

  auto* eval = app.add_subcommand("eval", "evaluate h, g and f at a point");
  add_shared(eval, o);
  eval->add_option("--z", o.z, "point in the unit disk, e.g. 0.3+0.4i");
  eval->add_option("--method", method, "quad | series | closed")->check(CLI::IsMember({"quad", "series", "closed"}));
  eval->add_option("--order", o.order, "series truncation order")->check(CLI::PositiveNumber);

  auto* coeffs = app.add_subcommand("coeffs", "closed-form coefficients, bounds and series");
  add_shared(coeffs, o);
  coeffs->add_option("--order", o.order, "series truncation order")->check(CLI::PositiveNumber);
  coeffs->add_flag("--exact", o.exact, "exact rational arithmetic");

  auto* norms = app.add_subcommand("norms", "pre-Schwarzian and Schwarzian norm estimates");
  add_shared(norms, o);
  norms->add_option("--r", r_max, "search radius r_max < 1");

  auto* growth = app.add_subcommand("growth", "growth and derivative bounds on |z| = r");
  add_shared(growth, o);
  growth->add_option("--r", o.r, "radius in (0,1)");

  auto* area = app.add_subcommand("area", "area bounds and measured area of f(|z| < r)");
  add_shared(area, o);
  area->add_option("--r", o.r, "radius in (0,1)");

  auto* univ = app.add_subcommand("univalence", "univalence verdict, witness and optional scan");
  add_shared(univ, o);
  univ->add_option("--r", scan_r, "run an injectivity scan on |z| = r");
  univ->add_option("--samples", samples, "scan samples (>= 256)");

  auto* render = app.add_subcommand("render", "SVG image of a polar mesh");
  add_shared(render, o);
  render->add_option("--preset", preset, "fig1..fig6");
  render->add_option("--circles", mesh.n_circles, "concentric circles");
  render->add_option("--rays", mesh.n_rays, "rays");
  render->add_option("--r", mesh.r_max, "outer mesh radius");
  render->add_option("--samples", mesh.samples_per_curve, "vertices per curve");

  auto* verify = app.add_subcommand("verify", "run invariant suites");
  add_shared(verify, o);
  verify->add_option("--suite", suite_name, "coeffs|shear|norms|growth|area|univalence|hyp|all");
  verify->add_option("--config", config_path, "JSON grid configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(o, method);
    if (*coeffs) return cmd_coeffs(o);
    if (*norms) return cmd_norms(o, r_max);
    if (*growth) return cmd_growth(o);
    if (*area) return cmd_area(o);
    if (*univ) return cmd_univalence(o, scan_r, samples);
    if (*render) {
      std::string svg;
      koebe::QuadSpec q;
      q.rel_tol = o.tol;
      if (!preset.empty()) {
        svg = koebe::render_preset(koebe::find_preset(preset), mesh, q);
      } else {
        svg = koebe::render_disk_image(params_of(o), mesh);
      }
      emit(o, svg);
      return kExitOk;
    }
    if (*verify) {
      koebe::VerifyConfig cfg;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw koebe::Error(koebe::ErrorCode::ConfigError, "cannot read '" + config_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        cfg = koebe::load_verify_config(buf.str());
      }
      if (verify->count("--a") > 0) {
        const double a = real_of(o.a);
        cfg.a_values = {a};
        cfg.nonunivalent_a.clear();
      }
      if (verify->count("--lambda") > 0) cfg.lambda_values = {real_of(o.lambda)};
      cfg.rel_tol = o.tol;
      const koebe::VerifyReport report = koebe::run_verify(koebe::parse_suite(suite_name), cfg);
      emit(o, o.json ? koebe::to_json(report) : koebe::to_text(report));
      return report.all_passed() ? kExitOk : kExitCheckFailed;
    }
  } catch (const koebe::Error& e) {
    std::cerr << "koebe: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
