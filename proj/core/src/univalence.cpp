#include "koebe/univalence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "koebe/errors.hpp"

namespace koebe {

std::string_view to_string(Verdict v) noexcept {
  return v == Verdict::Univalent ? "univalent" : "not_univalent";
}

Complex non_univalence_witness_point(double a) {
  if (!(std::abs(a) > 2.0)) fail(ErrorCode::InvalidArgument, "witness exists only for |a| > 2");
  return {0.0, std::tan(std::numbers::pi / (2.0 * std::abs(a)))};
}

UnivalenceReport univalence_verdict(const Params& p) {
  p.validate();
  UnivalenceReport report;
  if (std::abs(p.a) <= 2.0) {
    report.verdict = Verdict::Univalent;
    return report;
  }
  report.verdict = Verdict::NotUnivalent;
  Witness w;
  w.z1 = non_univalence_witness_point(p.a);
  w.z2 = std::conj(w.z1);
  w.image_gap = std::abs(eval_f(p, w.z1).f - eval_f(p, w.z2).f);
  w.koebe_residual = std::abs(koebe(p.a, w.z1) + 1.0 / p.a);
  report.witness = w;
  return report;
}

namespace {

using Wide = long double;

int orientation(Complex p, Complex q, Complex r) {
  const Wide v = (static_cast<Wide>(q.real()) - p.real()) * (static_cast<Wide>(r.imag()) - p.imag()) -
                 (static_cast<Wide>(q.imag()) - p.imag()) * (static_cast<Wide>(r.real()) - p.real());
  return (v > 0) - (v < 0);
}

bool on_segment(Complex p, Complex q, Complex r) {
  return std::min(p.real(), q.real()) <= r.real() && r.real() <= std::max(p.real(), q.real()) &&
         std::min(p.imag(), q.imag()) <= r.imag() && r.imag() <= std::max(p.imag(), q.imag());
}

bool segments_meet(Complex p1, Complex p2, Complex q1, Complex q2) {
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

}  // namespace

std::optional<Crossing> find_self_intersection(std::span<const Complex> curve) {
  const std::size_t n = curve.size();
  if (n < 4) return std::nullopt;
  double xmin = curve[0].real(), xmax = xmin, ymin = curve[0].imag(), ymax = ymin;
  for (Complex c : curve) {
    xmin = std::min(xmin, c.real());
    xmax = std::max(xmax, c.real());
    ymin = std::min(ymin, c.imag());
    ymax = std::max(ymax, c.imag());
  }
  const std::size_t side = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(n))));
  const double wx = std::max(xmax - xmin, 1e-300) / static_cast<double>(side);
  const double wy = std::max(ymax - ymin, 1e-300) / static_cast<double>(side);
  auto cell_x = [&](double x) { return std::min(side - 1, static_cast<std::size_t>(std::max(0.0, (x - xmin) / wx))); };
  auto cell_y = [&](double y) { return std::min(side - 1, static_cast<std::size_t>(std::max(0.0, (y - ymin) / wy))); };

  std::vector<std::vector<std::size_t>> cells(side * side);
  for (std::size_t s = 0; s < n; ++s) {
    const Complex a = curve[s];
    const Complex b = curve[(s + 1) % n];
    const std::size_t x0 = cell_x(std::min(a.real(), b.real())), x1 = cell_x(std::max(a.real(), b.real()));
    const std::size_t y0 = cell_y(std::min(a.imag(), b.imag())), y1 = cell_y(std::max(a.imag(), b.imag()));
    for (std::size_t ix = x0; ix <= x1; ++ix) {
      for (std::size_t iy = y0; iy <= y1; ++iy) cells[ix * side + iy].push_back(s);
    }
  }

  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (const auto& cell : cells) {
    for (std::size_t u = 0; u < cell.size(); ++u) {
      for (std::size_t v = u + 1; v < cell.size(); ++v) {
        const std::size_t i = std::min(cell[u], cell[v]);
        const std::size_t j = std::max(cell[u], cell[v]);
        if (j == i + 1 || (i == 0 && j == n - 1)) continue;
        if (best && std::pair(i, j) >= *best) continue;
        if (segments_meet(curve[i], curve[(i + 1) % n], curve[j], curve[(j + 1) % n])) best = std::pair(i, j);
      }
    }
  }
  if (!best) return std::nullopt;
  const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(n);
  return Crossing{dtheta * static_cast<double>(best->first), dtheta * static_cast<double>(best->second), best->first,
                  best->second};
}

ScanResult injectivity_scan(const Params& p, double r, int n, const ScanOptions& opts) {
  p.validate();
  if (!(r > 0.0 && r < 1.0)) fail(ErrorCode::InvalidArgument, "injectivity_scan: r must lie in (0,1)");
  if (n < 256) fail(ErrorCode::InvalidArgument, "injectivity_scan: need at least 256 samples");

  std::vector<Complex> image(static_cast<std::size_t>(n));
  const double dtheta = 2.0 * std::numbers::pi / n;
  for (int k = 0; k < n; ++k) image[static_cast<std::size_t>(k)] = eval_f(p, std::polar(r, k * dtheta)).f;

  double xmin = image[0].real(), xmax = xmin, ymin = image[0].imag(), ymax = ymin;
  for (Complex c : image) {
    xmin = std::min(xmin, c.real());
    xmax = std::max(xmax, c.real());
    ymin = std::min(ymin, c.imag());
    ymax = std::max(ymax, c.imag());
  }
  const double diagonal = std::hypot(xmax - xmin, ymax - ymin);
  double max_gap = 0.0;
  for (std::size_t k = 0; k < image.size(); ++k) {
    max_gap = std::max(max_gap, std::abs(image[(k + 1) % image.size()] - image[k]));
  }
  if (max_gap > opts.max_gap_fraction * diagonal) {
    fail(ErrorCode::ResolutionInsufficient, "image samples too sparse: gap " + format_real(max_gap, 6) +
                                                " vs diagonal " + format_real(diagonal, 6));
  }

  ScanResult result;
  result.r = r;
  result.samples = n;
  result.crossing = find_self_intersection(image);
  result.passed = !result.crossing.has_value();
  return result;
}

ChdResult chd_check(std::span<const Complex> curve) {
  const std::size_t n = curve.size();
  if (n < 64) fail(ErrorCode::InvalidArgument, "chd_check needs at least 64 vertices");
  std::vector<double> ys;
  ys.reserve(n);
  for (Complex c : curve) ys.push_back(c.imag());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  if (ys.size() < 2) fail(ErrorCode::DegenerateCurve, "curve has zero vertical extent");

  ChdResult result;
  for (std::size_t k = 0; k + 1 < ys.size(); ++k) {
    const double level = 0.5 * (ys[k] + ys[k + 1]);
    int crossings = 0;
    bool prev_above = curve[n - 1].imag() > level;
    for (std::size_t v = 0; v < n; ++v) {
      const bool above = curve[v].imag() > level;
      if (above != prev_above) ++crossings;
      prev_above = above;
    }
    if (crossings > result.max_crossings) result.max_crossings = crossings;
    if (crossings > 2 && !result.violation_level) {
      result.violation_level = level;
      result.convex_horizontal = false;
    }
  }
  return result;
}

}  // namespace koebe
