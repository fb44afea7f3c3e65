#include "koebe/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "koebe/errors.hpp"

namespace koebe {

void MeshSpec::validate() const {
  if (n_circles < 4 || n_rays < 8 || samples_per_curve < 64 || !(r_max > 0.0 && r_max < 1.0)) {
    fail(ErrorCode::InvalidArgument,
         "mesh needs n_circles >= 4, n_rays >= 8, samples_per_curve >= 64 and r_max in (0,1)");
  }
}

const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> presets = {
      {"fig1", 0.0, 0.0, false, "f_{0,0}"},
      {"fig2", 0.0, 0.5, false, "f_{0,1/2}"},
      {"fig3", 2.0, 0.0, false, "f_{2,0}"},
      {"fig4", 2.0, 0.5, false, "f_{2,1/2}"},
      {"fig5", 2.0, 1.0, true, "harmonic Koebe K"},
      {"fig6", 3.0, 0.5, false, "f_{3,1/2}"},
  };
  return presets;
}

const FigurePreset& find_preset(std::string_view name) {
  for (const auto& p : figure_presets()) {
    if (p.name == name) return p;
  }
  fail(ErrorCode::InvalidArgument, "unknown preset '" + std::string(name) + "' (expected fig1..fig6)");
}

MeshImage map_mesh(const HarmonicMap& map, const MeshSpec& mesh) {
  mesh.validate();
  MeshImage image;
  const int m = mesh.samples_per_curve;
  auto push = [&](std::vector<Complex>& line, Complex z) {
    const HarmonicValue v = map(z);
    if (!v.converged) ++image.unconverged;
    line.push_back(v.f);
  };
  for (int k = 1; k <= mesh.n_circles; ++k) {
    const double r = mesh.r_max * k / mesh.n_circles;
    std::vector<Complex> line;
    line.reserve(static_cast<std::size_t>(m) + 1);
    for (int s = 0; s <= m; ++s) push(line, std::polar(r, 2.0 * std::numbers::pi * s / m));
    image.circles.push_back(std::move(line));
  }
  for (int j = 0; j < mesh.n_rays; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / mesh.n_rays;
    std::vector<Complex> line;
    line.reserve(static_cast<std::size_t>(m) + 1);
    for (int s = 0; s <= m; ++s) push(line, std::polar(mesh.r_max * s / m, theta));
    image.rays.push_back(std::move(line));
  }
  return image;
}

MeshImage map_mesh(const Params& p, const MeshSpec& mesh) {
  p.validate();
  return map_mesh([&](Complex z) { return eval_f(p, z); }, mesh);
}

MeshImage map_mesh(const FigurePreset& preset, const MeshSpec& mesh, const QuadSpec& quad) {
  if (preset.harmonic_koebe) return map_mesh([](Complex z) { return harmonic_koebe_eval(z); }, mesh);
  return map_mesh(make_params(preset.a, preset.lambda, quad), mesh);
}

namespace {

std::string num(double v) { return format_real(v, 9); }

void append_polyline(std::string& out, const std::vector<Complex>& line, std::string_view stroke) {
  out += "  <polyline fill=\"none\" stroke=\"";
  out += stroke;
  out += "\" points=\"";
  bool first = true;
  for (Complex w : line) {
    if (!first) out += ' ';
    first = false;
    out += num(w.real());
    out += ',';
    out += num(-w.imag());
  }
  out += "\"/>\n";
}

}  // namespace

std::string to_svg(const MeshImage& image, std::string_view title) {
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  int non_finite = 0;
  auto scan = [&](const std::vector<std::vector<Complex>>& lines) {
    for (const auto& line : lines) {
      for (Complex w : line) {
        if (!is_finite(w)) {
          ++non_finite;
          continue;
        }
        xmin = std::min(xmin, w.real());
        xmax = std::max(xmax, w.real());
        ymin = std::min(ymin, -w.imag());
        ymax = std::max(ymax, -w.imag());
      }
    }
  };
  scan(image.circles);
  scan(image.rays);
  if (non_finite > 0) fail(ErrorCode::DomainError, "mesh image has non-finite vertices");
  if (!(xmin <= xmax)) xmin = xmax = ymin = ymax = 0.0;

  const double extent = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double margin = 0.05 * extent;
  const double vx = xmin - margin;
  const double vy = ymin - margin;
  const double vw = (xmax - xmin) + 2.0 * margin;
  const double vh = (ymax - ymin) + 2.0 * margin;
  const double stroke_width = 0.002 * extent;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" ";
  out += "preserveAspectRatio=\"xMidYMid meet\" viewBox=\"" + num(vx) + " " + num(vy) + " " + num(vw) + " " +
         num(vh) + "\">\n";
  out += "  <title>";
  out += title;
  out += "</title>\n";
  if (image.unconverged > 0) {
    out += "  <!-- quadrature did not converge at " + std::to_string(image.unconverged) + " vertices -->\n";
  }
  out += "  <g stroke-width=\"" + num(stroke_width) + "\" stroke-linejoin=\"round\">\n";
  for (const auto& line : image.circles) append_polyline(out, line, "#1f4e9c");
  for (const auto& line : image.rays) append_polyline(out, line, "#8c2d19");
  out += "  </g>\n</svg>\n";
  return out;
}

std::string render_disk_image(const Params& p, const MeshSpec& mesh) {
  return to_svg(map_mesh(p, mesh), "f_{" + format_real(p.a) + "," + format_real(p.lambda) + "}");
}

std::string render_preset(const FigurePreset& preset, const MeshSpec& mesh, const QuadSpec& quad) {
  return to_svg(map_mesh(preset, mesh, quad), preset.name + ": " + preset.caption);
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) fail(ErrorCode::IoError, "write to '" + path + "' failed");
}

}  // namespace koebe
