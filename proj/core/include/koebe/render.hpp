#pragma once

// Polar-mesh images of the unit disk as SVG 1.1 polylines.

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "koebe/shear.hpp"

namespace koebe {

struct MeshSpec {
  int n_circles = 8;
  int n_rays = 16;
  double r_max = 0.95;
  int samples_per_curve = 256;

  void validate() const;
};

struct FigurePreset {
  std::string name;  // fig1 .. fig6
  double a = 0.0;
  double lambda = 0.0;
  bool harmonic_koebe = false;  // fig5 uses K rather than f_{a,lambda}
  std::string caption;
};

const std::vector<FigurePreset>& figure_presets();
// Throws InvalidArgument for an unknown name.
const FigurePreset& find_preset(std::string_view name);

struct MeshImage {
  std::vector<std::vector<Complex>> circles;
  std::vector<std::vector<Complex>> rays;
  int unconverged = 0;  // vertices whose quadrature hit the subdivision cap
};

using HarmonicMap = std::function<HarmonicValue(Complex)>;

// Maps concentric circles r_k = r_max k / n_circles (k = 1..n) and rays from
// 0 to r_max through `map`.
MeshImage map_mesh(const HarmonicMap& map, const MeshSpec& mesh);
MeshImage map_mesh(const Params& p, const MeshSpec& mesh);
MeshImage map_mesh(const FigurePreset& preset, const MeshSpec& mesh, const QuadSpec& quad = {});

// Deterministic SVG text. The viewBox is the image bounding box plus a 5%
// margin; the y axis is flipped so the picture has the usual orientation.
std::string to_svg(const MeshImage& image, std::string_view title);

std::string render_disk_image(const Params& p, const MeshSpec& mesh);
std::string render_preset(const FigurePreset& preset, const MeshSpec& mesh, const QuadSpec& quad = {});

// Writes text to path; throws IoError.
void write_text_file(const std::string& path, std::string_view text);

}  // namespace koebe
