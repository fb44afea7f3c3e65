#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "koebe/shear.hpp"

namespace koebe {

enum class Verdict { Univalent, NotUnivalent };
std::string_view to_string(Verdict v) noexcept;

// Two distinct points with the same image.
struct Witness {
  Complex z1;
  Complex z2;
  double image_gap = 0.0;      // |f(z1) - f(z2)| as evaluated
  double koebe_residual = 0.0;  // |k_a(z1) + 1/a|
};

struct Crossing {
  // Curve parameters (angles in [0, 2 pi)) of the two crossing segments' start points.
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::size_t segment1 = 0;
  std::size_t segment2 = 0;
};

struct ScanResult {
  bool passed = true;
  std::optional<Crossing> crossing;
  double r = 0.0;
  int samples = 0;
};

struct UnivalenceReport {
  Verdict verdict = Verdict::Univalent;
  std::optional<Witness> witness;
  std::optional<ScanResult> scan;
};

// Univalent iff -2 <= a <= 2. For |a| > 2 the witness is z1 = i tan(pi/(2|a|)),
// z2 = conj(z1), where (1 + z1)/(1 - z1) = e^{i pi/|a|} and k_a(z1) = -1/a.
UnivalenceReport univalence_verdict(const Params& p);

Complex non_univalence_witness_point(double a);

struct ScanOptions {
  // ResolutionInsufficient when two consecutive image samples are farther
  // apart than this fraction of the curve's bounding-box diagonal.
  double max_gap_fraction = 0.25;
};

// Samples f on |z| = r at n equally spaced angles and tests the closed image
// polyline for self-intersections. Requires 0 < r < 1 and n >= 256.
ScanResult injectivity_scan(const Params& p, double r, int n, const ScanOptions& opts = {});

// Self-intersection test on a closed polyline (last vertex joins the first).
// Returns the crossing with the lexicographically smallest segment pair.
std::optional<Crossing> find_self_intersection(std::span<const Complex> closed_curve);

struct ChdResult {
  bool convex_horizontal = true;
  std::optional<double> violation_level;
  int max_crossings = 0;
};

// Convexity in the horizontal direction of the region bounded by a closed
// polyline: every horizontal line may cross the boundary at most twice.
// Levels are midpoints between consecutive distinct vertex ordinates, and
// crossings are strict sign changes of Im(gamma) - y, so tangencies do not
// count. Throws InvalidArgument below 64 vertices and DegenerateCurve when
// the curve has no vertical extent.
ChdResult chd_check(std::span<const Complex> closed_curve);

}  // namespace koebe
