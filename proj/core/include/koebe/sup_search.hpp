#pragma once

#include <functional>

#include "koebe/complex.hpp"

namespace koebe {

struct SupSearchSpec {
  int radial_nodes = 256;
  int angular_nodes = 512;
  int refine_rounds = 6;
  // Number of best coarse nodes that seed local refinement.
  int seeds = 8;

  void validate() const;
};

struct SupResult {
  double sup = 0.0;
  Complex argmax{};
};

// Estimates sup_{|z| <= r_max} |F(z)| (1 - |z|^2)^power.
//
// A coarse polar grid, uniform in hyperbolic radius and including r = 0 and
// r = r_max, is followed by pattern refinement around the best nodes. The
// result is the largest value actually evaluated, so it never overshoots the
// true supremum; it can undershoot when a narrow peak falls between nodes.
// Reductions run in index order, so output is reproducible bit for bit.
SupResult weighted_sup(const std::function<Complex(Complex)>& f, int power, double r_max,
                       const SupSearchSpec& spec = {});

}  // namespace koebe
