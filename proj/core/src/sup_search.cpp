#include "koebe/sup_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "koebe/errors.hpp"

namespace koebe {

void SupSearchSpec::validate() const {
  if (radial_nodes < 2 || angular_nodes < 4 || refine_rounds < 0 || seeds < 1) {
    fail(ErrorCode::InvalidArgument, "sup search grid is too small");
  }
}

namespace {

constexpr double kStepFloor = 1e-9;
constexpr int kMaxRounds = 40;

struct Node {
  double r;
  double theta;
  double value;
};

}  // namespace

SupResult weighted_sup(const std::function<Complex(Complex)>& f, int power, double r_max,
                       const SupSearchSpec& spec) {
  spec.validate();
  if (power != 1 && power != 2) fail(ErrorCode::InvalidArgument, "weight power must be 1 or 2");
  if (!(r_max >= 0.0) || !(r_max < 1.0)) fail(ErrorCode::InvalidArgument, "r_max must lie in [0,1)");

  auto weighted = [&](double r, double theta) {
    const Complex z = std::polar(r, theta);
    const double w = 1.0 - r * r;
    const double v = std::abs(f(z)) * (power == 1 ? w : w * w);
    return std::isfinite(v) ? v : 0.0;
  };

  const double s_max = std::atanh(r_max);
  const double dtheta = 2.0 * std::numbers::pi / spec.angular_nodes;
  const double ds = s_max / (spec.radial_nodes - 1);

  std::vector<Node> nodes;
  nodes.reserve(static_cast<std::size_t>(spec.radial_nodes - 1) * spec.angular_nodes + 1);
  nodes.push_back({0.0, 0.0, weighted(0.0, 0.0)});
  for (int i = 1; i < spec.radial_nodes; ++i) {
    const double r = (i == spec.radial_nodes - 1) ? r_max : std::tanh(i * ds);
    for (int j = 0; j < spec.angular_nodes; ++j) {
      const double theta = j * dtheta;
      nodes.push_back({r, theta, weighted(r, theta)});
    }
  }

  // Stable ordering: by value descending, ties by generation index.
  std::vector<std::size_t> order(nodes.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  const std::size_t n_seeds = std::min<std::size_t>(static_cast<std::size_t>(spec.seeds), nodes.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_seeds), order.end(),
                    [&](std::size_t x, std::size_t y) {
                      if (nodes[x].value != nodes[y].value) return nodes[x].value > nodes[y].value;
                      return x < y;
                    });

  Node best = nodes[order[0]];
  for (std::size_t k = 0; k < n_seeds; ++k) {
    Node centre = nodes[order[k]];
    double step_s = ds;
    double step_t = dtheta;
    // refine_rounds is a minimum; polishing continues until the pattern is
    // finer than kStepFloor so interior peaks are resolved to rounding.
    for (int round = 0; round < spec.refine_rounds || (step_s > kStepFloor && round < kMaxRounds); ++round) {
      Node round_best = centre;
      const double s_c = std::atanh(centre.r);
      for (int di = -2; di <= 2; ++di) {
        for (int dj = -2; dj <= 2; ++dj) {
          if (di == 0 && dj == 0) continue;
          const double s = std::clamp(s_c + 0.5 * di * step_s, 0.0, s_max);
          const double r = (s == s_max) ? r_max : std::tanh(s);
          const double theta = centre.theta + 0.5 * dj * step_t;
          const double v = weighted(r, theta);
          if (v > round_best.value) round_best = {r, theta, v};
        }
      }
      centre = round_best;
      step_s /= 3.0;
      step_t /= 3.0;
    }
    if (centre.value > best.value) best = centre;
  }
  return {best.value, std::polar(best.r, best.theta)};
}

}  // namespace koebe
