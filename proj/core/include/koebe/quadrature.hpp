#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature with global bisection, for real,
// complex and small vector-valued integrands.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "koebe/complex.hpp"
#include "koebe/errors.hpp"

namespace koebe {

struct QuadSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 10000;

  void validate() const;
};

template <class V>
struct QuadResult {
  V value{};
  double err = 0.0;
  bool converged = true;
  int subdivisions = 0;
};

inline double quad_norm(double v) { return std::abs(v); }
inline double quad_norm(Complex v) { return std::abs(v); }

namespace detail {

struct Gk15 {
  static constexpr std::array<double, 8> xgk = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
  static constexpr std::array<double, 8> wgk = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  // Gauss weights for the odd Kronrod nodes xgk[1], xgk[3], xgk[5] and the centre.
  static constexpr std::array<double, 4> wg = {
      0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
      0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
};

template <class V>
struct Panel {
  double lo;
  double hi;
  V value;
  double err;
};

template <class V, class F>
Panel<V> gk15(const F& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const V fc = f(centre);
  V kronrod = Gk15::wgk[7] * fc;
  V gauss = Gk15::wg[3] * fc;
  double resabs = Gk15::wgk[7] * quad_norm(fc);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * Gk15::xgk[j];
    const V f1 = f(centre - dx);
    const V f2 = f(centre + dx);
    kronrod = kronrod + Gk15::wgk[j] * (f1 + f2);
    resabs += Gk15::wgk[j] * (quad_norm(f1) + quad_norm(f2));
    if (j % 2 == 1) gauss = gauss + Gk15::wg[j / 2] * (f1 + f2);
  }
  const double scale = std::abs(half);
  const V value = half * kronrod;
  // The Gauss/Kronrod difference bounds the lower-order rule, so it
  // overestimates the Kronrod error. Floored at roundoff.
  double err = scale * quad_norm(kronrod - gauss);
  err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * scale * resabs);
  return {lo, hi, value, err};
}

}  // namespace detail

// Integrates f over [lo, hi]. Never throws on non-convergence: the best
// estimate is returned with converged = false.
template <class V, class F>
QuadResult<V> integrate(const F& f, double lo, double hi, const QuadSpec& spec) {
  spec.validate();
  using Panel = detail::Panel<V>;
  auto cmp = [](const Panel& x, const Panel& y) {
    if (x.err != y.err) return x.err < y.err;
    return x.lo > y.lo;
  };
  std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> heap(cmp);
  std::vector<Panel> finished;

  auto totals = [&](const std::vector<Panel>& all) {
    std::vector<const Panel*> sorted;
    sorted.reserve(all.size());
    for (const auto& p : all) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(), [](const Panel* x, const Panel* y) { return x->lo < y->lo; });
    V sum{};
    double err = 0.0;
    for (const Panel* p : sorted) {
      sum = sum + p->value;
      err += p->err;
    }
    return std::pair<V, double>(sum, err);
  };

  heap.push(detail::gk15<V>(f, lo, hi));
  V running_value = heap.top().value;
  double running_err = heap.top().err;
  int splits = 0;
  const double min_width = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(hi - lo);

  while (true) {
    const double tol = std::max(spec.abs_tol, spec.rel_tol * quad_norm(running_value));
    if (running_err <= tol || splits >= spec.max_subdivisions || heap.empty()) {
      // Re-sum in position order; running sums drift.
      std::vector<Panel> all = finished;
      auto copy = heap;
      while (!copy.empty()) {
        all.push_back(copy.top());
        copy.pop();
      }
      auto [value, err] = totals(all);
      const double final_tol = std::max(spec.abs_tol, spec.rel_tol * quad_norm(value));
      if (err <= final_tol || splits >= spec.max_subdivisions || heap.empty()) {
        return {value, err, err <= final_tol, splits};
      }
      running_value = value;
      running_err = err;
    }
    Panel worst = heap.top();
    heap.pop();
    if (std::abs(worst.hi - worst.lo) <= min_width) {
      finished.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    Panel left = detail::gk15<V>(f, worst.lo, mid);
    Panel right = detail::gk15<V>(f, mid, worst.hi);
    running_value = running_value + (left.value + right.value) + (-1.0) * worst.value;
    running_err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    ++splits;
  }
}

using ComplexFn = std::function<Complex(Complex)>;
using RealFn = std::function<double(Complex)>;

struct SegmentIntegral {
  Complex value;
  double err = 0.0;
  bool converged = true;
};

// Integral of F along the straight segment from 0 to z_end.
SegmentIntegral segment_integral(const ComplexFn& f, Complex z_end, const QuadSpec& spec = {});

// Integral of F along the straight segment from z_start to z_end.
SegmentIntegral segment_integral(const ComplexFn& f, Complex z_start, Complex z_end,
                                 const QuadSpec& spec = {});

struct AreaIntegral {
  double value = 0.0;
  double err = 0.0;
  bool converged = true;
};

// Integral of F over the disk |xi| <= r, computed as nested adaptive rules
// in (rho, theta) with the polar Jacobian rho.
AreaIntegral polar_area_integral(const RealFn& f, double r, const QuadSpec& spec = {});

}  // namespace koebe
