#pragma once

#include <string_view>

#include "koebe/complex.hpp"
#include "koebe/shear.hpp"
#include "koebe/sup_search.hpp"

namespace koebe {

// Closed-form pre-Schwarzian of f_{a,lambda}:
//   2(z+a)/(1-z^2) + lambda/(1-lambda z) - lambda^2 conj(z)/(1 - lambda^2|z|^2)
// The sign of the last term is the one the generic operator gives for
// omega = lambda z.
Complex pre_schwarzian_closed(const Params& p, Complex z);

// Same expression with +lambda^2 conj(z)/(...) as the last term, as it
// appears in print. Kept only so tests can show it disagrees with the generic
// operator.
Complex pre_schwarzian_closed_as_printed(const Params& p, Complex z);

// Closed-form Schwarzian of f_{a,lambda}. The last term is
// -(3/2) lambda^4 conj(z)^2 / (1 - lambda^2|z|^2)^2, which is what the
// generic operator yields for omega = lambda z.
Complex schwarzian_closed(const Params& p, Complex z);

// Same five-term expression but with +3 lambda^4 conj(z)^2/(...)^2 as the
// last term, the coefficient as it appears in print. Kept only so tests can
// show it disagrees with the generic operator.
Complex schwarzian_closed_as_printed(const Params& p, Complex z);

// 2-jet of the analytic part and of the dilatation at a point.
struct HarmonicJet {
  Complex hp, hpp, hppp;
  Complex w, wp, wpp;
};

struct Operators {
  Complex pre_schwarzian;
  Complex schwarzian;
};

// P_f = h''/h' - w' conj(w)/(1 - |w|^2)
// S_f = h'''/h' - 3/2 (h''/h')^2 + conj(w)/(1-|w|^2) (h''/h' w' - w'')
//       - 3/2 (w' conj(w)/(1-|w|^2))^2
// Throws DegenerateJet if h' = 0 or |w| >= 1.
Operators generic_operators(const HarmonicJet& jet);

// Jet of f_{a,lambda}: h' = k_a'/(1-lambda z), h'' from the logarithmic
// derivative, h''' from its closed form; w = lambda z.
HarmonicJet family_jet(const Params& p, Complex z);

// Jet of the harmonic Koebe function (w = z).
HarmonicJet harmonic_koebe_jet(Complex z);

enum class NormKind { PreSchwarzian, Schwarzian };

std::string_view to_string(NormKind kind) noexcept;

struct NormReport {
  NormKind kind = NormKind::PreSchwarzian;
  double estimate = 0.0;
  Complex argmax{};
  double paper_bound = 0.0;
  double r_max = 0.0;
};

// 2(1 + |a|) + 2 lambda^2 + lambda
double pre_schwarzian_norm_bound(double a, double lambda);
// lambda^4 + 2 lambda^3 (|a|+1) + lambda^2 (4|a| + 13/2) + 2 lambda (|a|+2) + 2|1-a^2|
double schwarzian_norm_bound(double a, double lambda);

inline constexpr double kDefaultNormRadius = 1.0 - 1e-4;

NormReport norm_estimate(NormKind kind, const Params& p, double r_max = kDefaultNormRadius,
                         const SupSearchSpec& spec = {});

}  // namespace koebe
