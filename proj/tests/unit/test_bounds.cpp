#include <doctest.h>

#include <cmath>
#include <numbers>

#include "koebe/bounds.hpp"
#include "koebe/errors.hpp"
#include "koebe/shear.hpp"
#include "oracles.hpp"

using koebe::Complex;
using koebe::Regime;

constexpr double kPi = std::numbers::pi;

TEST_CASE("regime selection") {
  CHECK(koebe::regime_of(2.0) == Regime::AtLeastOne);
  CHECK(koebe::regime_of(1.0) == Regime::AtLeastOne);
  CHECK(koebe::regime_of(0.99) == Regime::Between);
  CHECK(koebe::regime_of(-1.0) == Regime::AtMostMinusOne);
  CHECK(koebe::regime_of(-3.0) == Regime::AtMostMinusOne);
}

TEST_CASE("derivative envelope examples") {
  auto b = koebe::derivative_envelope(koebe::make_params(2.0, 0.0), 0.5);
  CHECK(b.lo == doctest::Approx(4.0 / 27.0).epsilon(1e-15));
  CHECK(b.hi == doctest::Approx(12.0).epsilon(1e-15));
  b = koebe::derivative_envelope(koebe::make_params(0.0, 0.0), 0.5);
  CHECK(b.lo == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
  CHECK(b.hi == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("property: adjacent regimes coincide at a = +-1") {
  for (double l : {0.0, 0.4, 0.8}) {
    for (double r : {0.2, 0.5, 0.9}) {
      for (double a : {1.0, -1.0}) {
        const auto p = koebe::make_params(a, l);
        const Regime outer = a > 0 ? Regime::AtLeastOne : Regime::AtMostMinusOne;
        const auto e1 = koebe::koebe_derivative_envelope(a, outer, r);
        const auto e2 = koebe::koebe_derivative_envelope(a, Regime::Between, r);
        CHECK(e1.lower == e2.lower);
        CHECK(e1.upper == e2.upper);
        const auto g1 = koebe::growth_bounds(p, outer, r);
        const auto g2 = koebe::growth_bounds(p, Regime::Between, r);
        CHECK(g1.lo == doctest::Approx(g2.lo).epsilon(1e-14));
        CHECK(g1.hi == doctest::Approx(g2.hi).epsilon(1e-14));
        const auto a1 = koebe::area_bounds(p, outer, r);
        const auto a2 = koebe::area_bounds(p, Regime::Between, r);
        CHECK(a1.lo == doctest::Approx(a2.lo).epsilon(1e-14));
        CHECK(a1.hi == doctest::Approx(a2.hi).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("growth bounds examples") {
  auto g = koebe::growth_bounds(koebe::make_params(2.0, 0.0), 0.5);
  CHECK(std::abs(g.lo - 2.0 / 9.0) < 1e-12);
  CHECK(std::abs(g.hi - 2.0) < 1e-12);
  CHECK(g.regime == Regime::AtLeastOne);
  g = koebe::growth_bounds(koebe::make_params(0.0, 0.0), 0.5);
  CHECK(std::abs(g.lo - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(g.hi - 1.0) < 1e-12);
  for (double a : {-2.0, 0.3, 2.0}) {
    const auto t = koebe::growth_bounds(koebe::make_params(a, 0.5), 1e-4);
    CHECK(t.lo / 1e-4 == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(t.hi / 1e-4 == doctest::Approx(1.0).epsilon(1e-3));
  }
}

TEST_CASE("property: growth bounds at lambda = 0 match closed-form antiderivatives") {
  // a >= 1: int (1-rho)^(a-1)/(1+rho)^(a+1) = ((1 - ((1-r)/(1+r))^a)/(2a)), and
  // the mirrored expression for the upper bound.
  for (double a : {1.0, 1.5, 2.0}) {
    for (double r : {0.3, 0.6, 0.9}) {
      const auto g = koebe::growth_bounds(koebe::make_params(a, 0.0), r);
      const double q = (1.0 - r) / (1.0 + r);
      CHECK(std::abs(g.lo - (1.0 - std::pow(q, a)) / (2.0 * a)) < 1e-10);
      CHECK(std::abs(g.hi - (std::pow(q, -a) - 1.0) / (2.0 * a)) < 1e-10 * std::pow(q, -a));
    }
  }
}

TEST_CASE("property: reflection between a and -a for |a| >= 1") {
  for (double a : {1.0, 1.5, 2.0, 3.0}) {
    for (double l : {0.0, 0.5}) {
      const double r = 0.6;
      const auto e_pos = koebe::koebe_derivative_envelope(a, Regime::AtLeastOne, r);
      const auto e_neg = koebe::koebe_derivative_envelope(-a, Regime::AtMostMinusOne, r);
      CHECK(e_pos.lower == doctest::Approx(e_neg.lower).epsilon(1e-15));
      CHECK(e_pos.upper == doctest::Approx(e_neg.upper).epsilon(1e-15));
      const auto gp = koebe::growth_bounds(koebe::make_params(a, l), r);
      const auto gn = koebe::growth_bounds(koebe::make_params(-a, l), r);
      CHECK(gp.lo == doctest::Approx(gn.lo).epsilon(1e-13));
      CHECK(gp.hi == doctest::Approx(gn.hi).epsilon(1e-13));
    }
  }
}

TEST_CASE("property: derivative and growth sandwiches") {
  for (double a : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0}) {
    for (double l : {0.0, 0.5, 0.75}) {
      const auto p = koebe::make_params(a, l);
      for (double r : {0.3, 0.6, 0.9}) {
        const auto d = koebe::derivative_envelope(p, r);
        const auto g = koebe::growth_bounds(p, r);
        for (int k = 0; k < 32; ++k) {
          const Complex z = std::polar(r, 2.0 * kPi * k / 32);
          const double hp = std::abs(koebe::shear_derivatives(p, z).hp);
          CHECK(hp >= d.lo * (1.0 - 1e-12));
          CHECK(hp <= d.hi * (1.0 + 1e-12));
          const auto v = koebe::eval_f(p, z);
          const double tol = 10.0 * (v.err + g.lo_err + g.hi_err);
          CHECK(std::abs(v.f) >= g.lo - tol);
          CHECK(std::abs(v.f) <= g.hi + tol);
        }
      }
    }
  }
}

TEST_CASE("area bounds examples") {
  const auto b = koebe::area_bounds(koebe::make_params(0.0, 0.0), 0.5);
  CHECK(std::abs(b.lo - 7.0 * kPi / 81.0) < 1e-8);
  CHECK(std::abs(b.hi - 5.0 * kPi / 3.0) < 1e-8);
  for (double a : {-2.0, 0.5, 2.0}) {
    const double r = 1e-3;
    const auto t = koebe::area_bounds(koebe::make_params(a, 0.4), r);
    CHECK(t.lo / (kPi * r * r) == doctest::Approx(1.0).epsilon(1e-2));
    CHECK(t.hi / (kPi * r * r) == doctest::Approx(1.0).epsilon(1e-2));
  }
}

TEST_CASE("area_empirical examples") {
  auto e = koebe::area_empirical(koebe::make_params(0.0, 0.0), 0.5);
  CHECK(std::abs(e.value - kPi * std::atanh(0.25)) < 1e-6);
  e = koebe::area_empirical(koebe::make_params(2.0, 0.0), 0.3);
  double s = 0.0;
  for (int n = 1; n < 400; ++n) s += static_cast<double>(n) * n * n * std::pow(0.3, 2 * n);
  CHECK(std::abs(e.value / (kPi * s) - 1.0) < 1e-6);
  const auto c = koebe::hg_series<double>(2.0, 0.5, 80);
  double t = 0.0;
  for (std::size_t n = 1; n <= 80; ++n) {
    t += n * (c.a_coeffs[n] * c.a_coeffs[n] - c.b_coeffs[n] * c.b_coeffs[n]) * std::pow(0.25, n);
  }
  e = koebe::area_empirical(koebe::make_params(2.0, 0.5), 0.5);
  CHECK(std::abs(e.value / (kPi * t) - 1.0) < 1e-6);
}

TEST_CASE("property: area oracle and sandwich") {
  for (double a : {-2.0, -0.5, 0.0, 1.0, 2.0}) {
    for (double l : {0.0, 0.5, 0.75}) {
      const auto p = koebe::make_params(a, l);
      for (double r : {0.3, 0.5, 0.7}) {
        const auto e = koebe::area_empirical(p, r);
        const auto oc = oracle::hg_coefficients(a, l, 80);
        const double want = oracle::series_area(oc, r);
        CHECK(std::abs(e.value - want) <= 1e-5 * want);
        const auto b = koebe::area_bounds(p, r);
        const double tol = 10.0 * (e.err + b.lo_err + b.hi_err);
        CHECK(e.value >= b.lo - tol);
        CHECK(e.value <= b.hi + tol);
      }
    }
  }
}

TEST_CASE("input validation") {
  const auto p = koebe::make_params(1.0, 0.2);
  CHECK_THROWS_AS(koebe::growth_bounds(p, 0.0), koebe::Error);
  CHECK_THROWS_AS(koebe::growth_bounds(p, 1.0), koebe::Error);
  CHECK_THROWS_AS(koebe::area_bounds(p, -0.5), koebe::Error);
  CHECK_THROWS_AS(koebe::area_empirical(p, 1.0), koebe::Error);
  CHECK_THROWS_AS(koebe::derivative_envelope(p, 1.5), koebe::Error);
  CHECK(koebe::to_string(Regime::Between) == "-1<a<1");
}
