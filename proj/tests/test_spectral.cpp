#include <cmath>

#include "doctest.h"
#include "smt/cli.hpp"
#include "smt/spectral.hpp"

using namespace smt;

TEST_CASE("Hankel transform of the indicator of [0, 1]") {
  const QuadratureRule quad;
  const SupportedFunction one{[](double) { return 1.0; }, 0.0, 1.0};
  for (double l : {0.5, 3.0, 17.0}) {
    const double want = (std::sin(l) - l * std::cos(l)) / (l * l * l);
    CHECK(hankel(one, 0, l, quad) == doctest::Approx(want).epsilon(1e-12).scale(1e-6));
  }
}

TEST_CASE("Hankel via h agrees with the direct form") {
  const QuadratureRule quad;
  const Dimension d5 = make_dimension(5);
  const auto f = RadialProfile::bump(0.5, 0.3);
  const SupportedFunction g{[&](double t) { return forward_radial(f, d5, t, quad); }, 0.5, 1.5};
  const SupportedFunction h{[&](double t) { return forward_h(f, d5, t, quad); }, 0.5, 1.5};
  for (double l : {1.0, 9.0, 30.0}) {
    const double a = hankel(g, d5.k, l, quad);
    CHECK(hankel_via_h(h, d5.k, l, quad) == doctest::Approx(a).epsilon(1e-10).scale(1e-12));
  }
}

TEST_CASE("cross product identity on range data") {
  const QuadratureRule quad;
  const auto f = RadialProfile::bump(0.6, 0.2);
  for (int n : {3, 5}) {
    const Dimension dim = make_dimension(n);
    const SupportedFunction h{[&](double t) { return forward_h(f, dim, t, quad); }, 1.0 - f.hi(), 1.0 + f.hi()};
    for (double l : {0.5, 7.3, 25.0}) CHECK(cross_product_residual(h, dim.k, l, quad).residual < 1e-8);
  }
}

TEST_CASE("cross product fails for data off the range") {
  const QuadratureRule quad;
  const auto b = RadialProfile::bump(0.5, 0.3);
  const SupportedFunction h{[&](double t) { return b(t - 0.7); }, 0.9, 1.5};
  double worst = 0.0;
  for (double l : {0.5, 2.0, 7.3}) worst = std::max(worst, cross_product_residual(h, 1, l, quad).residual);
  CHECK(worst > 1e-3);
}

TEST_CASE("M_k identity") {
  const auto s = mk_samples(cli::default_seed, 40);
  for (int k = 0; k <= 6; ++k)
    for (auto [l, t] : s) CHECK(mk_residual(k, l, t).residual < 1e-8);
  for (auto [l, t] : s) CHECK(mk_residual_wide(0, l, t).residual < 1e-14);
}

TEST_CASE("M_k samples are seeded and respect the gap") {
  const auto a = mk_samples(42, 30), b = mk_samples(42, 30), c = mk_samples(43, 30);
  CHECK(a == b);
  CHECK(a != c);
  for (auto [l, t] : a) {
    CHECK(l >= 0.5);
    CHECK(l <= 20.0);
    CHECK(std::abs(t) >= 0.05);
    CHECK(std::abs(t + 1.0) >= 0.05);
  }
}

TEST_CASE("transform vanishes at the Bessel zeros only for range data") {
  const QuadratureRule quad;
  const Dimension d3 = make_dimension(3);
  const auto f = RadialProfile::bump(0.5, 0.3);
  const SupportedFunction g{[&](double t) { return forward_radial(f, d3, t, quad); }, 0.5, 1.5};
  const auto in = bessel_zero_vanishing(g, d3, 0, 10, quad);
  CHECK(in.zeros.size() == 10);
  CHECK(in.max_ratio < 1e-6);
  const auto b = RadialProfile::bump(0.7, 0.2);
  const SupportedFunction off{[&](double t) { return b(t - 0.7) / t; }, 1.2, 1.6};
  CHECK(bessel_zero_vanishing(off, d3, 0, 10, quad).max_ratio > 1e-2);
}

TEST_CASE("oscillatory panel count grows with frequency") {
  CHECK(oscillatory_panels(40.0, 0.0, 2.0) > oscillatory_panels(1.0, 0.0, 2.0));
  CHECK(oscillatory_panels(1.0, 0.0, 2.0) >= 1);
}
