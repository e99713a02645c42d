#include <cmath>

#include "doctest.h"
#include "smt/inverse.hpp"

using namespace smt;

TEST_CASE("inversion config validation") {
  CHECK_NOTHROW(validate(InversionConfig{}));
  CHECK_THROWS(validate(InversionConfig{1, 10, 1e-10}));
  CHECK_THROWS(validate(InversionConfig{20, 10, 1e-10}));
  CHECK_THROWS(validate(InversionConfig{10, 20, 0.0}));
  CHECK_THROWS(validate(InversionConfig{10, 20, 1.0}));
}

TEST_CASE("collocation points lie in [t_floor, 1) in increasing order") {
  const auto t = collocation_points(50);
  REQUIRE(t.size() == 50);
  CHECK(t.front() > t_floor);
  CHECK(t.back() < 1.0);
  for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i] > t[i - 1]);
}

TEST_CASE("three-dimensional closed form round trip") {
  const QuadratureRule quad;
  const Dimension d3 = make_dimension(3);
  const auto f = RadialProfile::bump(0.5, 0.3);
  auto dh = [&](double t) { return forward_h_jet(f, d3, t, 1, quad).derivative(1); };
  double worst = 0.0, peak = 0.0;
  for (double r = 0.01; r < 1.0; r += 0.01) {
    worst = std::max(worst, std::abs(invert_radial_n3(dh, r) - f(r)));
    peak = std::max(peak, std::abs(f(r)));
  }
  CHECK(worst / peak < 1e-8);
  CHECK_THROWS(invert_radial_n3(dh, 0.0));
  CHECK_THROWS(invert_radial_n3(dh, 1.0));
}

TEST_CASE("collocation recovers a profile the basis represents exactly") {
  const QuadratureRule quad;
  // degree 6, inside the span of 10 Lagrange nodes
  const auto f = RadialProfile::polynomial({0.0, 0.0, 1.0, -3.0, 3.0, -1.0, 0.5});
  for (int n : {3, 5}) {
    const Dimension dim = make_dimension(n);
    const InversionConfig cfg{10, 40, 1e-13};
    const auto t = collocation_points(cfg.n_collocation);
    std::vector<double> g;
    for (double ti : t) g.push_back(forward_radial(f, dim, ti, quad));
    const auto res = invert_radial(t, g, dim, cfg, quad);
    CAPTURE(n);
    CHECK(res.effective_rank == 10);
    CHECK(res.relative_residual < 1e-10);
    CHECK(relative_l2_error(res, [&](double r) { return f(r); }) < 1e-6);
    CHECK(res(0.37) == doctest::Approx(f(0.37)).epsilon(1e-6));
  }
}

TEST_CASE("inversion rejects bad data") {
  const QuadratureRule quad;
  const Dimension d3 = make_dimension(3);
  const InversionConfig cfg{4, 8, 1e-10};
  CHECK_THROWS(invert_radial({0.1, 0.2}, {0.0, 0.0}, d3, cfg, quad));
  CHECK_THROWS(invert_radial({0.1, 0.2, 0.3, 0.4}, {0.0, 0.0, 0.0}, d3, cfg, quad));
  CHECK_THROWS(invert_radial({0.1, 0.2, 0.3, 1.4}, {0.0, 0.0, 0.0, 0.0}, d3, cfg, quad));
}
