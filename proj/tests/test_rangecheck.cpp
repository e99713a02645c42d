#include <cmath>

#include "doctest.h"
#include "smt/rangecheck.hpp"

using namespace smt;

namespace {

double square_dp(double t, int p) {
  if (p == 0) return t * t;
  if (p == 1) return 2.0;
  return 0.0;
}

DpFunction scale_upper_half(const SmtProfile& prof, double delta) {
  return [prof, delta](double t, int p) { return (t > 1.0 ? 1.0 + delta : 1.0) * prof.dp_h(t, p); };
}

}  // namespace

TEST_CASE("L_1 on t^2") {
  for (double tau : {0.2, 0.7, 1.5}) CHECK(apply_Lk(square_dp, 1, tau) == doctest::Approx((1 - tau) * 2 + tau * tau));
  CHECK(apply_Lk(square_dp, 0, 0.4) == doctest::Approx(0.16));
}

TEST_CASE("uniform grid") {
  const auto g = uniform_grid(101);
  REQUIRE(g.size() == 101);
  CHECK(g.front() == doctest::Approx(0.01));
  CHECK(g.back() == doctest::Approx(1.0));
}

TEST_CASE("iterated integrals of s^2") {
  const QuadratureRule quad;
  auto psi = [](double s) { return s * s; };
  for (double t : {0.3, 1.1}) {
    CHECK(iterated_integral(psi, 1, t, quad) == doctest::Approx(std::pow(t, 4) / 4).epsilon(1e-13));
    CHECK(iterated_integral(psi, 2, t, quad) == doctest::Approx(std::pow(t, 6) / 24).epsilon(1e-13));
  }
}

TEST_CASE("anti_D inverts D on compactly supported data") {
  const QuadratureRule quad;
  const auto b = RadialProfile::bump(0.5, 0.3);
  // psi = D^2 of a bump centered at 1, so both defects vanish.
  auto F = [&](double t) { return b(t - 0.5); };
  auto psi = [&](double t) {
    if (t <= 0.7 || t >= 1.3) return 0.0;
    const auto j = b.jet(t - 0.5, 2);
    const double d1 = j.derivative(1), d2 = j.derivative(2);
    return (d2 - d1 / t) / (t * t);
  };
  double scale = 0.0;
  for (double t = 0.7; t < 1.3; t += 0.001) scale = std::max(scale, std::abs(psi(t)));
  const AntiDResult res = anti_D(psi, 2, quad, 0.7, 1.3);
  REQUIRE(res.defects.size() == 2);
  for (double d : res.defects) CHECK(std::abs(d) <= moment_tolerance * scale);
  for (double t : {0.8, 1.0, 1.2, 1.5}) CHECK(std::abs(res.phi(t) - F(t)) <= 1e-9 * scale);
}

TEST_CASE("range data of bumps is symmetric under L_k") {
  const QuadratureRule quad;
  for (int n : {3, 5, 7}) {
    const auto prof = make_smt_profile(RadialProfile::bump(0.5, 0.3), make_dimension(n), quad);
    const auto rep = range_residual(prof, uniform_grid());
    CAPTURE(n);
    CHECK(rep.normalized < 1e-6);
    CHECK(rep.k_used == (n - 3) / 2);
  }
}

TEST_CASE("perturbing half of the data is detected in proportion") {
  const QuadratureRule quad;
  for (int n : {3, 5}) {
    const auto prof = make_smt_profile(RadialProfile::bump(0.6, 0.2), make_dimension(n), quad);
    double prev = 0.0;
    for (double delta : {1e-3, 1e-2, 1e-1}) {
      const auto rep = range_residual(scale_upper_half(prof, delta), prof.dim.k, uniform_grid());
      CHECK(rep.normalized >= delta / 10);
      CHECK(rep.normalized > prev);
      prev = rep.normalized;
    }
  }
}

TEST_CASE("sampled data reproduces the analytic check") {
  const QuadratureRule quad;
  const Dimension d3 = make_dimension(3);
  const auto f = RadialProfile::bump(0.5, 0.3);
  const auto sh = SampledH::from_function([&](double t) { return forward_h(f, d3, t, quad); }, 0.5, 1.5, 128, 4);
  CHECK(sh(1.1) == doctest::Approx(forward_h(f, d3, 1.1, quad)).epsilon(1e-10));
  CHECK(sh.support_lo() >= 0.5);
  CHECK(sh.support_hi() <= 1.5);
  CHECK(range_residual(sh, 0, uniform_grid()).normalized < 1e-10);
}

TEST_CASE("general range check on single harmonics") {
  const QuadratureRule quad;
  const auto f = RadialProfile::bump(0.5, 0.3);
  for (auto [n, m] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{5, 1}}) {
    const auto rep = general_range_check(f, make_dimension(n), m, uniform_grid(), quad);
    CAPTURE(n);
    CAPTURE(m);
    CHECK(rep.range.normalized < 1e-6);
    CHECK(rep.defects_ok);
    CHECK(rep.route_mismatch < 1e-6);
    CHECK(rep.max_defect <= moment_tolerance * rep.defect_scale);
  }
}
