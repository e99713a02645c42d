#include <cmath>
#include <random>

#include "doctest.h"
#include "oracle_values.hpp"
#include "smt/specfun.hpp"
#include "smt/transform.hpp"
#include "test_util.hpp"

using namespace smt;

TEST_CASE("raw kernels match mpmath spherical Bessel values") {
  for (const auto& o : oracle::raw_j) {
    CAPTURE(o.k);
    CAPTURE(o.x);
    CHECK(rel_err(raw_j(o.k, o.x), o.value) < 1e-11);
  }
  for (const auto& o : oracle::raw_y) {
    CAPTURE(o.k);
    CAPTURE(o.x);
    CHECK(rel_err(raw_y(o.k, o.x), o.value) < 1e-11);
  }
}

TEST_CASE("normalized j is one at the origin and scales the raw kernel") {
  for (int k = 0; k <= 8; ++k) {
    CHECK(sph_bessel_j(k, 0.0) == 1.0);
    for (double x : {0.2, 3.0, 11.0}) CHECK(rel_err(sph_bessel_j(k, x) * bessel_norm(k), raw_j(k, x)) < 1e-12);
  }
  CHECK(bessel_norm(3) == doctest::Approx(-1.0 / 105.0).epsilon(1e-15));
}

TEST_CASE("low orders in closed form") {
  const double x = 2.0;
  CHECK(dp_sinc(0, x) == doctest::Approx(std::sin(x) / x).epsilon(1e-15));
  CHECK(dp_sinc(1, x) == doctest::Approx((x * std::cos(x) - std::sin(x)) / (x * x * x)).epsilon(1e-14));
  CHECK(dp_cosc(1, x) == doctest::Approx((-x * std::sin(x) - std::cos(x)) / (x * x * x)).epsilon(1e-14));
}

TEST_CASE("series and trig sum agree at the switch radius") {
  for (int k = 0; k <= 10; ++k) {
    const double x = switch_radius(k);
    CAPTURE(k);
    CHECK(rel_err(detail::bessel_series(k, x) * bessel_norm(k), dp_sinc(k, x)) < 1e-9);
  }
}

TEST_CASE("Wronskian-type relation j_k y_{k-1} - j_{k-1} y_k") {
  // x^{2k+1} (raw_j(k) raw_y(k-1) - raw_j(k-1) raw_y(k)) = 1 for the raw kernels.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(0.5, 30.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double x = ux(rng);
    for (int k = 1; k <= 6; ++k) {
      const double w = std::pow(x, 2 * k + 1) * (raw_j(k, x) * raw_y(k - 1, x) - raw_j(k - 1, x) * raw_y(k, x));
      CHECK(w == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("D operator on jets") {
  auto t = Jet<double>::variable(2.0, 4);
  CHECK(d_operator(t * t * t * t, 2) == doctest::Approx(8.0).epsilon(1e-14));
  auto s = Jet<double>::variable(1.7, 5);
  CHECK(rel_err(d_operator(sin(s) / s, 3), dp_sinc(3, 1.7)) < 1e-12);
  CHECK_THROWS(d_operator(s, 6));
  CHECK_THROWS(d_operator(Jet<double>::variable(0.0, 2), 1));
}

TEST_CASE("D coefficient table is integral and satisfies its recurrence") {
  const auto& tab = DCoeffTable::shared();
  // D^{p+1} = (1/t) d/dt D^p gives a[p+1][j] = (j - 2p) a[p][j] + a[p][j-1].
  for (int p = 1; p < 10; ++p)
    for (int j = 1; j <= p + 1; ++j) {
      mpz_class want = 0;
      if (j <= p) want += (j - 2 * p) * tab.exact(p, j);
      if (j - 1 >= 1) want += tab.exact(p, j - 1);
      CHECK(tab.exact(p + 1, j) == want);
    }
}

TEST_CASE("Gegenbauer values") {
  for (const auto& o : oracle::gegenbauer) {
    CAPTURE(o.m);
    CHECK(rel_err(gegenbauer(o.m, o.alpha, o.x), o.value) < 1e-13);
  }
  CHECK(gegenbauer(4, 0.5, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("Bessel zeros") {
  for (const auto& o : oracle::zeros) {
    CAPTURE(o.k);
    CAPTURE(o.i);
    CHECK(rel_err(bessel_zero(o.k, o.i), o.value) < 1e-13);
  }
  const auto z = bessel_zeros(2, 12);
  REQUIRE(z.size() == 12);
  for (std::size_t i = 1; i < z.size(); ++i) CHECK(z[i] > z[i - 1]);
  for (double x : z) CHECK(std::abs(sph_bessel_j(2, x)) < 1e-12);
}

TEST_CASE("sphere areas") {
  for (int n = 2; n <= 9; ++n) CHECK(rel_err(omega(n), oracle::omega[n - 2]) < 1e-14);
}

TEST_CASE("invalid orders are rejected") {
  CHECK_THROWS_AS(raw_j(-1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(raw_y(0, 0.0), std::domain_error);
  CHECK_THROWS_AS(dp_sinc(2, 0.0), std::domain_error);
}
