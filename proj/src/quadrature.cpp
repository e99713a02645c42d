#include "smt/quadrature.hpp"

#include "smt/precision.hpp"

namespace smt {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  const double pi = pi_v<double>();
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = z;
        p0 = 1.0;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[static_cast<std::size_t>(i)] = -z;
    x[static_cast<std::size_t>(n - 1 - i)] = z;
    const double wi = 2.0 / ((1.0 - z * z) * dp * dp);
    w[static_cast<std::size_t>(i)] = wi;
    w[static_cast<std::size_t>(n - 1 - i)] = wi;
  }
}

QuadratureRule::QuadratureRule(int nodes_per_panel, int panels) : n_(nodes_per_panel), panels_(panels) {
  if (nodes_per_panel < 2) throw std::invalid_argument("QuadratureRule: nodes_per_panel must be >= 2");
  if (panels < 1) throw std::invalid_argument("QuadratureRule: panels must be >= 1");
  gauss_legendre(n_, x_, w_);
}

QuadratureRule QuadratureRule::with_panels(int panels) const {
  QuadratureRule q = *this;
  if (panels < 1) throw std::invalid_argument("QuadratureRule: panels must be >= 1");
  q.panels_ = panels;
  return q;
}

void QuadratureRule::points(double a, double b, std::vector<double>& xs, std::vector<double>& ws) const {
  xs.clear();
  ws.clear();
  if (!(b > a)) return;
  const double hw = 0.5 * (b - a) / panels_;
  for (int p = 0; p < panels_; ++p) {
    const double mid = a + (2 * p + 1) * hw;
    for (std::size_t i = 0; i < x_.size(); ++i) {
      xs.push_back(mid + hw * x_[i]);
      ws.push_back(w_[i] * hw);
    }
  }
}

}  // namespace smt
