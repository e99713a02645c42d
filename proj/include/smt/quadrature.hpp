#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace smt {

/// Composite Gauss-Legendre rule: `panels` equal panels with
/// `nodes_per_panel` points each. Nodes are computed once per object.
class QuadratureRule {
 public:
  explicit QuadratureRule(int nodes_per_panel = 32, int panels = 8);

  int nodes_per_panel() const { return n_; }
  int panels() const { return panels_; }
  const std::vector<double>& nodes() const { return x_; }  // on [-1, 1]
  const std::vector<double>& weights() const { return w_; }

  QuadratureRule with_panels(int panels) const;

  /// Integral of f over [a, b]. Returns 0 when b <= a.
  template <class F>
  double integrate(F&& f, double a, double b) const {
    return integrate_panels(f, a, b, panels_);
  }

  template <class F>
  double integrate_panels(F&& f, double a, double b, int panels) const {
    if (!(b > a)) return 0.0;
    if (panels < 1) throw std::invalid_argument("QuadratureRule: panels must be >= 1");
    const double hw = 0.5 * (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
      const double mid = a + (2 * p + 1) * hw;
      double s = 0.0;
      for (std::size_t i = 0; i < x_.size(); ++i) s += w_[i] * f(mid + hw * x_[i]);
      total += s * hw;
    }
    return total;
  }

  /// Every node of the composite rule on [a, b] with its weight.
  void points(double a, double b, std::vector<double>& xs, std::vector<double>& ws) const;

 private:
  int n_;
  int panels_;
  std::vector<double> x_, w_;
};

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

}  // namespace smt
