#pragma once

// Forward spherical mean transform of radial and single-harmonic profiles in
// odd dimension n, for centers on the unit sphere and radii t in (0, 2).
//
//   h(t) = t^{n-2} g(t) = w_{n-1} / (4^k w_n) int_{|1-t|}^1 u f(u) Q(t,u)^k du
//
// with k = (n-3)/2 and Q(t,u) = ((1+t)^2 - u^2)(u^2 - (1-t)^2).

#include <functional>
#include <memory>
#include <vector>

#include "smt/jet.hpp"
#include "smt/quadrature.hpp"

namespace smt {

struct Dimension {
  int n = 3;
  int k = 0;
};

/// Validates n (odd, >= 3) and fills k.
Dimension make_dimension(int n);

/// Surface area of the unit sphere in R^n.
double omega(int n);

/// Q(t,u) in factored form.
double q_kernel(double t, double u);

/// Lowest t at which g = h / t^{n-2} is formed.
inline constexpr double t_floor = 1e-3;

/// A radial function of r in [0, 1) with jets on demand. Jets vanish
/// identically outside [lo, hi].
class RadialProfile {
 public:
  using Evaluator = std::function<Jet<double>(double r, int order)>;

  RadialProfile(Evaluator eval, double lo, double hi, bool test_only = false);

  /// exp(-1 / (1 - s^2)), s = (r - center) / width, on (center - width, center + width).
  static RadialProfile bump(double center, double width);

  /// Polynomial sum c_i r^i on [lo, hi]. Not smooth at the ends; meant for
  /// quadrature checks with closed forms, so hi = 1 is admitted.
  static RadialProfile polynomial(std::vector<double> coeffs, double lo = 0.0, double hi = 1.0);

  /// r -> f^{(m)}(r).
  RadialProfile derivative(int m) const;

  /// r -> r^p f(r).
  RadialProfile times_power(int p) const;

  /// r -> s f(r).
  RadialProfile scaled(double s) const;

  Jet<double> jet(double r, int order) const;
  double operator()(double r) const;
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  bool test_only() const { return test_only_; }

 private:
  std::shared_ptr<const Evaluator> eval_;
  double lo_, hi_;
  bool test_only_;
};

/// Data of the transform: D-derivatives of h on (0, 2), zero outside
/// (lo, hi). `k_eff` is the largest D-order the source can deliver.
struct SmtProfile {
  Dimension dim;
  std::function<double(double t, int p)> dp_h;
  int k_eff = 0;
  double lo = 0.0;
  double hi = 2.0;

  double h(double t) const { return dp_h(t, 0); }
  double g(double t) const;
};

/// D_t^p Q(t,u)^K evaluated through jets in x = t^2 / 2, where Q is quadratic.
double kernel_dp(int K, int p, double t, double u);

/// Ordinary t-derivatives of Q(t,u)^K up to `order` at fixed u.
Jet<double> kernel_t_jet(int K, double t, double u, int order);

double forward_h(const RadialProfile& f, Dimension dim, double t, const QuadratureRule& quad);
double forward_radial(const RadialProfile& f, Dimension dim, double t, const QuadratureRule& quad);
double funk_hecke_forward(const RadialProfile& f, Dimension dim, double t, const QuadratureRule& quad);

/// D^p h(t) for p <= k, differentiating the kernel under the integral.
double forward_h_dp(const RadialProfile& f, Dimension dim, double t, int p, const QuadratureRule& quad);

/// Ordinary t-derivatives of h up to `order`, by jets through the integral
/// after mapping the moving lower limit to a fixed one. Uses f' rather than
/// boundary values of f.
Jet<double> forward_h_jet(const RadialProfile& f, Dimension dim, double t, int order, const QuadratureRule& quad);

SmtProfile make_smt_profile(const RadialProfile& f, Dimension dim, const QuadratureRule& quad);

/// g_{m,l}(t) through the Gegenbauer-weighted integral.
double forward_harmonic(const RadialProfile& f, Dimension dim, int m, double t, const QuadratureRule& quad);

/// phi(t) = int_{|1-t|}^1 u^{1-m} f(u) Q^{m+k} du.
double phi_harmonic(const RadialProfile& f, Dimension dim, int m, double t, const QuadratureRule& quad);

/// D^p phi for p <= m + k.
double phi_harmonic_dp(const RadialProfile& f, Dimension dim, int m, double t, int p, const QuadratureRule& quad);

/// Ordinary t-derivatives of phi up to `order` <= m + k.
Jet<double> phi_harmonic_jet(const RadialProfile& f, Dimension dim, int m, double t, int order,
                             const QuadratureRule& quad);

/// The constant with t^{n-2} g_{m,l} = const_Kmn * D^m phi.
double const_Kmn(int n, int m);

}  // namespace smt
