#pragma once

#include <functional>
#include <vector>

#include "smt/jet.hpp"

namespace smt {

/// Samples of h on the Chebyshev-Lobatto grid of [a, b], with spectral
/// derivatives. Values outside [a, b] are zero, which presumes [a, b]
/// contains the support of h.
class SampledH {
 public:
  SampledH(double a, double b, std::vector<double> samples, int max_order = 12);

  /// Nodes t_j = (a+b)/2 + (b-a)/2 cos(pi j / N), j = 0..N.
  static std::vector<double> nodes(double a, double b, int degree);
  static SampledH from_function(const std::function<double(double)>& f, double a, double b, int degree = 128,
                                int max_order = 12);

  double a() const { return a_; }
  double b() const { return b_; }
  int degree() const { return static_cast<int>(samples_.size()) - 1; }
  int max_order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& samples() const { return samples_; }

  /// j-th ordinary derivative of the interpolant.
  double derivative(double t, int j) const;
  double operator()(double t) const { return derivative(t, 0); }
  Jet<double> jet(double t, int order) const;

  /// Smallest interval, between nodes, outside which every sample is exactly
  /// zero. Equals [a, b] when the end samples are nonzero.
  double support_lo() const { return support_lo_; }
  double support_hi() const { return support_hi_; }

  /// D^p of the interpolant; zero outside the support, where the interpolant
  /// would only carry noise amplified by 1/t^p.
  double dp(double t, int p) const;

  /// Rough floor below which residuals on spectral derivatives are noise.
  double noise_floor(int p) const;

 private:
  double a_, b_;
  double support_lo_, support_hi_;
  std::vector<double> samples_;
  std::vector<std::vector<double>> coeffs_;  // coeffs_[j] for the j-th derivative
};

}  // namespace smt
