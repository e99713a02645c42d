#pragma once

// Recovery of a radial profile from g on (0, 1), the half of the radii that
// never reaches past the center.

#include <functional>
#include <vector>

#include "smt/quadrature.hpp"
#include "smt/transform.hpp"

namespace smt {

inline constexpr double r_floor = 1e-3;

/// n = 3 closed form f(r) = 2 h'(1 - r) / r from a derivative of h.
double invert_radial_n3(const std::function<double(double)>& dh, double r);

struct InversionConfig {
  int n_unknowns = 80;
  int n_collocation = 160;
  double svd_cutoff = 1e-10;
};

void validate(const InversionConfig& cfg);

struct InversionResult {
  std::vector<double> r;        // Gauss nodes on (0, 1)
  std::vector<double> weights;  // matching quadrature weights
  std::vector<double> f;        // recovered nodal values
  int effective_rank = 0;
  double residual_norm = 0.0;   // || A f - h ||_2
  double relative_residual = 0.0;
  double sigma_max = 0.0;
  double sigma_min_kept = 0.0;

  /// Barycentric interpolation of the nodal values.
  double operator()(double r) const;
};

/// Collocation points in [t_floor, 1): Chebyshev points of the first kind.
std::vector<double> collocation_points(int count);

/// Solves h(t_i) = c int_{1-t_i}^1 u f(u) Q(t_i,u)^k du for the nodal values of
/// f by truncated-SVD least squares. f is represented by its Lagrange
/// interpolant on the nodes, and each matrix entry integrates that basis
/// function exactly in the quadrature sense.
InversionResult invert_radial(const std::vector<double>& t, const std::vector<double>& g, Dimension dim,
                              const InversionConfig& cfg, const QuadratureRule& quad);

/// Relative L2 error of `res` against the true profile, in the nodal
/// quadrature norm.
double relative_l2_error(const InversionResult& res, const std::function<double(double)>& truth);

}  // namespace smt
