#pragma once

// The range operator L_k = sum_p C(k,p) (1-t)^p D^p and the symmetry test
// [L_k h](1-t) = [L_k h](1+t), plus the D-antiderivative used by the
// single-harmonic version of the test.

#include <functional>
#include <vector>

#include "smt/chebyshev.hpp"
#include "smt/quadrature.hpp"
#include "smt/transform.hpp"

namespace smt {

/// (t, p) -> D^p of some function at t.
using DpFunction = std::function<double(double t, int p)>;

struct RangeReport {
  int k_used = 0;
  std::vector<double> grid;
  std::vector<double> residual;
  double sup_residual = 0.0;
  double scale = 0.0;
  double normalized = 0.0;
};

/// [L_k h](tau) for tau in (0, 2).
double apply_Lk(const DpFunction& h_dp, int k, double tau);

/// `points` uniform points on [lo, hi].
std::vector<double> uniform_grid(int points = 101, double lo = 0.01, double hi = 1.0);

/// Symmetry residual on `grid`. The data is taken to vanish at tau <= 0 and
/// tau >= 2, so t = 1 compares L h(0) = L h(2) = 0.
RangeReport range_residual(const DpFunction& h_dp, int k, const std::vector<double>& grid);
RangeReport range_residual(const SmtProfile& profile, const std::vector<double>& grid);
RangeReport range_residual(const SampledH& h, int k, const std::vector<double>& grid);

/// I^i psi(t) = int_0^t s psi(s) ((t^2 - s^2)/2)^{i-1} / (i-1)! ds, the i-fold
/// D-antiderivative vanishing at 0. psi is assumed zero outside [lo, hi].
double iterated_integral(const std::function<double(double)>& psi, int i, double t, const QuadratureRule& quad,
                         double lo = 0.0, double hi = 2.0);

struct AntiDResult {
  std::function<double(double)> phi;
  std::vector<double> defects;  // defects[i-1] = I^i psi(2)
};

AntiDResult anti_D(const std::function<double(double)>& psi, int m, const QuadratureRule& quad, double lo = 0.0,
                   double hi = 2.0);

struct GeneralRangeReport {
  RangeReport range;
  std::vector<double> defects;
  double defect_scale = 0.0;
  double max_defect = 0.0;
  bool defects_ok = true;
  /// sup |h_ml - const * D^m phi| / sup |h_ml| over the grid and its mirror;
  /// zero on the data path, where no second route exists.
  double route_mismatch = 0.0;
};

inline constexpr double moment_tolerance = 1e-8;

/// Analytic route for h_{m,l} generated from f_{m,l}.
GeneralRangeReport general_range_check(const RadialProfile& f_ml, Dimension dim, int m,
                                       const std::vector<double>& grid, const QuadratureRule& quad);

/// Data route: psi_dp gives D^q h_{m,l} for q <= psi_order, with support in
/// [lo, hi]. phi's D-derivatives come from antiderivatives (orders <= m) and
/// from psi_dp (orders above m).
GeneralRangeReport general_range_check(const DpFunction& psi_dp, int psi_order, double lo, double hi,
                                       Dimension dim, int m, const std::vector<double>& grid,
                                       const QuadratureRule& quad);

/// Data route for Chebyshev samples of h_{m,l}.
GeneralRangeReport general_range_check(const SampledH& h_ml, Dimension dim, int m,
                                       const std::vector<double>& grid, const QuadratureRule& quad);

}  // namespace smt
