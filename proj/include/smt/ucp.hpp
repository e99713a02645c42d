#pragma once

// A radial f vanishing on the ball B_eps(0) whose transform also vanishes for
// t in (1 - eps, 1 + eps) without vanishing everywhere: f = F^{(m)} for a
// bump F supported in (eps, 1) and m >= 4k + 2.

#include <vector>

#include "smt/quadrature.hpp"
#include "smt/transform.hpp"

namespace smt {

struct UcpSpec {
  int n = 3;
  double epsilon = 0.25;
  int m = 2;
  double center = 0.6;
  double width = 0.15;
};

/// Checks the parameters; throws std::invalid_argument on violations. With
/// `allow_low_order`, m below 4k + 2 is admitted for exploratory runs.
void validate(const UcpSpec& spec, bool allow_low_order = false);

RadialProfile build_counterexample(const UcpSpec& spec, bool allow_low_order = false);

struct UcpReport {
  std::vector<double> t;
  std::vector<double> g;
  double max_inside = 0.0;
  double max_outside = 0.0;
  double max_global = 0.0;
  double ratio_inside = 0.0;  // max_inside / max_global
  double tol = 0.0;
  bool f_zero_on_ball = false;
  bool nontrivial = false;
  bool pass = false;
};

/// Uniform grid of `points` radii on [t_floor, 2 - t_floor].
std::vector<double> ucp_grid(int points = 801);

/// Rule fine enough for F^{(m)}: 32 nodes on max(8, 8m) panels.
QuadratureRule ucp_quadrature(const UcpSpec& spec);

/// tol = 1e-7 * max(1, panels / 8).
double ucp_tolerance(const QuadratureRule& quad);

UcpReport verify_counterexample(const UcpSpec& spec, const QuadratureRule& quad, const std::vector<double>& grid,
                                bool allow_low_order = false);

}  // namespace smt
