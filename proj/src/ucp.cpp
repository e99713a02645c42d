#include "smt/ucp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "smt/parallel.hpp"

namespace smt {

void validate(const UcpSpec& spec, bool allow_low_order) {
  const Dimension dim = make_dimension(spec.n);
  if (!(spec.epsilon > 0.0 && spec.epsilon < 1.0)) throw std::invalid_argument("ucp: epsilon must lie in (0, 1)");
  if (spec.m < 0) throw std::invalid_argument("ucp: m < 0");
  if (!allow_low_order && spec.m < 4 * dim.k + 2)
    throw std::invalid_argument("ucp: m = " + std::to_string(spec.m) + " below the sufficient order 4k+2 = " +
                                std::to_string(4 * dim.k + 2));
  if (!(spec.width > 0.0)) throw std::invalid_argument("ucp: bump width must be positive");
  if (!(spec.center - spec.width >= spec.epsilon && spec.center + spec.width < 1.0))
    throw std::invalid_argument("ucp: bump support must lie in (epsilon, 1)");
}

RadialProfile build_counterexample(const UcpSpec& spec, bool allow_low_order) {
  validate(spec, allow_low_order);
  return RadialProfile::bump(spec.center, spec.width).derivative(spec.m);
}

std::vector<double> ucp_grid(int points) {
  if (points < 2) throw std::invalid_argument("ucp_grid: need at least 2 points");
  std::vector<double> t(static_cast<std::size_t>(points));
  const double lo = t_floor, hi = 2.0 - t_floor;
  for (int i = 0; i < points; ++i) t[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  return t;
}

QuadratureRule ucp_quadrature(const UcpSpec& spec) { return QuadratureRule(32, std::max(8, 8 * spec.m)); }

double ucp_tolerance(const QuadratureRule& quad) { return 1e-7 * std::max(1.0, quad.panels() / 8.0); }

UcpReport verify_counterexample(const UcpSpec& spec, const QuadratureRule& quad, const std::vector<double>& grid,
                                bool allow_low_order) {
  const Dimension dim = make_dimension(spec.n);
  const RadialProfile f = build_counterexample(spec, allow_low_order);
  UcpReport rep;
  rep.tol = ucp_tolerance(quad);
  rep.t = grid;
  rep.g = parallel_map<double>(grid.size(), [&](std::size_t i) { return forward_radial(f, dim, grid[i], quad); });

  // f must vanish identically on [0, eps], and be non-trivial somewhere.
  rep.f_zero_on_ball = true;
  double fmax = 0.0;
  const int probes = 1000;
  for (int i = 0; i <= probes; ++i) {
    const double r = 0.999 * i / probes;
    const double v = f(r);
    if (r <= spec.epsilon && v != 0.0) rep.f_zero_on_ball = false;
    fmax = std::max(fmax, std::abs(v));
  }

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double a = std::abs(rep.g[i]);
    rep.max_global = std::max(rep.max_global, a);
    if (std::abs(grid[i] - 1.0) < spec.epsilon)
      rep.max_inside = std::max(rep.max_inside, a);
    else
      rep.max_outside = std::max(rep.max_outside, a);
  }
  rep.nontrivial = fmax > 0.0 && rep.max_global > 0.0;
  rep.ratio_inside = rep.max_global > 0.0 ? rep.max_inside / rep.max_global : 0.0;
  rep.pass = rep.nontrivial && rep.f_zero_on_ball && rep.ratio_inside <= rep.tol;
  return rep;
}

}  // namespace smt
