#include "smt/rangecheck.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "smt/parallel.hpp"
#include "smt/specfun.hpp"

namespace smt {

namespace {

double Lk_or_zero(const DpFunction& h_dp, int k, double tau) {
  if (tau <= 0.0 || tau >= 2.0) return 0.0;
  return apply_Lk(h_dp, k, tau);
}

void check_grid(const std::vector<double>& grid) {
  for (double t : grid)
    if (t < 1e-3 || t > 1.0) throw std::invalid_argument("range_residual: grid must lie in [1e-3, 1]");
}

double sup_abs_on(const std::function<double(double)>& f, double lo, double hi, int points = 400) {
  double s = 0.0;
  for (int i = 0; i <= points; ++i) s = std::max(s, std::abs(f(lo + (hi - lo) * i / points)));
  return s;
}

}  // namespace

double apply_Lk(const DpFunction& h_dp, int k, double tau) {
  if (k < 0) throw std::invalid_argument("apply_Lk: k < 0");
  if (!(tau > 0.0 && tau < 2.0)) throw std::domain_error("apply_Lk: tau outside (0, 2)");
  const auto& tab = BesselCoeffTable::shared();
  double acc = 0.0;
  double w = 1.0;  // (1 - tau)^p
  for (int p = 0; p <= k; ++p) {
    acc += tab.coeff(k, p) * w * h_dp(tau, p);
    w *= (1.0 - tau);
  }
  return acc;
}

std::vector<double> uniform_grid(int points, double lo, double hi) {
  if (points < 2) throw std::invalid_argument("uniform_grid: need at least 2 points");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  return g;
}

RangeReport range_residual(const DpFunction& h_dp, int k, const std::vector<double>& grid) {
  check_grid(grid);
  RangeReport r;
  r.k_used = k;
  r.grid = grid;
  struct Pair {
    double left = 0.0, right = 0.0;
  };
  const auto vals = parallel_map<Pair>(grid.size(), [&](std::size_t i) {
    return Pair{Lk_or_zero(h_dp, k, 1.0 - grid[i]), Lk_or_zero(h_dp, k, 1.0 + grid[i])};
  });
  r.residual.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    r.residual[i] = std::abs(vals[i].left - vals[i].right);
    r.sup_residual = std::max(r.sup_residual, r.residual[i]);
    r.scale = std::max({r.scale, std::abs(vals[i].left), std::abs(vals[i].right)});
  }
  r.normalized = r.scale > 0.0 ? r.sup_residual / r.scale : 0.0;
  return r;
}

RangeReport range_residual(const SmtProfile& profile, const std::vector<double>& grid) {
  const double lo = profile.lo, hi = profile.hi;
  const auto dp = profile.dp_h;
  DpFunction h_dp = [dp, lo, hi](double t, int p) { return (t <= lo || t >= hi) ? 0.0 : dp(t, p); };
  return range_residual(h_dp, profile.dim.k, grid);
}

RangeReport range_residual(const SampledH& h, int k, const std::vector<double>& grid) {
  if (k > h.max_order()) throw std::invalid_argument("range_residual: spectral order insufficient");
  return range_residual([&h](double t, int p) { return h.dp(t, p); }, k, grid);
}

double iterated_integral(const std::function<double(double)>& psi, int i, double t, const QuadratureRule& quad,
                         double lo, double hi) {
  if (i < 0) throw std::invalid_argument("iterated_integral: i < 0");
  if (i == 0) return (t < lo || t > hi) ? 0.0 : psi(t);
  double fact = 1.0;
  for (int q = 2; q <= i - 1; ++q) fact *= q;
  const double b = std::min(t, hi);
  return quad.integrate(
      [&](double s) {
        double w = 1.0;
        const double half = 0.5 * (t * t - s * s);
        for (int q = 0; q < i - 1; ++q) w *= half;
        return s * psi(s) * w;
      },
      lo, b) /
         fact;
}

AntiDResult anti_D(const std::function<double(double)>& psi, int m, const QuadratureRule& quad, double lo,
                   double hi) {
  if (m < 0) throw std::invalid_argument("anti_D: m < 0");
  AntiDResult r;
  r.phi = [psi, m, quad, lo, hi](double t) { return iterated_integral(psi, m, t, quad, lo, hi); };
  for (int i = 1; i <= m; ++i) r.defects.push_back(iterated_integral(psi, i, 2.0, quad, lo, hi));
  return r;
}

namespace {

void fill_defects(GeneralRangeReport& rep, const std::function<double(double)>& psi, int m, double lo, double hi,
                  const QuadratureRule& quad) {
  const AntiDResult ad = anti_D(psi, m, quad, lo, hi);
  rep.defects = ad.defects;
  rep.defect_scale = sup_abs_on(psi, lo, hi);
  rep.max_defect = 0.0;
  for (double d : rep.defects) rep.max_defect = std::max(rep.max_defect, std::abs(d));
  rep.defects_ok = rep.max_defect <= moment_tolerance * rep.defect_scale;
}

}  // namespace

GeneralRangeReport general_range_check(const RadialProfile& f_ml, Dimension dim, int m,
                                       const std::vector<double>& grid, const QuadratureRule& quad) {
  if (m < 0) throw std::invalid_argument("general_range_check: m < 0");
  const int K = m + dim.k;
  const double lo = std::max(t_floor, 1.0 - f_ml.hi());
  const double hi = std::min(2.0 - t_floor, 1.0 + f_ml.hi());
  GeneralRangeReport rep;

  DpFunction phi_dp = [&](double t, int p) {
    return (t <= lo || t >= hi) ? 0.0 : phi_harmonic_dp(f_ml, dim, m, t, p, quad);
  };
  rep.range = range_residual(phi_dp, K, grid);

  auto psi = [&](double t) {
    if (t <= lo || t >= hi) return 0.0;
    return std::pow(t, dim.n - 2) * forward_harmonic(f_ml, dim, m, t, quad);
  };
  fill_defects(rep, psi, m, lo, hi, quad);

  // Two routes to h_ml: the Gegenbauer integral, and const * D^m phi both
  // directly and through a jet of ordinary derivatives.
  const double c = const_Kmn(dim.n, m);
  std::vector<double> pts;
  for (double t : grid) {
    if (1.0 - t > lo && 1.0 - t < hi) pts.push_back(1.0 - t);
    if (1.0 + t > lo && 1.0 + t < hi) pts.push_back(1.0 + t);
  }
  struct Cmp {
    double ref = 0.0, diff = 0.0;
  };
  const auto cmp = parallel_map<Cmp>(pts.size(), [&](std::size_t i) {
    const double t = pts[i];
    const double h = psi(t);
    const double via_dp = c * phi_harmonic_dp(f_ml, dim, m, t, m, quad);
    const double via_jet = c * d_operator(phi_harmonic_jet(f_ml, dim, m, t, m, quad), m);
    return Cmp{std::abs(h), std::max(std::abs(h - via_dp), std::abs(h - via_jet))};
  });
  double ref = 0.0, diff = 0.0;
  for (const auto& e : cmp) {
    ref = std::max(ref, e.ref);
    diff = std::max(diff, e.diff);
  }
  rep.route_mismatch = ref > 0.0 ? diff / ref : diff;
  return rep;
}

GeneralRangeReport general_range_check(const DpFunction& psi_dp, int psi_order, double lo, double hi,
                                       Dimension dim, int m, const std::vector<double>& grid,
                                       const QuadratureRule& quad) {
  if (m < 0) throw std::invalid_argument("general_range_check: m < 0");
  const int K = m + dim.k;
  if (K - m > psi_order) throw std::invalid_argument("general_range_check: data derivative order insufficient");
  GeneralRangeReport rep;
  auto psi = [psi_dp, lo, hi](double t) { return (t < lo || t > hi) ? 0.0 : psi_dp(t, 0); };
  DpFunction phi_dp = [&](double t, int j) {
    if (j <= m) return iterated_integral(psi, m - j, t, quad, lo, hi);
    return (t < lo || t > hi) ? 0.0 : psi_dp(t, j - m);
  };
  rep.range = range_residual(phi_dp, K, grid);
  fill_defects(rep, psi, m, lo, hi, quad);
  return rep;
}

GeneralRangeReport general_range_check(const SampledH& h_ml, Dimension dim, int m,
                                       const std::vector<double>& grid, const QuadratureRule& quad) {
  if (dim.k > h_ml.max_order()) throw std::invalid_argument("general_range_check: spectral order insufficient");
  DpFunction psi_dp = [&h_ml](double t, int p) { return h_ml.dp(t, p); };
  return general_range_check(psi_dp, h_ml.max_order(), h_ml.support_lo(), h_ml.support_hi(), dim, m, grid, quad);
}

}  // namespace smt
