#include "smt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "smt/parallel.hpp"
#include "smt/precision.hpp"
#include "smt/specfun.hpp"

namespace smt {

namespace {

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

template <class T>
T relative(const T& lhs, const T& rhs, const T& scale) {
  using std::abs;
  using std::max;
  const T den = max(max(abs(lhs), abs(rhs)), T(residual_floor) * scale);
  if (den == T(0)) return T(0);
  return abs(lhs - rhs) / den;
}

template <class T>
IdentityResidual mk_impl(int k, double lambda_d, double t_d) {
  using J = Jet<T>;
  using std::abs;
  if (k < 0) throw std::invalid_argument("mk_residual: k < 0");
  if (!(lambda_d > 0.0)) throw std::domain_error("mk_residual: lambda must be positive");
  if (t_d == 0.0 || t_d == -1.0) throw std::domain_error("mk_residual: t must avoid 0 and -1");
  const T lambda(lambda_d), t(t_d);
  const auto& tab = BesselCoeffTable::shared();

  const J T1 = J::variable(t, k);
  const J onep = T1 + T(1);
  const J rj = raw_j(k, onep * lambda);
  J pw = onep;  // (1+t)^{p+1}
  T lhs = T(0);
  for (int p = 0; p <= k; ++p) {
    const J F = pw * rj / T1;
    const T term = tab.coeff_as<T>(k, p) * d_operator(F, p);
    lhs += (p % 2 ? -term : term);
    pw = pw * onep;
  }

  T lam_pow = T(1);
  for (int i = 0; i < 2 * k + 1; ++i) lam_pow *= lambda;
  const T s = dp_sinc(k, lambda * t), c = dp_cosc(k, lambda * t);
  const T jl = raw_j(k, lambda), yl = raw_y(k, lambda);
  T rhs = lam_pow * (s * yl + c * jl);
  if (k % 2) rhs = -rhs;
  const T scale = lam_pow * (abs(s * yl) + abs(c * jl));
  return IdentityResidual{static_cast<double>(lhs), static_cast<double>(rhs),
                          static_cast<double>(relative(lhs, rhs, scale))};
}

}  // namespace

int oscillatory_panels(double lambda, double a, double b) {
  if (!(b > a)) return 1;
  const double per = 4.0 * std::abs(lambda) * (b - a) / (2.0 * pi_v<double>());
  return std::max(8, static_cast<int>(std::ceil(per)));
}

double hankel(const SupportedFunction& g, int k, double lambda, const QuadratureRule& quad) {
  if (lambda < 0.0) throw std::domain_error("hankel: lambda < 0");
  const int panels = oscillatory_panels(lambda, g.lo, g.hi);
  return quad.integrate_panels(
      [&](double t) { return g.f(t) * sph_bessel_j(k, lambda * t) * ipow(t, 2 * k + 2); }, g.lo, g.hi, panels);
}

double hankel_via_h(const SupportedFunction& h, int k, double lambda, const QuadratureRule& quad) {
  if (lambda < 0.0) throw std::domain_error("hankel: lambda < 0");
  const int panels = oscillatory_panels(lambda, h.lo, h.hi);
  return quad.integrate_panels([&](double t) { return sph_bessel_j(k, lambda * t) * t * h.f(t); }, h.lo, h.hi,
                               panels);
}

HankelResult hankel_sweep(const SupportedFunction& g, int k, const std::vector<double>& lambdas,
                          const QuadratureRule& quad) {
  for (std::size_t i = 1; i < lambdas.size(); ++i)
    if (!(lambdas[i] > lambdas[i - 1])) throw std::invalid_argument("hankel_sweep: grid must increase strictly");
  HankelResult r;
  r.lambda_grid = lambdas;
  r.values = parallel_map<double>(lambdas.size(), [&](std::size_t i) { return hankel(g, k, lambdas[i], quad); });
  return r;
}

IdentityResidual cross_product_residual(const SupportedFunction& h, int k, double lambda, const QuadratureRule& quad) {
  if (!(lambda > 0.0)) throw std::domain_error("cross_product_residual: lambda must be positive");
  if (!(h.lo > 0.0)) throw std::domain_error("cross_product_residual: support touches 0");
  const int panels = oscillatory_panels(lambda, h.lo, h.hi);
  std::vector<double> ts, ws;
  quad.with_panels(panels).points(h.lo, h.hi, ts, ws);
  double A = 0.0, B = 0.0, Aabs = 0.0, Babs = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double t = ts[i];
    const double th = t * h.f(t);
    if (th == 0.0) continue;
    const double a = raw_j(k, lambda * t) * th * ws[i];
    const double b = raw_y(k, lambda * t) * th * ws[i];
    A += a;
    B += b;
    Aabs += std::abs(a);
    Babs += std::abs(b);
  }
  const double jl = raw_j(k, lambda), yl = raw_y(k, lambda);
  IdentityResidual r;
  r.lhs = A * yl;
  r.rhs = B * jl;
  r.residual = relative(r.lhs, r.rhs, Aabs * std::abs(yl) + Babs * std::abs(jl));
  return r;
}

IdentityResidual mk_residual(int k, double lambda, double t) { return mk_impl<double>(k, lambda, t); }

IdentityResidual mk_residual_wide(int k, double lambda, double t) { return mk_impl<wide>(k, lambda, t); }

ZeroOracleReport bessel_zero_vanishing(const SupportedFunction& g, Dimension dim, int m, int count,
                                       const QuadratureRule& quad) {
  if (count < 1) throw std::invalid_argument("bessel_zero_vanishing: count must be >= 1");
  if (m < 0) throw std::invalid_argument("bessel_zero_vanishing: m < 0");
  ZeroOracleReport r;
  r.zeros = bessel_zeros(m + dim.k, count);
  const double top = r.zeros.back();

  // One table of g t^{2k+2} on a rule fine enough for the largest lambda.
  std::vector<double> ts, ws;
  quad.with_panels(oscillatory_panels(top, g.lo, g.hi)).points(g.lo, g.hi, ts, ws);
  const auto gv = parallel_map<double>(ts.size(), [&](std::size_t i) { return g.f(ts[i]); });
  std::vector<double> wg(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) wg[i] = ws[i] * gv[i] * ipow(ts[i], 2 * dim.k + 2);
  auto F = [&](double lambda) {
    double s = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i)
      if (wg[i] != 0.0) s += wg[i] * sph_bessel_j(dim.k, lambda * ts[i]);
    return std::abs(s);
  };

  r.values = parallel_map<double>(r.zeros.size(), [&](std::size_t i) { return F(r.zeros[i]); });
  const int grid = 400;
  const auto sweep = parallel_map<double>(static_cast<std::size_t>(grid) + 1,
                                          [&](std::size_t i) { return F(top * static_cast<double>(i) / grid); });
  r.max_abs = 0.0;
  for (double v : sweep) r.max_abs = std::max(r.max_abs, v);
  for (double v : r.values) r.max_abs = std::max(r.max_abs, v);
  r.max_ratio = 0.0;
  if (r.max_abs > 0.0)
    for (double v : r.values) r.max_ratio = std::max(r.max_ratio, v / r.max_abs);
  return r;
}

std::vector<std::pair<double, double>> mk_samples(std::uint64_t seed, int count, double gap) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lam(0.5, 20.0), tt(-3.0, 3.0);
  std::vector<std::pair<double, double>> out;
  while (static_cast<int>(out.size()) < count) {
    const double l = lam(rng);
    const double t = tt(rng);
    if (std::abs(t) < gap || std::abs(t + 1.0) < gap) continue;
    out.emplace_back(l, t);
  }
  return out;
}

}  // namespace smt
