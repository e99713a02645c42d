#include "smt/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "smt/precision.hpp"
#include "smt/specfun.hpp"

namespace smt {

namespace {

using J = Jet<double>;

J zero_jet(double r, int order) { return J::constant(r, 0.0, order); }

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

void check_t(double t) {
  if (!(t > 0.0 && t < 2.0)) throw std::domain_error("transform: t = " + std::to_string(t) + " outside (0, 2)");
}

struct Range {
  double a, b;
  bool empty() const { return !(b > a); }
};

Range support_range(const RadialProfile& f, double t) {
  return {std::max(std::abs(1.0 - t), f.lo()), std::min(1.0, f.hi())};
}

double radial_constant(Dimension dim) { return omega(dim.n - 1) / (std::pow(4.0, dim.k) * omega(dim.n)); }

}  // namespace

Dimension make_dimension(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("dimension must be odd and >= 3, got " + std::to_string(n));
  return {n, (n - 3) / 2};
}

double omega(int n) {
  if (n < 1) throw std::invalid_argument("omega: n must be >= 1");
  return 2.0 * std::pow(pi_v<double>(), 0.5 * n) / std::tgamma(0.5 * n);
}

double q_kernel(double t, double u) {
  const double a = (1.0 + t) * (1.0 + t) - u * u;
  const double b = u * u - (1.0 - t) * (1.0 - t);
  return a * b;
}

RadialProfile::RadialProfile(Evaluator eval, double lo, double hi, bool test_only)
    : eval_(std::make_shared<const Evaluator>(std::move(eval))), lo_(lo), hi_(hi), test_only_(test_only) {
  if (!(lo >= 0.0 && lo < hi)) throw std::invalid_argument("RadialProfile: need 0 <= lo < hi");
  if (test_only ? hi > 1.0 : hi >= 1.0)
    throw std::invalid_argument("RadialProfile: support must stay inside the unit ball");
}

RadialProfile RadialProfile::bump(double center, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("bump: width must be positive");
  const double lo = center - width, hi = center + width;
  if (lo < 0.0 || hi >= 1.0) throw std::invalid_argument("bump: support must lie in [0, 1)");
  auto eval = [center, width](double r, int order) -> J {
    const double s = (r - center) / width;
    if (std::abs(s) >= 1.0) return zero_jet(r, order);
    const double a = 1.0 - s * s;
    if (1.0 / a > 700.0) return zero_jet(r, order);
    const J S = (J::variable(r, order) - center) / width;
    const J A = 1.0 - S * S;
    return exp(-1.0 / A);
  };
  return RadialProfile(eval, lo, hi);
}

RadialProfile RadialProfile::polynomial(std::vector<double> coeffs, double lo, double hi) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  auto eval = [coeffs, lo, hi](double r, int order) -> J {
    if (r < lo || r > hi) return zero_jet(r, order);
    const J x = J::variable(r, order);
    J acc = J::constant(r, coeffs.back(), order);
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
  };
  return RadialProfile(eval, lo, hi, true);
}

RadialProfile RadialProfile::derivative(int m) const {
  if (m < 0) throw std::invalid_argument("RadialProfile::derivative: m < 0");
  auto base = eval_;
  auto eval = [base, m](double r, int order) -> J { return (*base)(r, order + m).differentiated(m); };
  return RadialProfile(eval, lo_, hi_, test_only_);
}

RadialProfile RadialProfile::times_power(int p) const {
  if (p < 0) throw std::invalid_argument("RadialProfile::times_power: p < 0");
  auto base = eval_;
  auto eval = [base, p](double r, int order) -> J { return (*base)(r, order) * pow(J::variable(r, order), p); };
  return RadialProfile(eval, lo_, hi_, test_only_);
}

RadialProfile RadialProfile::scaled(double s) const {
  auto base = eval_;
  auto eval = [base, s](double r, int order) -> J { return (*base)(r, order) * s; };
  return RadialProfile(eval, lo_, hi_, test_only_);
}

Jet<double> RadialProfile::jet(double r, int order) const {
  if (r < lo_ || r > hi_) return zero_jet(r, order);
  return (*eval_)(r, order);
}

double RadialProfile::operator()(double r) const { return jet(r, 0).value(); }

double SmtProfile::g(double t) const {
  if (t < t_floor) throw std::domain_error("g requested below t_floor");
  return h(t) / ipow(t, dim.n - 2);
}

double kernel_dp(int K, int p, double t, double u) {
  if (K < 0 || p < 0) throw std::invalid_argument("kernel_dp: negative order");
  if (p > 2 * K) return 0.0;
  const double x = 0.5 * t * t;
  std::vector<double> d(static_cast<std::size_t>(p) + 1, 0.0);
  d[0] = q_kernel(t, u);
  if (p >= 1) d[1] = 4.0 * (u * u + 1.0 - t * t);
  if (p >= 2) d[2] = -8.0;
  const J q = J::from_derivatives(x, d);
  return pow(q, K).derivative(p);
}

Jet<double> kernel_t_jet(int K, double t, double u, int order) {
  const J T = J::variable(t, order);
  const J a = (1.0 + T) * (1.0 + T) - u * u;
  const J b = u * u - (1.0 - T) * (1.0 - T);
  return pow(a * b, K);
}

double forward_h(const RadialProfile& f, Dimension dim, double t, const QuadratureRule& quad) {
  check_t(t);
  const Range r = support_range(f, t);
  if (r.empty()) return 0.0;
  const int k = dim.k;
  const double c = radial_constant(dim);
  return c * quad.integrate([&](double u) { return u * f(u) * ipow(q_kernel(t, u), k); }, r.a, r.b);
}

double forward_radial(const RadialProfile& f, Dimension dim, double t, const QuadratureRule& quad) {
  if (t < t_floor) throw std::domain_error("g requested below t_floor");
  return forward_h(f, dim, t, quad) / ipow(t, dim.n - 2);
}

double funk_hecke_forward(const RadialProfile& f, Dimension dim, double t, const QuadratureRule& quad) {
  check_t(t);
  if (t < t_floor) throw std::domain_error("g requested below t_floor");
  // u^2 = 1 + t^2 + 2 s t, so the support [lo, hi] maps to an s-interval.
  const double base = 1.0 + t * t;
  const double s_lo = std::max(-1.0, (f.lo() * f.lo() - base) / (2.0 * t));
  const double s_hi = std::min(1.0, (f.hi() * f.hi() - base) / (2.0 * t));
  if (!(s_hi > s_lo)) return 0.0;
  const int k = dim.k;
  const double c = omega(dim.n - 1) / omega(dim.n);
  return c * quad.integrate(
                 [&](double s) {
                   const double u2 = std::max(0.0, base + 2.0 * s * t);
                   return f(std::sqrt(u2)) * ipow(1.0 - s * s, k);
                 },
                 s_lo, s_hi);
}

double forward_h_dp(const RadialProfile& f, Dimension dim, double t, int p, const QuadratureRule& quad) {
  if (p < 0 || p > dim.k) throw std::invalid_argument("forward_h_dp: need 0 <= p <= k");
  if (p == 0) return forward_h(f, dim, t, quad);
  check_t(t);
  const Range r = support_range(f, t);
  if (r.empty()) return 0.0;
  const double c = radial_constant(dim);
  return c * quad.integrate([&](double u) { return u * f(u) * kernel_dp(dim.k, p, t, u); }, r.a, r.b);
}

Jet<double> forward_h_jet(const RadialProfile& f, Dimension dim, double t, int order, const QuadratureRule& quad) {
  check_t(t);
  if (order < 0) throw std::invalid_argument("forward_h_jet: negative order");
  const Range r = support_range(f, t);
  if (r.empty()) return zero_jet(t, order);
  const J T = J::variable(t, order);
  // Lower limit a(t): whichever of |1-t| and lo is active at t.
  J a = J::constant(t, f.lo(), order);
  if (std::abs(1.0 - t) > f.lo()) a = (t <= 1.0) ? 1.0 - T : T - 1.0;
  const J len = r.b - a;
  std::vector<double> vs, ws;
  quad.points(0.0, 1.0, vs, ws);
  J acc = zero_jet(t, order);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const J u = a + len * vs[i];
    const J fu = compose(f.jet(u.value(), order), u);
    const J q = ((1.0 + T) * (1.0 + T) - u * u) * (u * u - (1.0 - T) * (1.0 - T));
    acc += (u * fu * pow(q, dim.k) * len) * ws[i];
  }
  return acc * radial_constant(dim);
}

SmtProfile make_smt_profile(const RadialProfile& f, Dimension dim, const QuadratureRule& quad) {
  SmtProfile s;
  s.dim = dim;
  s.k_eff = dim.k;
  s.lo = std::max(0.0, 1.0 - f.hi());
  s.hi = std::min(2.0, 1.0 + f.hi());
  s.dp_h = [f, dim, quad](double t, int p) { return forward_h_dp(f, dim, t, p, quad); };
  return s;
}

double forward_harmonic(const RadialProfile& f, Dimension dim, int m, double t, const QuadratureRule& quad) {
  if (m < 0) throw std::invalid_argument("forward_harmonic: m < 0");
  check_t(t);
  if (t < t_floor) throw std::domain_error("g requested below t_floor");
  const Range r = support_range(f, t);
  if (r.empty()) return 0.0;
  const double alpha = 0.5 * (dim.n - 2);
  const int k = dim.k;
  const double c = omega(dim.n - 1) / (ipow(t, dim.n - 2) * omega(dim.n) * gegenbauer(m, alpha, 1.0));
  return c * quad.integrate(
                 [&](double u) {
                   const double x = (1.0 + u * u - t * t) / (2.0 * u);
                   if (std::abs(x) > 1.0 + 1e-10)
                     throw std::logic_error("forward_harmonic: Gegenbauer argument left [-1, 1]");
                   const double xc = std::clamp(x, -1.0, 1.0);
                   // 1 - x^2 = Q / (4u^2).
                   const double w = std::max(0.0, q_kernel(t, u)) / (4.0 * u * u);
                   return ipow(u, dim.n - 2) * f(u) * gegenbauer(m, alpha, xc) * ipow(w, k);
                 },
                 r.a, r.b);
}

double phi_harmonic(const RadialProfile& f, Dimension dim, int m, double t, const QuadratureRule& quad) {
  return phi_harmonic_dp(f, dim, m, t, 0, quad);
}

double phi_harmonic_dp(const RadialProfile& f, Dimension dim, int m, double t, int p, const QuadratureRule& quad) {
  if (m < 0) throw std::invalid_argument("phi_harmonic: m < 0");
  const int K = m + dim.k;
  if (p < 0 || p > K) throw std::invalid_argument("phi_harmonic_dp: need 0 <= p <= m + k");
  check_t(t);
  const Range r = support_range(f, t);
  if (r.empty()) return 0.0;
  return quad.integrate(
      [&](double u) {
        const double kern = (p == 0) ? ipow(q_kernel(t, u), K) : kernel_dp(K, p, t, u);
        return std::pow(u, 1 - m) * f(u) * kern;
      },
      r.a, r.b);
}

Jet<double> phi_harmonic_jet(const RadialProfile& f, Dimension dim, int m, double t, int order,
                             const QuadratureRule& quad) {
  if (m < 0) throw std::invalid_argument("phi_harmonic: m < 0");
  const int K = m + dim.k;
  if (order < 0 || order > K) throw std::invalid_argument("phi_harmonic_jet: need 0 <= order <= m + k");
  check_t(t);
  const Range r = support_range(f, t);
  if (r.empty()) return zero_jet(t, order);
  std::vector<double> us, ws;
  quad.points(r.a, r.b, us, ws);
  J acc = zero_jet(t, order);
  for (std::size_t i = 0; i < us.size(); ++i) {
    const double u = us[i];
    const double fu = f(u);
    if (fu == 0.0) continue;
    acc += kernel_t_jet(K, t, u, order) * (ws[i] * std::pow(u, 1 - m) * fu);
  }
  return acc;
}

double const_Kmn(int n, int m) {
  const Dimension dim = make_dimension(n);
  if (m < 0) throw std::invalid_argument("const_Kmn: m < 0");
  const double alpha = 0.5 * (n - 2);
  double fact = 1.0;
  for (int i = 2; i <= m; ++i) fact *= i;
  // K carries (-1)^m and the prefactor another (-1)^m; they cancel.
  const double K = std::tgamma(alpha + 0.5) * std::tgamma(m + 2.0 * alpha) /
                   (std::pow(2.0, m) * fact * std::tgamma(2.0 * alpha) * std::tgamma(m + alpha + 0.5));
  const double c =
      K * omega(n - 1) / (std::pow(4.0, m + dim.k) * omega(n) * gegenbauer(m, alpha, 1.0));
  if (!(c > 0.0)) throw std::logic_error("const_Kmn: constant must be positive");
  return c;
}

}  // namespace smt
