#include "smt/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace smt {

namespace {

wide to_wide(const mpz_class& z) { return wide(z.get_str()); }

double to_double(const mpz_class& z) { return std::stod(z.get_str()); }

}  // namespace

DCoeffTable::DCoeffTable(int max_order) : max_order_(max_order) {
  if (max_order < 0) throw std::invalid_argument("DCoeffTable: negative order");
  const std::size_t n = index(max_order, max_order) + 1;
  exact_.assign(n, mpz_class(0));
  exact_[index(0, 0)] = 1;
  for (int p = 0; p < max_order; ++p) {
    for (int j = 0; j <= p + 1; ++j) {
      mpz_class v = 0;
      if (j >= 1) v += exact_[index(p, j - 1)];
      if (j <= p) v += mpz_class(j - 2 * p) * exact_[index(p, j)];
      exact_[index(p + 1, j)] = v;
    }
  }
  dbl_.resize(n);
  wide_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    dbl_[i] = to_double(exact_[i]);
    wide_[i] = to_wide(exact_[i]);
  }
}

std::size_t DCoeffTable::index(int p, int j) const {
  return static_cast<std::size_t>(p) * static_cast<std::size_t>(p + 1) / 2 + static_cast<std::size_t>(j);
}

const mpz_class& DCoeffTable::exact(int p, int j) const {
  if (p < 0 || p > max_order_ || j < 0 || j > p) throw std::out_of_range("DCoeffTable: index out of range");
  return exact_[index(p, j)];
}

double DCoeffTable::coeff(int p, int j) const {
  if (p < 0 || p > max_order_ || j < 0 || j > p) return 0.0;
  return dbl_[index(p, j)];
}

const wide& DCoeffTable::coeff_wide(int p, int j) const {
  if (p < 0 || p > max_order_ || j < 0 || j > p) throw std::out_of_range("DCoeffTable: index out of range");
  return wide_[index(p, j)];
}

const DCoeffTable& DCoeffTable::shared() {
  static const DCoeffTable table(48);
  return table;
}

BesselCoeffTable::BesselCoeffTable(int max_k) : max_k_(max_k) {
  if (max_k < 0) throw std::invalid_argument("BesselCoeffTable: negative order");
  const std::size_t n = index(max_k, max_k) + 1;
  exact_.resize(n);
  dbl_.resize(n);
  wide_.resize(n);
  for (int k = 0; k <= max_k; ++k) {
    for (int p = 0; p <= k; ++p) {
      mpz_class num, a, b;
      mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(2 * k - p));
      mpz_fac_ui(a.get_mpz_t(), static_cast<unsigned long>(p));
      mpz_fac_ui(b.get_mpz_t(), static_cast<unsigned long>(k - p));
      mpz_class den = a * b;
      mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k - p));
      mpz_class v = num / den;
      exact_[index(k, p)] = v;
      dbl_[index(k, p)] = to_double(v);
      wide_[index(k, p)] = to_wide(v);
    }
  }
}

std::size_t BesselCoeffTable::index(int k, int p) const {
  return static_cast<std::size_t>(k) * static_cast<std::size_t>(k + 1) / 2 + static_cast<std::size_t>(p);
}

const mpz_class& BesselCoeffTable::exact(int k, int p) const {
  if (k < 0 || k > max_k_ || p < 0 || p > k) throw std::out_of_range("BesselCoeffTable: index out of range");
  return exact_[index(k, p)];
}

double BesselCoeffTable::coeff(int k, int p) const {
  if (k < 0 || k > max_k_ || p < 0 || p > k) throw std::out_of_range("BesselCoeffTable: index out of range");
  return dbl_[index(k, p)];
}

const wide& BesselCoeffTable::coeff_wide(int k, int p) const {
  if (k < 0 || k > max_k_ || p < 0 || p > k) throw std::out_of_range("BesselCoeffTable: index out of range");
  return wide_[index(k, p)];
}

const BesselCoeffTable& BesselCoeffTable::shared() {
  static const BesselCoeffTable table(48);
  return table;
}

double dp_inv_poly(int m, int d, double t) {
  if (m < 0 || d < 0) throw std::invalid_argument("dp_inv_poly: negative index");
  if (t == 0.0 || t == -1.0) throw std::domain_error("dp_inv_poly: t in {0, -1}");
  const auto& tab = BesselCoeffTable::shared();
  double acc = 0.0;
  for (int r = 0; r <= m; ++r) {
    // binom(d+r-1, r) r! = d (d+1) ... (d+r-1), and 1 for r = 0.
    double rising = 1.0;
    for (int i = 0; i < r; ++i) rising *= static_cast<double>(d + i);
    const double term = tab.coeff(m, r) * rising /
                        (std::pow(t, 2 * m + 1 - r) * std::pow(t + 1.0, d + r));
    acc += term;
  }
  return (m % 2 ? -acc : acc);
}

double gegenbauer(int m, double alpha, double x) {
  if (m < 0) throw std::invalid_argument("gegenbauer: m < 0");
  if (!(alpha > 0.0)) throw std::invalid_argument("gegenbauer: alpha must be positive");
  if (m == 0) return 1.0;
  double c0 = 1.0;
  double c1 = 2.0 * alpha * x;
  for (int i = 1; i < m; ++i) {
    const double c2 = (2.0 * x * (i + alpha) * c1 - (i + 2.0 * alpha - 1.0) * c0) / (i + 1.0);
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

std::vector<double> bessel_zeros(int k, int count) {
  require_order(k);
  if (count < 0) throw std::invalid_argument("bessel_zeros: negative count");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  const double step = 0.5;
  const double limit = (count + k + 4) * 2.0 * pi_v<double>() + 10.0;
  double a = switch_radius(k);
  double fa = raw_j(k, a);
  while (static_cast<int>(out.size()) < count) {
    const double b = a + step;
    if (b > limit) throw std::runtime_error("bessel_zeros: bracketing failed for k=" + std::to_string(k));
    const double fb = raw_j(k, b);
    if (fb == 0.0) {
      out.push_back(b);
      a = b + 1e-9;
      fa = raw_j(k, a);
      continue;
    }
    if ((fa < 0) != (fb < 0)) {
      double lo = a, hi = b, flo = fa;
      while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = raw_j(k, mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      out.push_back(0.5 * (lo + hi));
    }
    a = b;
    fa = fb;
  }
  return out;
}

double bessel_zero(int k, int i) {
  if (i < 1) throw std::invalid_argument("bessel_zero: i must be >= 1");
  return bessel_zeros(k, i).back();
}

}  // namespace smt
