#pragma once

// Spherical Bessel functions of half-integer order, the closed-form D^p
// kernels of sin x / x and cos x / x, the D = (1/t) d/dt operator on jets,
// Gegenbauer polynomials and Bessel zeros.
//
// Two normalizations are in play. The normalized j_a has j_a(0) = 1. The raw
// one is D^k(sin x / x). They differ by c_k = (-1)^k / (2k+1)!!.

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "smt/jet.hpp"
#include "smt/precision.hpp"

namespace smt {

template <class S>
struct scalar_of {
  using type = S;
};
template <class T>
struct scalar_of<Jet<T>> {
  using type = T;
};
template <class S>
using scalar_t = typename scalar_of<S>::type;

/// a[p][j] with D^p f(t) = sum_j a[p][j] t^{j-2p} f^{(j)}(t). Integer valued.
class DCoeffTable {
 public:
  explicit DCoeffTable(int max_order);

  int max_order() const { return max_order_; }
  const mpz_class& exact(int p, int j) const;
  double coeff(int p, int j) const;
  const wide& coeff_wide(int p, int j) const;

  template <class T>
  T coeff_as(int p, int j) const {
    if constexpr (std::is_same_v<T, double>)
      return coeff(p, j);
    else
      return T(coeff_wide(p, j));
  }

  /// Process-wide immutable table, built once.
  static const DCoeffTable& shared();

 private:
  std::size_t index(int p, int j) const;
  int max_order_;
  std::vector<mpz_class> exact_;
  std::vector<double> dbl_;
  std::vector<wide> wide_;
};

/// C(k,p) = (2k-p)! / (p! 2^{k-p} (k-p)!) as an exact integer and floated.
class BesselCoeffTable {
 public:
  explicit BesselCoeffTable(int max_k);
  int max_k() const { return max_k_; }
  const mpz_class& exact(int k, int p) const;
  double coeff(int k, int p) const;
  const wide& coeff_wide(int k, int p) const;

  template <class T>
  T coeff_as(int k, int p) const {
    if constexpr (std::is_same_v<T, double>)
      return coeff(k, p);
    else
      return T(coeff_wide(k, p));
  }

  static const BesselCoeffTable& shared();

 private:
  std::size_t index(int k, int p) const;
  int max_k_;
  std::vector<mpz_class> exact_;
  std::vector<double> dbl_;
  std::vector<wide> wide_;
};

inline void require_order(int k) {
  if (k < 0) throw std::invalid_argument("half-integer order requires k >= 0");
}

/// c_k = (-1)^k / (2k+1)!!, the factor with raw = c_k * normalized.
template <class T = double>
T bessel_norm(int k) {
  require_order(k);
  T df = T(1);
  for (int i = 3; i <= 2 * k + 1; i += 2) df *= T(i);
  return (k % 2 ? T(-1) : T(1)) / df;
}

inline double switch_radius(int k) { return 0.5 * (2 * k + 1); }

namespace detail {

template <class S>
S int_power(const S& x, int e) {
  if constexpr (std::is_arithmetic_v<S>) {
    S r = S(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
  } else {
    S r = x * scalar_t<S>(0) + scalar_t<S>(1);
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
  }
}

template <class S>
S trig_sum(int p, const S& x, bool cosine) {
  using T = scalar_t<S>;
  using std::cos;
  using std::sin;
  const auto& tab = BesselCoeffTable::shared();
  if (p > tab.max_k()) throw std::out_of_range("dp kernel order exceeds coefficient table");
  if (value_of(x) == T(0)) throw std::domain_error("dp kernel evaluated at x = 0");
  const S s = sin(x);
  const S c = cos(x);
  const S inv = T(1) / x;
  // x^{l-2p-1} for l = 0: start from x^{-(2p+1)} and multiply by x.
  S xp = int_power(inv, 2 * p + 1);
  S acc = xp * T(0);
  for (int l = 0; l <= p; ++l) {
    const T cpl = tab.coeff_as<T>(p, l);
    if (l % 2 == 0) {
      const int e = p + l / 2;
      const T sign = (e % 2) ? T(-1) : T(1);
      acc += (cosine ? c : s) * (xp * (sign * cpl));
    } else {
      const int e = p + (l + 1) / 2;
      const T sign = (e % 2) ? T(-1) : T(1);
      if (cosine)
        acc -= s * (xp * (sign * cpl));
      else
        acc += c * (xp * (sign * cpl));
    }
    xp = xp * x;
  }
  return acc;
}

/// sum_i (-x^2/4)^i / (i! (k+3/2)_i), the normalized j_{k+1/2} series.
template <class S>
S bessel_series(int k, const S& x) {
  using T = scalar_t<S>;
  using std::abs;
  const S q = x * x * T(-0.25);
  S term = x * T(0) + T(1);
  S sum = term;
  const T a1 = T(k) + T(1.5);
  const T tiny = eps_v<T>() * T(1e-2);
  for (int i = 1; i < 80; ++i) {
    term = term * q / (T(i) * (a1 + T(i - 1)));
    sum += term;
    if (abs(value_of(term)) < tiny * abs(value_of(sum))) break;
  }
  return sum;
}

}  // namespace detail

/// D^p (sin x / x) from the closed finite sum.
template <class S>
S dp_sinc(int p, const S& x) {
  if (p < 0) throw std::invalid_argument("dp_sinc: p < 0");
  return detail::trig_sum(p, x, false);
}

/// D^p (cos x / x) from the closed finite sum.
template <class S>
S dp_cosc(int p, const S& x) {
  if (p < 0) throw std::invalid_argument("dp_cosc: p < 0");
  return detail::trig_sum(p, x, true);
}

/// D^m (1 / (t (t+1)^d)).
double dp_inv_poly(int m, int d, double t);

/// D^k (sin x / x). Below the switch radius this is c_k times the series.
template <class S>
S raw_j(int k, const S& x) {
  using std::abs;
  require_order(k);
  if (abs(value_of(x)) < switch_radius(k))
    return detail::bessel_series(k, x) * bessel_norm<scalar_t<S>>(k);
  return dp_sinc(k, x);
}

/// D^k (cos x / x).
template <class S>
S raw_y(int k, const S& x) {
  require_order(k);
  if (value_of(x) == scalar_t<S>(0)) throw std::domain_error("raw_y: pole at x = 0");
  return dp_cosc(k, x);
}

/// Normalized j_{k+1/2}, equal to 1 at the origin.
template <class S>
S sph_bessel_j(int k, const S& x) {
  using std::abs;
  require_order(k);
  if (abs(value_of(x)) < switch_radius(k)) return detail::bessel_series(k, x);
  return dp_sinc(k, x) / bessel_norm<scalar_t<S>>(k);
}

/// Normalized y_{k+1/2}, the cos x / x counterpart with the same constant.
template <class S>
S sph_bessel_y(int k, const S& x) {
  return raw_y(k, x) / bessel_norm<scalar_t<S>>(k);
}

/// D^p f at jet.point(), from the ordinary derivatives carried by the jet.
template <class T>
T d_operator(const Jet<T>& jet, int p) {
  if (p < 0) throw std::invalid_argument("d_operator: p < 0");
  if (jet.order() < p) throw std::invalid_argument("d_operator: jet order below requested D order");
  if (p == 0) return jet.value();
  const T x = jet.point();
  if (x == T(0)) throw std::domain_error("d_operator: t = 0");
  const auto& tab = DCoeffTable::shared();
  if (p > tab.max_order()) throw std::out_of_range("d_operator: order exceeds table");
  const T inv = T(1) / x;
  // t^{j-2p} for j = 1 is t^{1-2p}.
  T tp = T(1);
  for (int i = 0; i < 2 * p - 1; ++i) tp *= inv;
  T acc = T(0);
  for (int j = 1; j <= p; ++j) {
    acc += tab.coeff_as<T>(p, j) * tp * jet.derivative(j);
    tp *= x;
  }
  return acc;
}

/// C_m^{alpha}(x) by the three-term recurrence.
double gegenbauer(int m, double alpha, double x);

/// i-th positive zero of j_{k+1/2}.
double bessel_zero(int k, int i);

/// First `count` positive zeros of j_{k+1/2}, in increasing order.
std::vector<double> bessel_zeros(int k, int count);

}  // namespace smt
