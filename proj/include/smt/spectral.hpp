#pragma once

// Hankel transforms and the two Bessel identities: the cross product
//   (int j(lt) t h dt) y(l) = (int y(lt) t h dt) j(l)
// satisfied by range data, and the M_k identity. Both are evaluated in the
// raw D^k normalization, where the constants cancel.

#include <cstdint>
#include <functional>
#include <vector>

#include "smt/quadrature.hpp"
#include "smt/transform.hpp"

namespace smt {

/// Relative residuals use max(|lhs|, |rhs|, residual_floor * scale).
inline constexpr double residual_floor = 1e-14;

/// A function on (0, 2) vanishing outside [lo, hi].
struct SupportedFunction {
  std::function<double(double)> f;
  double lo = 0.0;
  double hi = 2.0;
};

struct HankelResult {
  std::vector<double> lambda_grid;
  std::vector<double> values;
};

/// Panels for an integral of an oscillation with frequency lambda over [a, b].
int oscillatory_panels(double lambda, double a, double b);

/// F_{k+1/2}(g)(lambda) = int g(t) j_{k+1/2}(lambda t) t^{2k+2} dt.
double hankel(const SupportedFunction& g, int k, double lambda, const QuadratureRule& quad);

/// The same transform written through h = t^{2k+1} g: int j(lambda t) t h dt.
double hankel_via_h(const SupportedFunction& h, int k, double lambda, const QuadratureRule& quad);

HankelResult hankel_sweep(const SupportedFunction& g, int k, const std::vector<double>& lambdas,
                          const QuadratureRule& quad);

struct IdentityResidual {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

IdentityResidual cross_product_residual(const SupportedFunction& h, int k, double lambda, const QuadratureRule& quad);

/// M_k identity at (lambda, t). The left side is assembled from jets and the
/// D operator, the right side from the closed D^p kernels.
IdentityResidual mk_residual(int k, double lambda, double t);

/// The same identity evaluated in 50-digit arithmetic.
IdentityResidual mk_residual_wide(int k, double lambda, double t);

struct ZeroOracleReport {
  std::vector<double> zeros;
  std::vector<double> values;  // |F(zero_i)|
  double max_abs = 0.0;        // max |F| over a lambda grid up to the last zero
  double max_ratio = 0.0;      // max_i values[i] / max_abs
};

/// F_{(n-2)/2}(g) at the first `count` positive zeros of j_{m+(n-2)/2}.
ZeroOracleReport bessel_zero_vanishing(const SupportedFunction& g, Dimension dim, int m, int count,
                                       const QuadratureRule& quad);

/// Seeded (lambda, t) samples with lambda in [0.5, 20], t in [-3, 3], kept at
/// least `gap` away from 0 and -1.
std::vector<std::pair<double, double>> mk_samples(std::uint64_t seed, int count, double gap = 0.05);

}  // namespace smt
