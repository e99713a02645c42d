#include "smt/chebyshev.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "smt/precision.hpp"
#include "smt/specfun.hpp"

namespace smt {

SampledH::SampledH(double a, double b, std::vector<double> samples, int max_order)
    : a_(a), b_(b), samples_(std::move(samples)) {
  if (!(a > 0.0 && b < 2.0 && a < b)) throw std::invalid_argument("SampledH: need 0 < a < b < 2");
  const int N = static_cast<int>(samples_.size()) - 1;
  if (N < 2) throw std::invalid_argument("SampledH: need at least 3 samples");
  if (max_order < 0) throw std::invalid_argument("SampledH: negative max_order");
  const double pi = pi_v<double>();

  const auto t = nodes(a, b, N);
  int first = 0, last = N;
  while (first <= N && samples_[static_cast<std::size_t>(first)] == 0.0) ++first;
  while (last >= 0 && samples_[static_cast<std::size_t>(last)] == 0.0) --last;
  if (first > last) {
    support_lo_ = support_hi_ = a;
  } else {
    support_hi_ = first > 0 ? t[static_cast<std::size_t>(first - 1)] : b;
    support_lo_ = last < N ? t[static_cast<std::size_t>(last + 1)] : a;
  }

  std::vector<double> c(static_cast<std::size_t>(N) + 1, 0.0);
  for (int k = 0; k <= N; ++k) {
    double s = 0.0;
    for (int j = 0; j <= N; ++j) {
      const double w = (j == 0 || j == N) ? 0.5 : 1.0;
      s += w * samples_[static_cast<std::size_t>(j)] * std::cos(pi * j * k / N);
    }
    s *= 2.0 / N;
    if (k == 0 || k == N) s *= 0.5;
    c[static_cast<std::size_t>(k)] = s;
  }
  coeffs_.push_back(c);
  const double scale = 2.0 / (b - a);
  for (int order = 1; order <= max_order; ++order) {
    const auto& prev = coeffs_.back();
    std::vector<double> d(prev.size() + 1, 0.0);
    for (int k = N; k >= 1; --k)
      d[static_cast<std::size_t>(k - 1)] = d[static_cast<std::size_t>(k + 1)] + 2.0 * k * prev[static_cast<std::size_t>(k)];
    d[0] *= 0.5;
    d.resize(prev.size());
    for (auto& v : d) v *= scale;
    coeffs_.push_back(std::move(d));
  }
}

std::vector<double> SampledH::nodes(double a, double b, int degree) {
  if (degree < 2) throw std::invalid_argument("SampledH::nodes: degree must be >= 2");
  std::vector<double> t(static_cast<std::size_t>(degree) + 1);
  const double pi = pi_v<double>();
  for (int j = 0; j <= degree; ++j)
    t[static_cast<std::size_t>(j)] = 0.5 * (a + b) + 0.5 * (b - a) * std::cos(pi * j / degree);
  return t;
}

SampledH SampledH::from_function(const std::function<double(double)>& f, double a, double b, int degree,
                                 int max_order) {
  const auto t = nodes(a, b, degree);
  std::vector<double> v(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) v[i] = f(t[i]);
  return SampledH(a, b, std::move(v), max_order);
}

double SampledH::derivative(double t, int j) const {
  if (j < 0 || j > max_order()) throw std::out_of_range("SampledH: derivative order beyond max_order");
  if (t < a_ || t > b_) return 0.0;
  const auto& c = coeffs_[static_cast<std::size_t>(j)];
  const double x = (2.0 * t - a_ - b_) / (b_ - a_);
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) {
    const double b0 = 2.0 * x * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + c[0];
}

Jet<double> SampledH::jet(double t, int order) const {
  std::vector<double> d(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) d[static_cast<std::size_t>(j)] = derivative(t, j);
  return Jet<double>::from_derivatives(t, d);
}

double SampledH::dp(double t, int p) const {
  if (p > max_order()) throw std::out_of_range("SampledH: spectral order insufficient for requested D order");
  if (t < support_lo_ || t > support_hi_) return 0.0;
  return d_operator(jet(t, p), p);
}

double SampledH::noise_floor(int p) const {
  const double n2 = static_cast<double>(degree()) * degree();
  double scale = 0.0;
  for (double v : samples_) scale = std::max(scale, std::abs(v));
  return std::numeric_limits<double>::epsilon() * std::pow(n2, std::max(1, p)) * scale;
}

}  // namespace smt
