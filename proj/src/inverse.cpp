#include "smt/inverse.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

#include "smt/parallel.hpp"
#include "smt/precision.hpp"

namespace smt {

namespace {

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

/// Barycentric weights for Gauss-Legendre nodes (up to a common factor).
std::vector<double> bary_weights(const std::vector<double>& x, const std::vector<double>& w) {
  std::vector<double> b(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double s = std::sqrt((1.0 - x[j] * x[j]) * w[j]);
    b[j] = (j % 2) ? -s : s;
  }
  return b;
}

/// Lagrange basis values at u, nodes on [0, 1].
void lagrange_row(const std::vector<double>& nodes, const std::vector<double>& bary, double u,
                  std::vector<double>& out) {
  out.assign(nodes.size(), 0.0);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (u == nodes[j]) {
      out[j] = 1.0;
      return;
    }
  }
  double den = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    out[j] = bary[j] / (u - nodes[j]);
    den += out[j];
  }
  for (auto& v : out) v /= den;
}

}  // namespace

double invert_radial_n3(const std::function<double(double)>& dh, double r) {
  if (r < r_floor) throw std::domain_error("invert_radial_n3: r below r_floor");
  if (r >= 1.0) throw std::domain_error("invert_radial_n3: r must be < 1");
  return 2.0 * dh(1.0 - r) / r;
}

void validate(const InversionConfig& cfg) {
  if (cfg.n_unknowns < 2) throw std::invalid_argument("InversionConfig: n_unknowns must be >= 2");
  if (cfg.n_collocation < cfg.n_unknowns)
    throw std::invalid_argument("InversionConfig: n_collocation must be >= n_unknowns");
  if (!(cfg.svd_cutoff > 0.0 && cfg.svd_cutoff < 1.0))
    throw std::invalid_argument("InversionConfig: svd_cutoff must lie in (0, 1)");
}

std::vector<double> collocation_points(int count) {
  if (count < 1) throw std::invalid_argument("collocation_points: count must be >= 1");
  std::vector<double> t(static_cast<std::size_t>(count));
  const double pi = pi_v<double>();
  for (int i = 0; i < count; ++i) t[static_cast<std::size_t>(i)] = t_floor + (1.0 - t_floor) * 0.5 * (1.0 - std::cos(pi * (i + 0.5) / count));
  return t;
}

double InversionResult::operator()(double u) const {
  if (r.empty()) return 0.0;
  std::vector<double> x(r.size()), w(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) {
    x[j] = 2.0 * r[j] - 1.0;
    w[j] = 2.0 * weights[j];
  }
  std::vector<double> row;
  lagrange_row(r, bary_weights(x, w), u, row);
  double s = 0.0;
  for (std::size_t j = 0; j < r.size(); ++j) s += row[j] * f[j];
  return s;
}

InversionResult invert_radial(const std::vector<double>& t, const std::vector<double>& g, Dimension dim,
                              const InversionConfig& cfg, const QuadratureRule& quad) {
  validate(cfg);
  if (t.size() != g.size()) throw std::invalid_argument("invert_radial: t and g differ in length");
  if (static_cast<int>(t.size()) < cfg.n_unknowns)
    throw std::invalid_argument("invert_radial: fewer data points than unknowns");
  for (double ti : t)
    if (!(ti > 0.0 && ti < 1.0)) throw std::domain_error("invert_radial: data must lie in t in (0, 1)");

  const int N = cfg.n_unknowns;
  std::vector<double> x, w;
  gauss_legendre(N, x, w);
  InversionResult res;
  res.r.resize(static_cast<std::size_t>(N));
  res.weights.resize(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) {
    res.r[static_cast<std::size_t>(j)] = 0.5 * (x[static_cast<std::size_t>(j)] + 1.0);
    res.weights[static_cast<std::size_t>(j)] = 0.5 * w[static_cast<std::size_t>(j)];
  }
  const std::vector<double> bary = bary_weights(x, w);
  const double c = omega(dim.n - 1) / (std::pow(4.0, dim.k) * omega(dim.n));

  const std::size_t M = t.size();
  Eigen::MatrixXd A(static_cast<Eigen::Index>(M), N);
  Eigen::VectorXd h(static_cast<Eigen::Index>(M));
  const auto rows = parallel_map<std::vector<double>>(M, [&](std::size_t i) {
    std::vector<double> us, ws, row(static_cast<std::size_t>(N), 0.0), basis;
    quad.points(1.0 - t[i], 1.0, us, ws);
    for (std::size_t q = 0; q < us.size(); ++q) {
      lagrange_row(res.r, bary, us[q], basis);
      const double kern = c * us[q] * ipow(q_kernel(t[i], us[q]), dim.k) * ws[q];
      for (int j = 0; j < N; ++j) row[static_cast<std::size_t>(j)] += kern * basis[static_cast<std::size_t>(j)];
    }
    return row;
  });
  for (std::size_t i = 0; i < M; ++i) {
    for (int j = 0; j < N; ++j) A(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
    h(static_cast<Eigen::Index>(i)) = ipow(t[i], dim.n - 2) * g[i];
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  res.sigma_max = s.size() ? s(0) : 0.0;
  const double cut = cfg.svd_cutoff * res.sigma_max;
  Eigen::VectorXd coef = svd.matrixU().transpose() * h;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cut && s(i) > 0.0) {
      coef(i) /= s(i);
      ++rank;
      res.sigma_min_kept = s(i);
    } else {
      coef(i) = 0.0;
    }
  }
  res.effective_rank = rank;
  if (rank < (N + 3) / 4)
    throw std::runtime_error("invert_radial: effective rank " + std::to_string(rank) + " below 25% of " +
                             std::to_string(N) + " unknowns; ill-posed configuration");
  const Eigen::VectorXd fv = svd.matrixV() * coef;
  res.f.assign(fv.data(), fv.data() + fv.size());
  res.residual_norm = (A * fv - h).norm();
  const double hn = h.norm();
  res.relative_residual = hn > 0.0 ? res.residual_norm / hn : res.residual_norm;
  return res;
}

double relative_l2_error(const InversionResult& res, const std::function<double(double)>& truth) {
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < res.r.size(); ++j) {
    const double ft = truth(res.r[j]);
    const double d = res.f[j] - ft;
    num += res.weights[j] * d * d;
    den += res.weights[j] * ft * ft;
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace smt
