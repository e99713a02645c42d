#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smt/exactmath.hpp"
#include "smt/inverse.hpp"
#include "smt/rangecheck.hpp"
#include "smt/specfun.hpp"
#include "smt/spectral.hpp"
#include "smt/transform.hpp"
#include "smt/ucp.hpp"

namespace py = pybind11;
using namespace smt;

namespace {

QuadratureRule rule(int nodes, int panels) { return QuadratureRule(nodes, panels); }

std::vector<double> forward(double center, double width, int n, int m, const std::vector<double>& t, int nodes,
                            int panels) {
  const auto f = RadialProfile::bump(center, width);
  const Dimension dim = make_dimension(n);
  const auto quad = rule(nodes, panels);
  std::vector<double> g;
  g.reserve(t.size());
  for (double ti : t) g.push_back(m == 0 ? forward_radial(f, dim, ti, quad) : forward_harmonic(f, dim, m, ti, quad));
  return g;
}

py::dict range_check(double center, double width, int n, int m, int grid) {
  const auto f = RadialProfile::bump(center, width);
  const Dimension dim = make_dimension(n);
  const QuadratureRule quad;
  py::dict d;
  if (m == 0) {
    const auto rep = range_residual(make_smt_profile(f, dim, quad), uniform_grid(grid));
    d["normalized"] = rep.normalized;
    d["sup_residual"] = rep.sup_residual;
    d["k"] = rep.k_used;
  } else {
    const auto rep = general_range_check(f, dim, m, uniform_grid(grid), quad);
    d["normalized"] = rep.range.normalized;
    d["sup_residual"] = rep.range.sup_residual;
    d["k"] = rep.range.k_used;
    d["max_defect"] = rep.max_defect;
    d["defect_scale"] = rep.defect_scale;
    d["route_mismatch"] = rep.route_mismatch;
  }
  return d;
}

std::vector<double> cross_check(double center, double width, int n, const std::vector<double>& lambdas) {
  const auto f = RadialProfile::bump(center, width);
  const Dimension dim = make_dimension(n);
  const QuadratureRule quad;
  const SupportedFunction h{[&](double t) { return forward_h(f, dim, t, quad); }, 1.0 - f.hi(), 1.0 + f.hi()};
  std::vector<double> out;
  for (double l : lambdas) out.push_back(cross_product_residual(h, dim.k, l, quad).residual);
  return out;
}

py::dict zero_oracle(double center, double width, int n, int count) {
  const auto f = RadialProfile::bump(center, width);
  const Dimension dim = make_dimension(n);
  const QuadratureRule quad;
  const SupportedFunction g{[&](double t) { return forward_radial(f, dim, t, quad); },
                            std::max(t_floor, 1.0 - f.hi()), 1.0 + f.hi()};
  const auto rep = bessel_zero_vanishing(g, dim, 0, count, quad);
  py::dict d;
  d["zeros"] = rep.zeros;
  d["values"] = rep.values;
  d["max_abs"] = rep.max_abs;
  d["max_ratio"] = rep.max_ratio;
  return d;
}

py::dict invert(double center, double width, int n, int unknowns, int collocation, double cutoff) {
  const auto f = RadialProfile::bump(center, width);
  const Dimension dim = make_dimension(n);
  const QuadratureRule quad;
  const InversionConfig cfg{unknowns, collocation, cutoff};
  const auto t = collocation_points(collocation);
  std::vector<double> g;
  for (double ti : t) g.push_back(forward_radial(f, dim, ti, quad));
  const auto res = invert_radial(t, g, dim, cfg, quad);
  py::dict d;
  d["r"] = res.r;
  d["f"] = res.f;
  d["effective_rank"] = res.effective_rank;
  d["relative_residual"] = res.relative_residual;
  d["relative_l2_error"] = relative_l2_error(res, [&](double r) { return f(r); });
  return d;
}

py::dict ucp_demo(int n, double epsilon, int m, int grid) {
  const UcpSpec spec{n, epsilon, m, 0.6, 0.15};
  const auto rep = verify_counterexample(spec, ucp_quadrature(spec), ucp_grid(grid));
  py::dict d;
  d["t"] = rep.t;
  d["g"] = rep.g;
  d["ratio_inside"] = rep.ratio_inside;
  d["max_inside"] = rep.max_inside;
  d["max_outside"] = rep.max_outside;
  d["f_zero_on_ball"] = rep.f_zero_on_ball;
  d["pass"] = rep.pass;
  return d;
}

std::vector<py::tuple> identities(int max_k) {
  std::vector<py::tuple> out;
  for (const auto& r : identity_sweep(max_k)) out.push_back(py::make_tuple(r.name, r.range, r.cases, r.passed));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Spherical mean transform: forward maps, range tests, inversion.";
  mod.attr("__version__") = SMT_VERSION;

  mod.def("omega", &omega, py::arg("n"));
  mod.def("raw_j", [](int k, double x) { return raw_j(k, x); }, py::arg("k"), py::arg("x"));
  mod.def("raw_y", [](int k, double x) { return raw_y(k, x); }, py::arg("k"), py::arg("x"));
  mod.def("sph_bessel_j", [](int k, double x) { return sph_bessel_j(k, x); }, py::arg("k"), py::arg("x"));
  mod.def("gegenbauer", &gegenbauer, py::arg("m"), py::arg("alpha"), py::arg("x"));
  mod.def("bessel_zeros", &bessel_zeros, py::arg("k"), py::arg("count"));

  mod.def("forward", &forward, "g(t) for a bump profile; m > 0 gives the single-harmonic transform",
          py::arg("center"), py::arg("width"), py::arg("n"), py::arg("m") = 0, py::arg("t"), py::arg("nodes") = 32,
          py::arg("panels") = 8);
  mod.def("range_check", &range_check, py::arg("center"), py::arg("width"), py::arg("n"), py::arg("m") = 0,
          py::arg("grid") = 101);
  mod.def("cross_check", &cross_check, py::arg("center"), py::arg("width"), py::arg("n"), py::arg("lambdas"));
  mod.def(
      "mk_residual",
      [](int k, double lambda, double t, bool wide_precision) {
        return (wide_precision ? mk_residual_wide(k, lambda, t) : mk_residual(k, lambda, t)).residual;
      },
      py::arg("k"), py::arg("lam"), py::arg("t"), py::arg("wide") = false);
  mod.def("mk_samples", &mk_samples, py::arg("seed"), py::arg("count"), py::arg("gap") = 0.05);
  mod.def("zero_oracle", &zero_oracle, py::arg("center"), py::arg("width"), py::arg("n"), py::arg("count") = 10);
  mod.def("invert", &invert, py::arg("center"), py::arg("width"), py::arg("n"), py::arg("unknowns") = 80,
          py::arg("collocation") = 160, py::arg("svd_cutoff") = 1e-10);
  mod.def("ucp_demo", &ucp_demo, py::arg("n") = 3, py::arg("epsilon") = 0.25, py::arg("m") = 2,
          py::arg("grid") = 801);
  mod.def("identities", &identities, py::arg("max_k") = 6);
}
