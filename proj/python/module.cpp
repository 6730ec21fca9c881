// Python bindings for the main operations: kernel evaluation, zero hunting,
// Green functions, quadrature checks, and the toy closed forms. High-precision
// values cross the boundary as decimal strings next to double approximations.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bergman/green.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/surface.hpp"
#include "bergman/zero_hunt.hpp"

namespace py = pybind11;
using namespace bergman;

namespace {

using cd = std::complex<double>;

HPComplex to_hp(cd z, const PrecisionContext& ctx) { return {z.real(), z.imag(), ctx}; }

py::dict hunt_result_dict(const HuntResult& r) {
    py::dict d;
    d["alpha"] = r.config.alpha;
    d["n"] = r.config.n;
    d["theta"] = r.config.theta;
    d["d"] = r.config.d;
    d["digits"] = r.config.digits;
    d["boundary_value"] = r.boundary_value.to_double();
    d["boundary_value_str"] = r.boundary_value.to_string();
    d["zero_residual"] = r.rep.zero_residual.to_double();
    d["zero_residual_str"] = r.rep.zero_residual.to_string();
    d["solve_residual"] = r.rep.solve_residual.to_double();
    d["verdict"] = std::string(to_string(r.verdict));
    if (r.located_zero) {
        d["located_zero"] = r.located_zero->to_double();
        d["located_zero_str"] = r.located_zero->to_string();
    }
    d["wall_seconds"] = r.wall_seconds;
    return d;
}

ZeroSet zero_set_from(const std::vector<cd>& pts, const std::vector<int>& mults, double alpha,
                      const PrecisionContext& ctx) {
    std::vector<ZeroPoint> zp;
    for (size_t i = 0; i < pts.size(); ++i)
        zp.push_back({to_hp(pts[i], ctx), mults.empty() ? 1 : mults[i]});
    return ZeroSet(std::move(zp), HPReal(alpha, ctx));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "High-precision weighted Bergman kernels, canonical zero divisors, Green "
              "functions, and extraneous-zero hunting on the unit disk";

    m.def("bergman_kernel",
          [](cd z, cd w, double alpha, int digits) {
              PrecisionContext ctx(digits);
              HPComplex k = bergman_kernel(to_hp(z, ctx), to_hp(w, ctx), HPReal(alpha, ctx));
              return py::make_tuple(k.to_complex_double(), k.to_string());
          },
          py::arg("z"), py::arg("w"), py::arg("alpha"), py::arg("digits") = 40,
          "Unit-disk reproducing kernel for the weight (alpha+1)(1-|z|^2)^alpha; returns "
          "(complex, decimal string)");

    m.def("zero_kernel",
          [](const std::vector<cd>& points, const std::vector<int>& mults, double alpha, cd z,
             cd w, int digits) {
              PrecisionContext ctx(digits);
              ZeroSet A = zero_set_from(points, mults, alpha, ctx);
              HPComplex k = kernel_with_multiplicity(A, to_hp(z, ctx), to_hp(w, ctx));
              return py::make_tuple(k.to_complex_double(), k.to_string());
          },
          py::arg("points"), py::arg("mults"), py::arg("alpha"), py::arg("z"), py::arg("w"),
          py::arg("digits") = 40, "Kernel of the invariant subspace vanishing on the points");

    m.def("extremal_function",
          [](cd z, cd lambda_, double alpha, int digits) {
              PrecisionContext ctx(digits);
              return extremal_function(to_hp(z, ctx), to_hp(lambda_, ctx), HPReal(alpha, ctx))
                  .to_complex_double();
          },
          py::arg("z"), py::arg("lambda_"), py::arg("alpha"), py::arg("digits") = 40);

    m.def("toy_kernel",
          [](cd z, cd lambda_, double theta, int digits) {
              PrecisionContext ctx(digits);
              return toy_kernel(to_hp(z, ctx), to_hp(lambda_, ctx), HPReal(theta, ctx))
                  .to_complex_double();
          },
          py::arg("z"), py::arg("lambda_"), py::arg("theta"), py::arg("digits") = 40);

    m.def("toy_has_disk_zero",
          [](cd lambda_, double theta) {
              PrecisionContext ctx(40);
              return toy_has_disk_zero(to_hp(lambda_, ctx), HPReal(theta, ctx));
          },
          py::arg("lambda_"), py::arg("theta"));

    m.def("toy_zero_location",
          [](cd lambda_, double theta, int digits) {
              PrecisionContext ctx(digits);
              return toy_zero_location(to_hp(lambda_, ctx), HPReal(theta, ctx))
                  .to_complex_double();
          },
          py::arg("lambda_"), py::arg("theta"), py::arg("digits") = 40);

    m.def("green_g", [](cd z, cd w) { return green_G_d(z, w); }, py::arg("z"), py::arg("w"));
    m.def("biharmonic_gamma", [](cd z, cd w) { return biharmonic_gamma_d(z, w); }, py::arg("z"),
          py::arg("w"));
    m.def("weighted_gamma1", [](cd z, cd w) { return weighted_gamma1_d(z, w); }, py::arg("z"),
          py::arg("w"));
    m.def("gamma1_bounds",
          [](cd z, cd w) {
              PrecisionContext ctx(40);
              auto b = gamma1_bounds(to_hp(z, ctx), to_hp(w, ctx));
              return py::make_tuple(b.lower.to_double(), b.upper.to_double());
          },
          py::arg("z"), py::arg("w"));
    m.def("h1_harmonic", [](cd z, cd w) { return h1_harmonic_d(z, w); }, py::arg("z"),
          py::arg("w"));
    m.def("poisson_kernel", [](cd w, cd zeta) { return poisson_kernel_d(w, zeta); },
          py::arg("w"), py::arg("zeta"));

    m.def("generate_configuration",
          [](double alpha, int n, double theta, double d, int digits) {
              HuntConfig cfg{std::to_string(alpha), n, theta, d, digits};
              ZeroSet A = generate_configuration(cfg);
              std::vector<cd> out;
              for (const auto& p : A.points()) out.push_back(p.location.to_complex_double());
              return out;
          },
          py::arg("alpha"), py::arg("n"), py::arg("theta"), py::arg("d"), py::arg("digits") = 40);

    m.def("boundary_value_scan",
          [](const std::string& alpha, int n, double theta, double d, int digits, bool locate,
             double margin) {
              HuntConfig cfg{alpha, n, theta, d, digits};
              HuntResult r = boundary_value_scan(cfg, margin);
              if (locate && r.verdict == HuntVerdict::extraneous_zero_found)
                  r.located_zero = locate_extraneous_zero(r);
              return hunt_result_dict(r);
          },
          py::arg("alpha"), py::arg("n"), py::arg("theta"), py::arg("d"), py::arg("digits") = 40,
          py::arg("locate") = false, py::arg("margin") = 1e3,
          "High-precision boundary value of the zero-based kernel at z = 1 with verdict");

    m.def("table1_rows", [] {
        py::list rows;
        for (const auto& r : table1_rows()) {
            py::dict d;
            d["alpha"] = r.alpha;
            d["n"] = r.n;
            d["theta"] = r.theta;
            d["d"] = r.d;
            rows.append(d);
        }
        return rows;
    });

    m.def("mvp_defect",
          [](const std::string& kind, double alpha, cd lambda_, double theta, int mr,
             int ntheta) {
              PrecisionContext ctx(40);
              DiskRule rule = build_disk_rule(mr, ntheta, ctx);
              WeightSpec w = kind == "toy"
                                 ? WeightSpec::toy(to_hp(lambda_, ctx), HPReal(theta, ctx))
                                 : WeightSpec::standard(HPReal(alpha, ctx));
              return mvp_max_defect(rule, w.weight_fn_d());
          },
          py::arg("kind") = "standard", py::arg("alpha") = 1.0, py::arg("lambda_") = cd(0, 0),
          py::arg("theta") = 0.0, py::arg("mr") = 200, py::arg("ntheta") = 400,
          "Worst mean-value-property defect over the harmonic battery");

    m.def("boundary_normal_derivative",
          [](double alpha, cd zeta, int mr, int ntheta) {
              PrecisionContext ctx(40);
              DiskRule rule = build_disk_rule(mr, ntheta, ctx);
              WeightSpec w = WeightSpec::standard(HPReal(alpha, ctx));
              return boundary_normal_derivative(w.weight_fn_d(), rule, zeta);
          },
          py::arg("alpha") = 1.0, py::arg("zeta") = cd(1, 0), py::arg("mr") = 200,
          py::arg("ntheta") = 512);

    m.attr("__version__") = "0.1.0";
}
