#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gnse/duhamel.hpp"
#include "gnse/field.hpp"
#include "gnse/inequalities.hpp"
#include "gnse/norms.hpp"
#include "gnse/radius.hpp"
#include "gnse/runner.hpp"
#include "gnse/semigroup.hpp"
#include "gnse/snapshot.hpp"
#include "gnse/special.hpp"
#include "gnse/spectral_ops.hpp"
#include "gnse/theorem.hpp"
#include "gnse/turbulence.hpp"

namespace py = pybind11;
using namespace gnse;

namespace {

Rational parse_rational_str(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

std::string rational_str(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

PYBIND11_MODULE(_gnse, m) {
    m.doc() = "Spectral Navier-Stokes tools: Gevrey norms, mild solutions, radius estimates";

    py::register_exception<ArgumentError>(m, "GnseArgumentError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "GnseConfigError", PyExc_RuntimeError);
    py::register_exception<EstimationError>(m, "GnseEstimationError", PyExc_RuntimeError);

    py::class_<PhysicalParams>(m, "PhysicalParams")
        .def_static("make", &PhysicalParams::make, py::arg("n"), py::arg("L"), py::arg("nu"))
        .def_readonly("n", &PhysicalParams::n)
        .def_readonly("L", &PhysicalParams::L)
        .def_readonly("nu", &PhysicalParams::nu)
        .def_readonly("kappa0", &PhysicalParams::kappa0);

    py::class_<WaveVector>(m, "WaveVector")
        .def(py::init<int, int>())
        .def(py::init<int, int, int>())
        .def("norm", &WaveVector::norm)
        .def("norm2", &WaveVector::norm2);

    py::class_<SpectralField>(m, "SpectralField")
        .def(py::init<const PhysicalParams&, int>(), py::arg("params"), py::arg("K"))
        .def_property_readonly("K", &SpectralField::K)
        .def_property_readonly("mode_count", &SpectralField::mode_count)
        .def("wave", &SpectralField::wave, py::return_value_policy::copy)
        .def("coeff",
             [](const SpectralField& u, const WaveVector& k) {
                 const cvec v = u.coeff(k);
                 std::vector<cplx> out(v.begin(), v.begin() + u.n());
                 return out;
             })
        .def("set_coeff",
             [](SpectralField& u, const WaveVector& k, const std::vector<cplx>& v) {
                 cvec c{cplx(0), cplx(0), cplx(0)};
                 for (size_t i = 0; i < v.size() && i < 3; ++i) c[i] = v[i];
                 u.set_coeff(k, c);
             })
        .def("max_abs", &SpectralField::max_abs)
        .def("divergence_free", &SpectralField::divergence_free, py::arg("rel_tol") = 1e-13)
        .def_static("taylor_green", &SpectralField::taylor_green);

    m.def("leray_project", &leray_project);
    m.def("bilinear_direct", &bilinear_direct);
    m.def("bilinear_fft", &bilinear_fft);
    m.def("heat_propagate", &heat_propagate, py::arg("u"), py::arg("t"), py::arg("nu_scale") = 1.0);
    m.def(
        "random_field",
        [](const PhysicalParams& p, int K, double lo, double hi, uint64_t seed, double amp,
           const std::string& profile, double lambda0) {
            const auto prof =
                profile == "exp_decay" ? AmplitudeProfile::exp_decay : AmplitudeProfile::flat;
            return random_field(p, K, lo, hi, seed, amp, prof, lambda0);
        },
        py::arg("params"), py::arg("K"), py::arg("band_lo"), py::arg("band_hi"), py::arg("seed"),
        py::arg("amplitude"), py::arg("profile") = "flat", py::arg("lambda0") = 0.0);

    m.def("sobolev_l1_norm", &sobolev_l1_norm);
    m.def("gevrey_norm", [](const SpectralField& u, double lam, double sigma) {
        return gevrey_norm(u, GevreyWeight(lam, sigma));
    });
    m.def("wiener_norm", &wiener_norm);
    m.def("l2_norm", &l2_norm);
    m.def("grad_l2_norm", &grad_l2_norm);
    m.def("laplacian_l2_norm", &laplacian_l2_norm);
    m.def("kinetic_energy", &kinetic_energy);
    m.def("enstrophy", &enstrophy);

    m.def("beta_function", &beta_function);
    m.def("beta_kernel_integral", &beta_kernel_integral);
    m.def("beta_kernel_constant", &beta_kernel_constant);

    py::class_<SmoothingEstimateReport>(m, "SmoothingEstimateReport")
        .def_readonly("lhs", &SmoothingEstimateReport::lhs)
        .def_readonly("rhs", &SmoothingEstimateReport::rhs)
        .def_readonly("constant_used", &SmoothingEstimateReport::constant_used)
        .def_readonly("ratio", &SmoothingEstimateReport::ratio)
        .def_readonly("passed", &SmoothingEstimateReport::passed);
    m.def("check_heat_smoothing", &check_heat_smoothing);
    m.def("check_schedule_absorption", &check_schedule_absorption);
    m.def("check_algebra_bound", &check_algebra_bound);
    m.def("check_heat_bilinear", &check_heat_bilinear);

    m.def("exact_exponents", [](const std::string& sigma, const std::string& q, bool q_inf) {
        const auto e = exact_exponents(parse_rational_str(sigma),
                                       q_inf ? Rational(2) : parse_rational_str(q), q_inf);
        py::dict d;
        d["beta"] = rational_str(e.beta);
        d["q_prime"] = rational_str(e.q_prime);
        d["radius_exp_M"] = rational_str(e.radius_exp_M);
        d["radius_exp_Mf"] = rational_str(e.radius_exp_Mf);
        d["smallness_exp"] = rational_str(e.smallness_exp);
        return d;
    }, py::arg("sigma"), py::arg("q"), py::arg("q_inf") = false);

    py::class_<RadiusEstimate>(m, "RadiusEstimate")
        .def_readonly("lambda_hat", &RadiusEstimate::lambda_hat)
        .def_readonly("residual", &RadiusEstimate::residual)
        .def_readonly("capped", &RadiusEstimate::capped);
    m.def("estimate_radius_fit", &estimate_radius_fit);
    m.def("estimate_radius_bisect", &estimate_radius_bisect);

    py::class_<EtdState>(m, "EtdState")
        .def(py::init([](double t, const SpectralField& u) {
            return EtdState{t, u};
        }))
        .def_readonly("t", &EtdState::t)
        .def_readonly("u", &EtdState::u);
    py::class_<EtdStepper>(m, "EtdStepper")
        .def(py::init([](const PhysicalParams& p, int K) {
            return EtdStepper(p, K, ForceSchedule::none());
        }))
        .def(py::init([](const PhysicalParams& p, int K, const SpectralField& f) {
            return EtdStepper(p, K, ForceSchedule::constant(f));
        }))
        .def("step", &EtdStepper::step);

    m.def("write_field", &write_field);
    m.def("read_field", &read_field);
}
