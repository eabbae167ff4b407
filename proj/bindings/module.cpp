#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinstar/io.hpp"
#include "spinstar/revival_analysis.hpp"
#include "spinstar/validation.hpp"

namespace py = pybind11;
using namespace spinstar;

namespace {

py::array_t<double> raster_values(const QRaster& r) {
    py::array_t<double> out({r.rows, r.cols});
    std::copy(r.values.begin(), r.values.end(), out.mutable_data());
    return out;
}

py::array_t<std::complex<double>> dicke_amps(const DickeVector& v) {
    return py::array_t<std::complex<double>>(
        static_cast<py::ssize_t>(v.amps.size()), v.amps.data());
}

py::array_t<std::complex<double>> joint_amps(const JointState& st) {
    py::array_t<std::complex<double>> out(
        {static_cast<size_t>(st.N) + 1, static_cast<size_t>(2)});
    std::copy(st.amps.begin(), st.amps.end(), out.mutable_data());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spin-star simulator: exact and effective dynamics, fractional "
              "revivals, Husimi Q rasters";

    py::class_<SpinCoherentSpec>(m, "SpinCoherentSpec")
        .def(py::init<int, double, double>(), py::arg("N"), py::arg("zeta_abs"),
             py::arg("phi") = 0.0)
        .def_static("from_bloch", &SpinCoherentSpec::from_bloch, py::arg("N"),
                    py::arg("theta"), py::arg("phi") = 0.0)
        .def_static("at_south_pole", &SpinCoherentSpec::at_south_pole, py::arg("N"),
                    py::arg("phi") = 0.0)
        .def_readonly("N", &SpinCoherentSpec::N)
        .def_readonly("zeta_abs", &SpinCoherentSpec::zeta_abs)
        .def_readonly("phi", &SpinCoherentSpec::phi)
        .def_property_readonly("theta", &SpinCoherentSpec::theta);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](int N, double lambda, double phi0, double omega,
                         double Omega) {
                 ModelParams p;
                 p.N = N;
                 p.lambda = lambda;
                 p.phi0 = phi0;
                 p.omega = omega;
                 p.Omega = Omega;
                 p.validate();
                 return p;
             }),
             py::arg("N"), py::arg("lambda_") = 1.0, py::arg("phi0") = 0.0,
             py::arg("omega") = 0.0, py::arg("Omega") = 0.0)
        .def_readonly("N", &ModelParams::N)
        .def_readonly("lambda_", &ModelParams::lambda)
        .def_readonly("phi0", &ModelParams::phi0);

    py::class_<DickeVector>(m, "DickeVector")
        .def_readonly("N", &DickeVector::N)
        .def_property_readonly("amps", &dicke_amps)
        .def("norm", &DickeVector::norm);

    py::class_<JointState>(m, "JointState")
        .def_readonly("N", &JointState::N)
        .def_property_readonly("amps", &joint_amps)
        .def("norm", &JointState::norm);

    py::enum_<BranchSign>(m, "BranchSign")
        .value("plus", BranchSign::plus)
        .value("minus", BranchSign::minus);

    py::class_<QRaster>(m, "QRaster")
        .def_property_readonly("values", &raster_values)
        .def_readonly("axis0", &QRaster::axis0)
        .def_readonly("axis1", &QRaster::axis1)
        .def_readonly("axis0_label", &QRaster::axis0_label)
        .def_readonly("axis1_label", &QRaster::axis1_label);

    py::class_<RevivalReport>(m, "RevivalReport")
        .def_readonly("T", &RevivalReport::T)
        .def_readonly("full_period", &RevivalReport::full_period)
        .def_readonly("p", &RevivalReport::p)
        .def_readonly("q", &RevivalReport::q)
        .def_readonly("odd_N_rescaled", &RevivalReport::odd_N_rescaled)
        .def_readonly("fourier_coeffs", &RevivalReport::fourier_coeffs)
        .def_readonly("component_phases", &RevivalReport::component_phases)
        .def_readonly("closed_form_residual", &RevivalReport::closed_form_residual)
        .def_readonly("cat_count_estimate", &RevivalReport::cat_count_estimate)
        .def_readonly("fidelity_vs_exact", &RevivalReport::fidelity_vs_exact)
        .def("to_key_value",
             [](const RevivalReport& r) { return to_key_value(r); });

    m.def("coherent_coeffs", &coherent_coeffs, py::arg("spec"));
    m.def("bloch_from_zeta", &bloch_from_zeta, py::arg("zeta_abs"));
    m.def("zeta_from_bloch", &zeta_from_bloch, py::arg("theta"));
    m.def("dicke_moments",
          [](const DickeVector& v) {
              const auto mom = dicke_moments(v);
              return py::make_tuple(mom.m_bar, mom.delta_m);
          },
          py::arg("v"));

    m.def("build_initial", &build_initial, py::arg("params"), py::arg("spec"),
          py::arg("alpha"), py::arg("beta"));
    m.def("exact_propagate", &exact_propagate, py::arg("state"), py::arg("params"),
          py::arg("t"));
    m.def("truncated_propagate", &truncated_propagate, py::arg("state"),
          py::arg("params"), py::arg("t"));
    m.def("conserved_excitation",
          [](const JointState& st) {
              const auto rep = conserved_excitation(st);
              return py::make_tuple(rep.expectation, rep.distribution);
          },
          py::arg("state"));
    m.def("state_overlap",
          [](const JointState& u, const JointState& v) { return overlap(u, v); },
          py::arg("u"), py::arg("v"));

    m.def("revival_time",
          [](const ModelParams& p) {
              const auto r = revival_time(p);
              return py::make_tuple(r.T, r.full_period);
          },
          py::arg("params"));
    m.def("fourier_component_phases", &fourier_component_phases, py::arg("q"));
    m.def("gauss_sum_dft",
          [](int p, int q, const ModelParams& params, BranchSign sign) {
              return gauss_sum_dft(FractionalTime(p, q), params, sign);
          },
          py::arg("p"), py::arg("q"), py::arg("params"), py::arg("sign"));
    m.def("gauss_sum_closed_form", &gauss_sum_closed_form, py::arg("q"), py::arg("l"),
          py::arg("params"), py::arg("sign"));
    m.def("fractional_revival_state",
          [](int p, int q, const ModelParams& params, const SpinCoherentSpec& spec,
             BranchSign sign) {
              return fractional_revival_state(FractionalTime(p, q), params, spec, sign);
          },
          py::arg("p"), py::arg("q"), py::arg("params"), py::arg("spec"),
          py::arg("sign"));
    m.def("cat_count",
          [](const std::vector<double>& slice, double prominence) {
              return cat_count(slice, prominence);
          },
          py::arg("slice"), py::arg("prominence") = 0.2);
    m.def("make_revival_report",
          [](int p, int q, const ModelParams& params, BranchSign sign, int n_phi) {
              return make_revival_report(FractionalTime(p, q), params, sign, n_phi);
          },
          py::arg("p"), py::arg("q"), py::arg("params"), py::arg("sign"),
          py::arg("n_phi") = 512);

    m.def("husimi_q", &husimi_q, py::arg("state"), py::arg("theta"), py::arg("phi"));
    m.def("q_grid", &q_grid, py::arg("state"), py::arg("n_theta"), py::arg("n_phi"));
    m.def("equatorial_slice", &equatorial_slice, py::arg("state"), py::arg("n_phi"));
    m.def("carpet", &carpet, py::arg("params"), py::arg("spec"), py::arg("alpha"),
          py::arg("beta"), py::arg("n_t"), py::arg("n_phi"), py::arg("t_max_in_T"));

    m.def("eigenvalue_defect",
          [](const SpinCoherentSpec& spec) {
              const auto rep = eigenvalue_defect(spec);
              return py::make_tuple(rep.e1, rep.e2);
          },
          py::arg("spec"));
    m.def("approximation_fidelity", &approximation_fidelity, py::arg("params"),
          py::arg("spec"), py::arg("sign"), py::arg("t"));
    m.def("truncation_time_bounds",
          [](const ModelParams& params, const SpinCoherentSpec& spec) {
              const auto b = truncation_time_bounds(params, spec);
              return py::make_tuple(b.t1, b.t2);
          },
          py::arg("params"), py::arg("spec"));
    m.def("effective_eigenphase", &effective_eigenphase, py::arg("params"),
          py::arg("m"), py::arg("s"), py::arg("sign"));

    m.def("write_csv", &write_csv, py::arg("raster"), py::arg("path"));
    m.def("write_pgm", &write_pgm, py::arg("raster"), py::arg("path"));
}
