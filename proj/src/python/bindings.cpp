#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graetzkit/charpoly.hpp"
#include "graetzkit/core.hpp"
#include "graetzkit/exchange_rbf.hpp"
#include "graetzkit/fdm_oracle.hpp"
#include "graetzkit/series_ref.hpp"
#include "graetzkit/version.hpp"
#include "graetzkit/wall_rbf.hpp"

namespace py = pybind11;
using namespace graetzkit;

PYBIND11_MODULE(_graetzkit, m) {
    m.doc() = "Laminar convective heat transfer with axial conduction and viscous "
              "dissipation: closed-form boundary-function solutions, the classical "
              "plate Graetz series, and a finite-difference reference solver.";
    m.attr("__version__") = GRAETZKIT_VERSION;

    py::register_exception<RootStructureError>(m, "RootStructureError");
    py::register_exception<DegenerateRootsError>(m, "DegenerateRootsError");
    py::register_exception<BCMismatchError>(m, "BCMismatchError");
    py::register_exception<InvalidRegimeError>(m, "InvalidRegimeError");
    py::register_exception<NonConvergenceError>(m, "NonConvergenceError");

    py::enum_<Geometry>(m, "Geometry")
        .value("parallel_plates", Geometry::parallel_plates)
        .value("circular_tube", Geometry::circular_tube);

    py::class_<FluidProperties>(m, "FluidProperties")
        .def(py::init<double, double, double, double>(), py::arg("k"), py::arg("rho"),
             py::arg("cp"), py::arg("mu"))
        .def_readwrite("k", &FluidProperties::k)
        .def_readwrite("rho", &FluidProperties::rho)
        .def_readwrite("cp", &FluidProperties::cp)
        .def_readwrite("mu", &FluidProperties::mu);
    m.def("thermal_diffusivity", &thermal_diffusivity);

    py::class_<ProblemSpec>(m, "ProblemSpec")
        .def(py::init<>())
        .def_readwrite("geometry", &ProblemSpec::geometry)
        .def_readwrite("a", &ProblemSpec::a)
        .def_readwrite("u0", &ProblemSpec::u0)
        .def_readwrite("fluid", &ProblemSpec::fluid)
        .def_readwrite("t_inlet", &ProblemSpec::t_inlet)
        .def("set_uniform_wall",
             [](ProblemSpec& s, double t_wall) { s.bc = UniformWall{t_wall}; },
             py::arg("t_wall"))
        .def("set_exchange",
             [](ProblemSpec& s, double h, double t_inf) { s.bc = Exchange{h, t_inf}; },
             py::arg("h"), py::arg("t_inf"))
        .def("wall_kind", [](const ProblemSpec& s) {
            return std::holds_alternative<UniformWall>(s.bc) ? "uniform_wall" : "exchange";
        });

    py::class_<DimensionlessGroups>(m, "DimensionlessGroups")
        .def_readonly("pe", &DimensionlessGroups::pe)
        .def_readonly("ubar", &DimensionlessGroups::ubar)
        .def_readonly("dissipation_rate", &DimensionlessGroups::dissipation_rate)
        .def_readonly("lambda_", &DimensionlessGroups::lambda)
        .def_readonly("alpha", &DimensionlessGroups::alpha);

    m.def("validate", &validate);
    m.def("dimensionless", &dimensionless);
    m.def("velocity", &velocity, py::arg("spec"), py::arg("r"));

    m.def("beta1_wall_order4", &beta1_wall_order4, py::arg("pe"), py::arg("d"));
    m.def("solve_quartic_wall_order6",
          [](double pe, int d) {
              const auto r = solve_quartic_wall_order6(pe, d);
              return py::make_tuple(r.beta1, *r.beta2);
          },
          py::arg("pe"), py::arg("d"));
    m.def("beta1_exchange", &beta1_exchange, py::arg("pe"), py::arg("alpha"), py::arg("d"));

    py::enum_<Asymptote>(m, "Asymptote")
        .value("wall_o4_high_pe", Asymptote::wall_o4_high_pe)
        .value("wall_o6_beta2_high_pe", Asymptote::wall_o6_beta2_high_pe)
        .value("exchange_advective", Asymptote::exchange_advective)
        .value("exchange_dominated", Asymptote::exchange_dominated);
    m.def("asymptote", &asymptote, py::arg("kind"), py::arg("pe") = 0.0, py::arg("alpha") = 0.0,
          py::arg("d") = 0);

    py::class_<WallSolutionO4>(m, "WallSolutionO4")
        .def_readonly("beta1", &WallSolutionO4::beta1)
        .def_readonly("t_inf_limit", &WallSolutionO4::t_inf_limit)
        .def_readonly("amp", &WallSolutionO4::amp)
        .def_readonly("t1a_amp", &WallSolutionO4::t1a_amp)
        .def_readonly("t1a_offset", &WallSolutionO4::t1a_offset)
        .def("centerline", &WallSolutionO4::centerline, py::arg("x"))
        .def("wall_gradient", &WallSolutionO4::wall_gradient, py::arg("x"))
        .def("field",
             [](const WallSolutionO4& s, double x, double r) { return reconstruct_field(s, x, r); },
             py::arg("x"), py::arg("r"));

    py::class_<WallSolutionO6>(m, "WallSolutionO6")
        .def_readonly("beta1", &WallSolutionO6::beta1)
        .def_readonly("beta2", &WallSolutionO6::beta2)
        .def_readonly("c1", &WallSolutionO6::c1)
        .def_readonly("c2", &WallSolutionO6::c2)
        .def_readonly("c3", &WallSolutionO6::c3)
        .def_readonly("d1", &WallSolutionO6::d1)
        .def_readonly("d2", &WallSolutionO6::d2)
        .def_readonly("d3", &WallSolutionO6::d3)
        .def("centerline", &WallSolutionO6::centerline, py::arg("x"))
        .def("wall_gradient", &WallSolutionO6::wall_gradient, py::arg("x"))
        .def("field",
             [](const WallSolutionO6& s, double x, double r) { return reconstruct_field(s, x, r); },
             py::arg("x"), py::arg("r"))
        .def("wall_residual",
             [](const WallSolutionO6& s, double x) { return wall_residual(s, x); }, py::arg("x"));

    py::class_<ExchangeSolution>(m, "ExchangeSolution")
        .def_readonly("beta1", &ExchangeSolution::beta1)
        .def_readonly("t_far", &ExchangeSolution::t_far)
        .def_readonly("amp", &ExchangeSolution::amp)
        .def_readonly("lambda_", &ExchangeSolution::lambda)
        .def_readonly("alpha", &ExchangeSolution::alpha)
        .def_readonly("v_adv", &ExchangeSolution::v_adv)
        .def("wall_temperature", &ExchangeSolution::wall_temperature, py::arg("x"))
        .def("wall_gradient", &ExchangeSolution::wall_gradient, py::arg("x"))
        .def("centerline",
             [](const ExchangeSolution& s, double x) { return centerline_exchange(s, x); },
             py::arg("x"))
        .def("field",
             [](const ExchangeSolution& s, double x, double r) {
                 return reconstruct_field_exchange(s, x, r);
             },
             py::arg("x"), py::arg("r"));

    m.def("solve_wall_order4", &solve_wall_order4);
    m.def("solve_wall_order6", &solve_wall_order6);
    m.def("solve_exchange_order4", &solve_exchange_order4);

    m.def("theta_series", &theta_series, py::arg("xi1"), py::arg("n_terms") = 8);

    py::enum_<AdvectionScheme>(m, "AdvectionScheme")
        .value("central", AdvectionScheme::central)
        .value("hybrid_upwind", AdvectionScheme::hybrid_upwind);

    py::class_<FdmConfig>(m, "FdmConfig")
        .def(py::init<>())
        .def_readwrite("nx", &FdmConfig::nx)
        .def_readwrite("nr", &FdmConfig::nr)
        .def_readwrite("length", &FdmConfig::length)
        .def_readwrite("relax", &FdmConfig::relax)
        .def_readwrite("tol", &FdmConfig::tol)
        .def_readwrite("max_sweeps", &FdmConfig::max_sweeps)
        .def_readwrite("scheme", &FdmConfig::scheme);
    m.def("default_config", &default_config);

    py::class_<FdmSolution>(m, "FdmSolution")
        .def_readonly("nx", &FdmSolution::nx)
        .def_readonly("nr", &FdmSolution::nr)
        .def_readonly("length", &FdmSolution::length)
        .def_readonly("x", &FdmSolution::x)
        .def_readonly("r", &FdmSolution::r)
        .def_readonly("temperature", &FdmSolution::temperature)
        .def_readonly("residual", &FdmSolution::residual)
        .def_readonly("sweeps", &FdmSolution::sweeps)
        .def("at", &FdmSolution::at, py::arg("i"), py::arg("j"));

    py::class_<BoundaryProfiles>(m, "BoundaryProfiles")
        .def_readonly("x", &BoundaryProfiles::x)
        .def_readonly("t0", &BoundaryProfiles::t0)
        .def_readonly("ta", &BoundaryProfiles::ta)
        .def_readonly("t1a", &BoundaryProfiles::t1a);

    m.def("fdm_solve", &fdm_solve, py::arg("spec"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("extract_boundary_functions", &extract_boundary_functions);
    m.def("sample_profile", &sample_profile, py::arg("grid_x"), py::arg("values"), py::arg("x"));
}
