// SPDX-License-Identifier: Apache-2.0
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rischan/bench.hpp"
#include "rischan/interaction.hpp"
#include "rischan/oracle.hpp"
#include "rischan/reduction.hpp"
#include "rischan/specfun.hpp"
#include "rischan/updates.hpp"

namespace py = pybind11;
using namespace rischan;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Physics-compliant RIS channel computation with fast realization updates";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<SingularGeometryError>(m, "SingularGeometryError", PyExc_ValueError);
    py::register_exception<ConditioningError>(m, "ConditioningError", PyExc_ArithmeticError);
    py::register_exception<DiagonalizationError>(m, "DiagonalizationError", PyExc_ArithmeticError);
    py::register_exception<ResonanceError>(m, "ResonanceError", PyExc_ArithmeticError);
    py::register_exception<UpdateSingularityError>(m, "UpdateSingularityError",
                                                   PyExc_ArithmeticError);

    m.def("bessel_j0", &specfun::bessel_j0, py::arg("x"));
    m.def("bessel_y0", &specfun::bessel_y0, py::arg("x"));
    m.def("hankel0_first_kind", &specfun::hankel0_first_kind, py::arg("x"));

    py::class_<Position>(m, "Position")
        .def(py::init<>())
        .def(py::init([](double x, double y) { return Position{x, y}; }),
             py::arg("x"), py::arg("y"))
        .def_readwrite("x", &Position::x)
        .def_readwrite("y", &Position::y);

    py::class_<DipoleParams>(m, "DipoleParams")
        .def(py::init<>())
        .def(py::init([](double x, double y, double f_res, double chi, double gamma) {
                 return DipoleParams{x, y, f_res, chi, gamma};
             }),
             py::arg("x"), py::arg("y"), py::arg("f_res_ghz"), py::arg("chi"),
             py::arg("gamma_ghz"))
        .def_readwrite("x", &DipoleParams::x)
        .def_readwrite("y", &DipoleParams::y)
        .def_readwrite("f_res_ghz", &DipoleParams::f_res_ghz)
        .def_readwrite("chi", &DipoleParams::chi)
        .def_readwrite("gamma_ghz", &DipoleParams::gamma_ghz);

    m.def("inverse_polarizability", &inverse_polarizability, py::arg("f_ghz"), py::arg("dipole"));
    m.def("green_function",
          [](Position ri, Position rj, double f_ghz) {
              return green_function(ri, rj, Wavenumber::from_frequency_ghz(f_ghz));
          },
          py::arg("r_i"), py::arg("r_j"), py::arg("f_ghz"));

    py::class_<RisConfiguration>(m, "RisConfiguration")
        .def_static("from_bits", &RisConfiguration::from_bits, py::arg("bits"))
        .def_static("from_analog", &RisConfiguration::from_analog, py::arg("values"))
        .def_static("all_zero", &RisConfiguration::all_zero, py::arg("n_ris"))
        .def("size", &RisConfiguration::size);

    py::class_<Diagnostic>(m, "Diagnostic")
        .def_readonly("path", &Diagnostic::path)
        .def_readonly("message", &Diagnostic::message)
        .def("__repr__", [](const Diagnostic& d) {
            return "Diagnostic(" + d.path + ": " + d.message + ")";
        });

    py::class_<IndexMap>(m, "IndexMap")
        .def_property_readonly("n", &IndexMap::n)
        .def_property_readonly("p", &IndexMap::p)
        .def_property_readonly("s", &IndexMap::s)
        .def_readonly("n_tx", &IndexMap::n_tx)
        .def_readonly("n_rx", &IndexMap::n_rx)
        .def_readonly("n_ris", &IndexMap::n_ris)
        .def_readonly("n_dyn_env", &IndexMap::n_dyn_env)
        .def_readonly("n_static_env", &IndexMap::n_static_env);

    py::class_<Scenario>(m, "Scenario")
        .def_property_readonly("n_tx", &Scenario::n_tx)
        .def_property_readonly("n_rx", &Scenario::n_rx)
        .def_property_readonly("n_ris", &Scenario::n_ris)
        .def_property_readonly("n_env", &Scenario::n_env)
        .def_property_readonly("n_total", &Scenario::n_total)
        .def_property_readonly("freq_points",
                               [](const Scenario& sc) { return sc.freq_grid.points(); });

    m.def("load_scenario", &load_scenario, py::arg("path"));
    m.def("parse_scenario", &parse_scenario, py::arg("json_text"));
    m.def("serialize_scenario", &serialize_scenario, py::arg("scenario"));
    m.def("validate", &validate, py::arg("scenario"));
    m.def("build_index_map", &build_index_map, py::arg("scenario"));
    m.def("configuration_to_inverse_polarizabilities",
          &configuration_to_inverse_polarizabilities,
          py::arg("scenario"), py::arg("config"), py::arg("f_ghz"));

    py::class_<InteractionMatrix>(m, "InteractionMatrix")
        .def_readonly("w", &InteractionMatrix::w)
        .def_readonly("f_ghz", &InteractionMatrix::f_ghz)
        .def_readonly("map", &InteractionMatrix::map);

    m.def("assemble",
          [](const Scenario& sc, double f_ghz, const RisConfiguration& cfg) {
              return assemble(sc, build_index_map(sc), f_ghz, cfg);
          },
          py::arg("scenario"), py::arg("f_ghz"), py::arg("config"));

    py::class_<ReducedSystem>(m, "ReducedSystem")
        .def_readonly("r", &ReducedSystem::r)
        .def_readonly("r_inv", &ReducedSystem::r_inv)
        .def_readonly("f_ghz", &ReducedSystem::f_ghz);

    py::class_<EigenPrecompute>(m, "EigenPrecompute")
        .def_readonly("sigma", &EigenPrecompute::sigma)
        .def_readonly("psi", &EigenPrecompute::psi)
        .def_readonly("d", &EigenPrecompute::d)
        .def_readonly("w_pp", &EigenPrecompute::w_pp)
        .def("retained_shapes", &EigenPrecompute::retained_shapes);

    py::class_<ChannelMatrix>(m, "ChannelMatrix")
        .def_readonly("h", &ChannelMatrix::h)
        .def_readonly("f_ghz", &ChannelMatrix::f_ghz);

    m.def("reduce", &reduce, py::arg("wm"));
    m.def("channel_from_reduced", &channel_from_reduced, py::arg("rs"));
    m.def("channel_full", &channel_full, py::arg("wm"));
    m.def("eigen_precompute", &eigen_precompute, py::arg("wm"));
    m.def("shifted_reduce", &shifted_reduce, py::arg("pre"), py::arg("lambda_"));
    m.def("rt_block", &rt_block, py::arg("r_inv"), py::arg("map"));
    m.def("compare_channels",
          [](const ChannelMatrix& a, const ChannelMatrix& b) {
              const auto d = compare_channels(a, b);
              return py::make_tuple(d.rel_frobenius, d.max_abs);
          },
          py::arg("a"), py::arg("b"));

    py::class_<RisDelta>(m, "RisDelta")
        .def(py::init([](std::vector<int> idx, std::vector<cdouble> vals) {
                 return RisDelta{std::move(idx), std::move(vals)};
             }),
             py::arg("indices"), py::arg("delta_alpha_inv"))
        .def_readonly("indices", &RisDelta::indices)
        .def_readonly("delta_alpha_inv", &RisDelta::delta_alpha_inv)
        .def_property_readonly("m", &RisDelta::m);

    m.def("ris_delta_between", &ris_delta_between,
          py::arg("scenario"), py::arg("from_cfg"), py::arg("to_cfg"), py::arg("f_ghz"));
    m.def("woodbury_full", &woodbury_full, py::arg("w_inv"), py::arg("map"), py::arg("delta"));
    m.def("woodbury_reduced_channel", &woodbury_reduced_channel, py::arg("rs"), py::arg("delta"));

    py::class_<OneBitPlan>(m, "OneBitPlan")
        .def_readonly("use_complement", &OneBitPlan::use_complement)
        .def_readonly("delta", &OneBitPlan::delta);
    m.def("one_bit_plan", &one_bit_plan, py::arg("scenario"), py::arg("baseline_bits"),
          py::arg("target_bits"), py::arg("f_ghz"));

    py::class_<DisplacementDelta>(m, "DisplacementDelta")
        .def_readonly("dipole_index", &DisplacementDelta::dipole_index)
        .def_readonly("delta_w", &DisplacementDelta::delta_w);
    m.def("make_displacement", &make_displacement, py::arg("dipoles"), py::arg("j"),
          py::arg("new_pos"), py::arg("f_ghz"));
    m.def("canonical_dipoles", &canonical_dipoles, py::arg("scenario"), py::arg("map"));
    m.def("displace_full", &displace_full, py::arg("w_inv"), py::arg("delta"));

    py::class_<TrajectoryCache>(m, "TrajectoryCache")
        .def_readonly("primary_index", &TrajectoryCache::primary_index)
        .def_property_readonly("n_positions", &TrajectoryCache::n_positions);
    m.def("build_trajectory_cache", &build_trajectory_cache, py::arg("scenario"),
          py::arg("wm"), py::arg("primary_index"), py::arg("positions"));
    m.def("displace_reduced",
          [](const EigenPrecompute& pre, const TrajectoryCache& cache, int k, cdouble lambda) {
              return displace_reduced(pre, cache, k, lambda);
          },
          py::arg("pre"), py::arg("cache"), py::arg("position_index"),
          py::arg("lambda_") = cdouble(0.0, 0.0));
    m.def("combined_update",
          [](const EigenPrecompute& pre, cdouble lambda,
             const std::vector<std::pair<const TrajectoryCache*, int>>& moves,
             const RisDelta& delta) {
              std::vector<Move> mv;
              for (const auto& [cache, k] : moves) mv.push_back(Move{cache, k});
              return combined_update(pre, lambda, mv, delta);
          },
          py::arg("pre"), py::arg("lambda_"), py::arg("moves"), py::arg("ris_delta"));
}
