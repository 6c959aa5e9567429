#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <utility>
#include <vector>

#include "sitnikov/config.hpp"
#include "sitnikov/config_io.hpp"
#include "sitnikov/dynamics.hpp"
#include "sitnikov/period.hpp"
#include "sitnikov/sync.hpp"

namespace py = pybind11;

namespace {

using sitnikov::PlanarConfiguration;
using sitnikov::Vec2;

std::vector<Vec2> to_vec2(const std::vector<std::array<double, 2>>& pairs) {
    std::vector<Vec2> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) out.push_back({p[0], p[1]});
    return out;
}

std::vector<std::array<double, 2>> from_vec2(const std::vector<Vec2>& vecs) {
    std::vector<std::array<double, 2>> out;
    out.reserve(vecs.size());
    for (const auto& v : vecs) out.push_back({v.x, v.y});
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Restricted n+1-body Sitnikov problem: balanced central "
              "configurations, axial motion, periods and synchronous solutions.";

    py::class_<PlanarConfiguration>(m, "PlanarConfiguration")
        .def(py::init([](std::vector<double> masses,
                         std::vector<std::array<double, 2>> positions, double tol) {
                 return PlanarConfiguration(std::move(masses), to_vec2(positions), tol);
             }),
             py::arg("masses"), py::arg("positions"),
             py::arg("tol") = sitnikov::kDefaultTol)
        .def_property_readonly("masses", &PlanarConfiguration::masses)
        .def_property_readonly(
            "positions",
            [](const PlanarConfiguration& c) { return from_vec2(c.positions()); })
        .def_property_readonly("tol", &PlanarConfiguration::tol)
        .def_property_readonly("radii", &PlanarConfiguration::radii)
        .def_property_readonly("total_mass", &PlanarConfiguration::total_mass)
        .def("__len__", &PlanarConfiguration::size)
        .def("__repr__", [](const PlanarConfiguration& c) {
            return "<PlanarConfiguration n=" + std::to_string(c.size()) + ">";
        });

    py::class_<sitnikov::CCReport>(m, "CCReport")
        .def_readonly("lambda_", &sitnikov::CCReport::lambda)
        .def_property_readonly(
            "residuals",
            [](const sitnikov::CCReport& r) { return from_vec2(r.residuals); })
        .def_readonly("max_residual_norm", &sitnikov::CCReport::max_residual_norm)
        .def_readonly("scale", &sitnikov::CCReport::scale)
        .def_readonly("is_central", &sitnikov::CCReport::is_central);

    py::class_<sitnikov::RadiusGroup>(m, "RadiusGroup")
        .def_readonly("radius", &sitnikov::RadiusGroup::radius)
        .def_readonly("indices", &sitnikov::RadiusGroup::indices);

    py::class_<sitnikov::RadiusGroups>(m, "RadiusGroups")
        .def_readonly("groups", &sitnikov::RadiusGroups::groups);

    py::class_<sitnikov::BalanceReport>(m, "BalanceReport")
        .def_readonly("balanced", &sitnikov::BalanceReport::balanced)
        .def_readonly("group_weighted_norms",
                      &sitnikov::BalanceReport::group_weighted_norms)
        .def("__bool__",
             [](const sitnikov::BalanceReport& r) { return r.balanced; });

    m.def("potential", &sitnikov::potential);
    m.def("moment_of_inertia", &sitnikov::moment_of_inertia);
    m.def("cc_residual", &sitnikov::cc_residual);
    m.def("radius_groups", &sitnikov::radius_groups);
    m.def("is_balanced", &sitnikov::is_balanced);
    m.def("make_polygon", &sitnikov::make_polygon, py::arg("n"), py::arg("mass") = 1.0,
          py::arg("radius") = 1.0);
    m.def("mu_of_x", &sitnikov::mu_of_x);
    m.def("collinear_x_of_mu", &sitnikov::collinear_x_of_mu);
    m.def("make_collinear_cc", &sitnikov::make_collinear_cc);
    m.def("make_rhombus_cc", &sitnikov::make_rhombus_cc);
    m.def("scale_config", &sitnikov::scale_config, py::arg("config"), py::arg("r"),
          py::arg("mu"));
    m.def("rotate_config", &sitnikov::rotate_config);
    m.def("restricted_cc_residual",
          [](const PlanarConfiguration& c, std::array<double, 2> p) {
              return sitnikov::restricted_cc_residual(c, {p[0], p[1]});
          });

    py::class_<sitnikov::AxialState>(m, "AxialState")
        .def(py::init([](double z, double v, double t) {
                 return sitnikov::AxialState{z, v, t};
             }),
             py::arg("z") = 0.0, py::arg("v") = 0.0, py::arg("t") = 0.0)
        .def_readonly("z", &sitnikov::AxialState::z)
        .def_readonly("v", &sitnikov::AxialState::v)
        .def_readonly("t", &sitnikov::AxialState::t);

    py::enum_<sitnikov::MotionClass>(m, "MotionClass")
        .value("Hyperbolic", sitnikov::MotionClass::Hyperbolic)
        .value("Parabolic", sitnikov::MotionClass::Parabolic)
        .value("Periodic", sitnikov::MotionClass::Periodic)
        .value("Equilibrium", sitnikov::MotionClass::Equilibrium);

    py::class_<sitnikov::Trajectory>(m, "Trajectory")
        .def_readonly("samples", &sitnikov::Trajectory::samples)
        .def_readonly("energy_drift", &sitnikov::Trajectory::energy_drift)
        .def_readonly("escaped", &sitnikov::Trajectory::escaped);

    py::class_<sitnikov::IntegrateOptions>(m, "IntegrateOptions")
        .def(py::init<>())
        .def_readwrite("rtol", &sitnikov::IntegrateOptions::rtol)
        .def_readwrite("atol", &sitnikov::IntegrateOptions::atol)
        .def_readwrite("sample_dt", &sitnikov::IntegrateOptions::sample_dt)
        .def_readwrite("escape_z", &sitnikov::IntegrateOptions::escape_z)
        .def_readwrite("max_steps", &sitnikov::IntegrateOptions::max_steps);

    m.def("axial_acceleration", &sitnikov::axial_acceleration);
    m.def("axial_potential", &sitnikov::axial_potential);
    m.def("energy", &sitnikov::energy);
    m.def("energy_min", &sitnikov::energy_min);
    m.def("classify", &sitnikov::classify);
    m.def("turning_point", &sitnikov::turning_point);
    m.def("integrate_axial", &sitnikov::integrate_axial, py::arg("config"),
          py::arg("initial"), py::arg("t_end"),
          py::arg("opts") = sitnikov::IntegrateOptions{});
    m.def("integrate_axial_leapfrog", &sitnikov::integrate_axial_leapfrog,
          py::arg("config"), py::arg("initial"), py::arg("t_end"), py::arg("dt"),
          py::arg("sample_stride") = std::size_t{1});
    m.def("ode_period", &sitnikov::ode_period, py::arg("config"), py::arg("E"),
          py::arg("opts") = sitnikov::IntegrateOptions{}, py::arg("crossings") = 2);

    py::class_<sitnikov::InvarianceReport>(m, "InvarianceReport")
        .def_readonly("max_planar_norm", &sitnikov::InvarianceReport::max_planar_norm)
        .def_readonly("field_scale", &sitnikov::InvarianceReport::field_scale);
    m.def("verify_axis_invariance",
          py::overload_cast<const PlanarConfiguration&>(
              &sitnikov::verify_axis_invariance));

    py::class_<sitnikov::State3>(m, "State3")
        .def(py::init([](std::array<double, 3> pos, std::array<double, 3> vel,
                         double t) {
                 return sitnikov::State3{{pos[0], pos[1], pos[2]},
                                         {vel[0], vel[1], vel[2]},
                                         t};
             }),
             py::arg("pos"), py::arg("vel"), py::arg("t") = 0.0)
        .def_property_readonly("pos",
                               [](const sitnikov::State3& s) {
                                   return std::array<double, 3>{s.pos.x, s.pos.y,
                                                                s.pos.z};
                               })
        .def_property_readonly("vel",
                               [](const sitnikov::State3& s) {
                                   return std::array<double, 3>{s.vel.x, s.vel.y,
                                                                s.vel.z};
                               })
        .def_readonly("t", &sitnikov::State3::t);

    py::class_<sitnikov::Trajectory3>(m, "Trajectory3")
        .def_readonly("samples", &sitnikov::Trajectory3::samples)
        .def_readonly("max_offaxis", &sitnikov::Trajectory3::max_offaxis);
    m.def("integrate_full", &sitnikov::integrate_full, py::arg("config"),
          py::arg("initial"), py::arg("t_end"),
          py::arg("opts") = sitnikov::IntegrateOptions{});

    py::class_<sitnikov::PeriodResult>(m, "PeriodResult")
        .def_readonly("T0", &sitnikov::PeriodResult::T0)
        .def_readonly("E", &sitnikov::PeriodResult::E)
        .def_readonly("z_E", &sitnikov::PeriodResult::z_E)
        .def_readonly("quadrature_nodes", &sitnikov::PeriodResult::quadrature_nodes)
        .def_readonly("est_error", &sitnikov::PeriodResult::est_error);

    m.def("t_min", &sitnikov::t_min);
    m.def("period_of_energy", &sitnikov::period_of_energy, py::arg("config"),
          py::arg("E"), py::arg("nodes") = 128);
    m.def("energy_of_period", &sitnikov::energy_of_period);

    py::class_<sitnikov::CatalogEntry>(m, "CatalogEntry")
        .def_readonly("l", &sitnikov::CatalogEntry::l)
        .def_readonly("m", &sitnikov::CatalogEntry::m)
        .def_readonly("axial_period", &sitnikov::CatalogEntry::axial_period)
        .def_readonly("E", &sitnikov::CatalogEntry::E)
        .def_readonly("system_period", &sitnikov::CatalogEntry::system_period);
    m.def("periodic_solution_catalog", &sitnikov::periodic_solution_catalog,
          py::arg("config"), py::arg("ratios"), py::arg("T"));

    py::class_<sitnikov::SyncReport>(m, "SyncReport")
        .def_readonly("lhs", &sitnikov::SyncReport::lhs)
        .def_readonly("rhs", &sitnikov::SyncReport::rhs)
        .def_readonly("holds", &sitnikov::SyncReport::holds)
        .def_readonly("lambda_", &sitnikov::SyncReport::lambda)
        .def_readonly("lambda_bound", &sitnikov::SyncReport::lambda_bound)
        .def_readonly("c", &sitnikov::SyncReport::c);

    m.def("sync_check", &sitnikov::sync_check);
    m.def("verify_pcc", &sitnikov::verify_pcc);
    m.def("polygon_sum", &sitnikov::polygon_sum);
    m.def("polygon_lower_bound", &sitnikov::polygon_lower_bound);

    py::class_<sitnikov::PolygonScanRow>(m, "PolygonScanRow")
        .def_readonly("n", &sitnikov::PolygonScanRow::n)
        .def_readonly("sum", &sitnikov::PolygonScanRow::sum)
        .def_readonly("holds", &sitnikov::PolygonScanRow::holds)
        .def_readonly("bound", &sitnikov::PolygonScanRow::bound);
    py::class_<sitnikov::PolygonScanResult>(m, "PolygonScanResult")
        .def_readonly("boundary", &sitnikov::PolygonScanResult::boundary)
        .def_readonly("rows", &sitnikov::PolygonScanResult::rows)
        .def_readonly("bound_decreasing",
                      &sitnikov::PolygonScanResult::bound_decreasing);
    m.def("polygon_scan", &sitnikov::polygon_scan);

    m.def("moulton_quintic", &sitnikov::moulton_quintic, py::arg("r"), py::arg("mu"));
    m.def("moulton_root", &sitnikov::moulton_root);
    m.def("make_euler_collinear", &sitnikov::make_euler_collinear);
    m.def("euler_field", &sitnikov::euler_field, py::arg("mu"), py::arg("x"));
    m.def("euler_field_numerator", &sitnikov::euler_field_numerator, py::arg("mu"),
          py::arg("x"));

    py::class_<sitnikov::EulerEquilibrium>(m, "EulerEquilibrium")
        .def_readonly("mu", &sitnikov::EulerEquilibrium::mu)
        .def_readonly("r", &sitnikov::EulerEquilibrium::r)
        .def_readonly("center", &sitnikov::EulerEquilibrium::center)
        .def_readonly("field_residual", &sitnikov::EulerEquilibrium::field_residual);
    m.def("euler_equilibrium", &sitnikov::euler_equilibrium);

    m.def("load_config", &sitnikov::load_config, py::arg("path"),
          py::arg("tol_override") = py::none());
    m.def("save_config",
          [](const std::string& path, const PlanarConfiguration& config) {
              sitnikov::save_config(path, config);
          });

#ifdef SITNIKOV_VERSION
    m.attr("__version__") = SITNIKOV_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
