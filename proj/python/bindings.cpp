#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "syncmap/analysis.hpp"
#include "syncmap/certify.hpp"
#include "syncmap/geometry.hpp"
#include "syncmap/io.hpp"
#include "syncmap/lyapunov.hpp"
#include "syncmap/map.hpp"
#include "syncmap/symmetry.hpp"

namespace py = pybind11;
using namespace syncmap;

PYBIND11_MODULE(_syncmap, m) {
    m.doc() = "Three-clock synchronisation map on the 2-torus: dynamics, "
              "Lyapunov verification and phase-portrait analysis";

    py::register_exception<DomainError>(m, "DomainError",
                                        PyExc_ValueError);
    py::register_exception<NonConvergenceError>(m, "NonConvergenceError",
                                                PyExc_RuntimeError);

    py::class_<MapParams>(m, "MapParams")
        .def(py::init<double>(), py::arg("a"))
        .def_property_readonly("a", &MapParams::a)
        .def_property_readonly("jacobian_det_lower_bound",
                               &MapParams::jacobian_det_lower_bound)
        .def("__repr__", [](const MapParams& mp) {
            return "MapParams(a=" + io::format_double(mp.a()) + ")";
        });

    py::class_<PhasePoint>(m, "PhasePoint")
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readwrite("x", &PhasePoint::x)
        .def_readwrite("y", &PhasePoint::y)
        .def("__repr__", [](const PhasePoint& p) {
            return "PhasePoint(" + io::format_double(p.x) + ", " +
                   io::format_double(p.y) + ")";
        });

    py::class_<Mat2>(m, "Mat2")
        .def_readonly("a11", &Mat2::a11)
        .def_readonly("a12", &Mat2::a12)
        .def_readonly("a21", &Mat2::a21)
        .def_readonly("a22", &Mat2::a22)
        .def("det", &Mat2::det)
        .def("trace", &Mat2::trace);

    py::enum_<OrbitDirection>(m, "OrbitDirection")
        .value("Forward", OrbitDirection::Forward)
        .value("Backward", OrbitDirection::Backward);

    py::class_<OrbitTrace>(m, "OrbitTrace")
        .def_readonly("points", &OrbitTrace::points)
        .def_readonly("direction", &OrbitTrace::direction)
        .def("__len__",
             [](const OrbitTrace& t) { return t.points.size(); });

    m.def("map_forward", &map_forward, py::arg("p"), py::arg("params"));
    m.def("map_inverse", &map_inverse, py::arg("p"), py::arg("params"),
          py::arg("tol") = 1e-12);
    m.def("map_jacobian", &map_jacobian, py::arg("p"), py::arg("params"));
    m.def("iterate", &iterate, py::arg("p0"), py::arg("n"), py::arg("params"),
          py::arg("direction") = OrbitDirection::Forward,
          py::arg("inverse_tol") = 1e-13);
    m.def("wrap", &wrap, py::arg("p"));
    m.def("torus_distance", &torus_distance, py::arg("p"), py::arg("q"));

    py::enum_<SymmetryId>(m, "SymmetryId")
        .value("Phi1", SymmetryId::Phi1)
        .value("Phi2", SymmetryId::Phi2)
        .value("Phi3", SymmetryId::Phi3)
        .value("Phi4", SymmetryId::Phi4);

    py::class_<SymmetryMap>(m, "SymmetryMap")
        .def_readonly("id", &SymmetryMap::id)
        .def("__call__", &SymmetryMap::operator())
        .def("inverse", &SymmetryMap::inverse);

    m.def("symmetry", &symmetry, py::arg("id"));
    m.def("apply_symmetry", &apply_symmetry, py::arg("s"), py::arg("p"));
    m.def("equivariance_residual", &equivariance_residual, py::arg("s"),
          py::arg("params"), py::arg("samples"), py::arg("seed") = 0);
    m.def("transport_lyapunov", &transport_lyapunov, py::arg("field"),
          py::arg("h"));

    py::enum_<RegionId>(m, "RegionId")
        .value("D", RegionId::D)
        .value("S1", RegionId::S1)
        .value("S2", RegionId::S2)
        .value("S3", RegionId::S3)
        .value("S4", RegionId::S4)
        .value("A1", RegionId::A1)
        .value("A2", RegionId::A2)
        .value("A3", RegionId::A3)
        .value("A4", RegionId::A4)
        .value("AL", RegionId::AL)
        .value("AM", RegionId::AM)
        .value("AR", RegionId::AR);

    m.def("region_contains", &region_contains, py::arg("region"), py::arg("p"),
          py::arg("params"), py::arg("margin") = 0.0);
    m.def("gamma_x", &gamma_x, py::arg("y"), py::arg("params"),
          py::arg("tol") = 1e-13);
    m.def(
        "gamma_minimum",
        [](const MapParams& mp) {
            const GammaMinimum g = gamma_minimum(mp);
            return py::make_tuple(g.y, g.x);
        },
        py::arg("params"));
    m.def("region_boundary", &region_boundary, py::arg("region"),
          py::arg("params"), py::arg("step") = 0.01);

    m.def("lyapunov_value", &lyapunov_value, py::arg("p"));
    py::class_<XiValues>(m, "XiValues")
        .def_readonly("xi1", &XiValues::xi1)
        .def_readonly("xi2", &XiValues::xi2)
        .def_readonly("xi3", &XiValues::xi3)
        .def_readonly("xi4", &XiValues::xi4);
    m.def("xi_values", &xi_values, py::arg("p"), py::arg("params"));
    m.def("orbital_derivative", &orbital_derivative, py::arg("p"),
          py::arg("params"));
    m.def(
        "orbital_derivative_closed_form",
        [](PhasePoint p, const MapParams& mp) {
            const RegionalDerivative rd = orbital_derivative_closed_form(p, mp);
            return py::make_tuple(rd.value, rd.region);
        },
        py::arg("p"), py::arg("params"));

    m.def("region_lipschitz", &region_lipschitz, py::arg("subregion"),
          py::arg("params"));

    py::class_<Cell>(m, "Cell")
        .def_readonly("x0", &Cell::x0)
        .def_readonly("x1", &Cell::x1)
        .def_readonly("y0", &Cell::y0)
        .def_readonly("y1", &Cell::y1);

    py::enum_<CertVerdict>(m, "CertVerdict")
        .value("Certified", CertVerdict::Certified)
        .value("Inconclusive", CertVerdict::Inconclusive);

    py::class_<CertRequest>(m, "CertRequest")
        .def(py::init<const MapParams&>(), py::arg("params"))
        .def_readwrite("epsilon", &CertRequest::epsilon)
        .def_readwrite("initial_cell", &CertRequest::initial_cell)
        .def_readwrite("max_depth", &CertRequest::max_depth)
        .def_readwrite("workers", &CertRequest::workers)
        .def_readwrite("record_certified_cells",
                       &CertRequest::record_certified_cells);

    py::class_<CertReport>(m, "CertReport")
        .def_readonly("verdict", &CertReport::verdict)
        .def_readonly("cells_examined", &CertReport::cells_examined)
        .def_readonly("cells_certified", &CertReport::cells_certified)
        .def_readonly("cells_subdivided", &CertReport::cells_subdivided)
        .def_readonly("cells_excluded", &CertReport::cells_excluded)
        .def_readonly("worst_certified_bound",
                      &CertReport::worst_certified_bound)
        .def_readonly("inconclusive_cells", &CertReport::inconclusive_cells);

    m.def("certify_negative", &certify_negative, py::arg("request"),
          py::call_guard<py::gil_scoped_release>());
    m.def("check_positivity", &check_positivity, py::arg("region"),
          py::arg("sink"), py::arg("samples"), py::arg("params"),
          py::arg("seed") = 0);

    py::enum_<FixedPointKind>(m, "FixedPointKind")
        .value("Source", FixedPointKind::Source)
        .value("Saddle", FixedPointKind::Saddle)
        .value("Sink", FixedPointKind::Sink);

    py::class_<FixedPointRecord>(m, "FixedPointRecord")
        .def_readonly("location", &FixedPointRecord::location)
        .def_readonly("jacobian", &FixedPointRecord::jacobian)
        .def_readonly("eigenvalue_1", &FixedPointRecord::eigenvalue_1)
        .def_readonly("eigenvalue_2", &FixedPointRecord::eigenvalue_2)
        .def_readonly("eigenvector_1", &FixedPointRecord::eigenvector_1)
        .def_readonly("eigenvector_2", &FixedPointRecord::eigenvector_2)
        .def_readonly("kind", &FixedPointRecord::kind)
        .def_readonly("hyperbolic", &FixedPointRecord::hyperbolic)
        .def_readonly("residual", &FixedPointRecord::residual);

    m.def("fixed_points", &fixed_points, py::arg("params"));

    py::enum_<HeteroclinicLabel>(m, "HeteroclinicLabel")
        .value("Eta1", HeteroclinicLabel::Eta1)
        .value("Eta2", HeteroclinicLabel::Eta2)
        .value("Eta3", HeteroclinicLabel::Eta3)
        .value("Eta4", HeteroclinicLabel::Eta4)
        .value("Eta5", HeteroclinicLabel::Eta5)
        .value("Eta6", HeteroclinicLabel::Eta6)
        .value("Eta7", HeteroclinicLabel::Eta7)
        .value("Eta8", HeteroclinicLabel::Eta8);

    py::class_<ManifoldArc>(m, "ManifoldArc")
        .def_readonly("label", &ManifoldArc::label)
        .def_readonly("saddle", &ManifoldArc::saddle)
        .def_readonly("source", &ManifoldArc::source)
        .def_readonly("polyline", &ManifoldArc::polyline);

    m.def("trace_heteroclinic", &trace_heteroclinic, py::arg("label"),
          py::arg("params"), py::arg("step") = 0.005,
          py::call_guard<py::gil_scoped_release>());

    py::class_<BasinEstimate>(m, "BasinEstimate")
        .def_readonly("samples", &BasinEstimate::samples)
        .def_readonly("converged", &BasinEstimate::converged)
        .def_readonly("fraction", &BasinEstimate::fraction)
        .def_readonly("max_iterations", &BasinEstimate::max_iterations)
        .def_readonly("radius", &BasinEstimate::radius)
        .def_readonly("seed", &BasinEstimate::seed);

    m.def("estimate_basin", &estimate_basin, py::arg("params"),
          py::arg("samples"), py::arg("max_iterations"), py::arg("radius"),
          py::arg("seed"), py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("converges_to_sink", &converges_to_sink, py::arg("p0"),
          py::arg("params"), py::arg("max_iterations"), py::arg("radius"));
    m.def("contraction_rate", &contraction_rate, py::arg("params"),
          py::arg("p0"), py::arg("window") = 50);
}
