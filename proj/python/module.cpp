#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "starpht/generators.hpp"
#include "starpht/monodromy.hpp"
#include "starpht/pht.hpp"

namespace py = pybind11;
using namespace starpht;

namespace {

Polygon polygon_from_list(const std::vector<std::pair<double, double>>& verts) {
    std::vector<Point> pts;
    for (auto [x, y] : verts) pts.push_back({x, y});
    return validate_polygon(pts);
}

py::list diagram_to_list(const PersistenceDiagram& d) {
    py::list out;
    for (const DiagramPoint& pt : d.points) {
        py::dict e;
        e["birth"] = pt.birth;
        e["death"] = pt.essential ? py::object(py::float_(std::numeric_limits<double>::infinity()))
                                  : py::object(py::float_(pt.death));
        e["birth_vertex"] = pt.birth_vertex;
        e["death_vertex"] = pt.essential ? py::object(py::none()) : py::object(py::int_(pt.death_vertex));
        e["essential"] = pt.essential;
        out.append(e);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "degree-0 persistent homology transform of planar polygons";

    py::class_<Polygon>(m, "Polygon")
        .def(py::init(&polygon_from_list), py::arg("vertices"))
        .def_property_readonly("vertices",
                               [](const Polygon& p) {
                                   std::vector<std::pair<double, double>> out;
                                   for (const Point& v : p.vertices) out.emplace_back(v.x, v.y);
                                   return out;
                               })
        .def("area", &Polygon::area)
        .def("__len__", &Polygon::size);

    m.def("kernel_vertices", [](const Polygon& p) {
        std::vector<std::pair<double, double>> out;
        for (const Point& v : kernel(p).vertices) out.emplace_back(v.x, v.y);
        return out;
    });
    m.def("is_star_shaped", [](const Polygon& p) { return !kernel(p).empty(); });
    m.def("center", [](const Polygon& p) {
        const Point c = choose_center(kernel(p));
        return std::make_pair(c.x, c.y);
    });
    m.def("is_general_position", [](const Polygon& p) { return is_general_position(p).first; });

    m.def(
        "diagram",
        [](const Polygon& p, double theta) {
            return diagram_to_list(lower_star_diagram(triangulate(p), Direction(theta)));
        },
        py::arg("polygon"), py::arg("theta"));

    m.def(
        "pht",
        [](const Polygon& p, int refine, int jobs) {
            const DirectionPlan plan = plan_directions(p, refine);
            const PHTSample s = pht(p, plan, std::nullopt, jobs);
            py::list out;
            for (const auto& [theta, d] : s.entries)
                out.append(py::make_tuple(theta, diagram_to_list(d)));
            return out;
        },
        py::arg("polygon"), py::arg("refine") = 0, py::arg("jobs") = 1);

    m.def(
        "decompose_check",
        [](const Polygon& p, int refine, double tol) {
            const Point c = choose_center(kernel(p));
            const DecompositionReport r =
                decompose_check(p, c, plan_directions(p, refine), tol);
            py::dict out;
            out["verdict"] = r.verdict;
            out["max_gap"] = r.max_gap;
            out["angles"] = r.records.size();
            return out;
        },
        py::arg("polygon"), py::arg("refine") = 0, py::arg("tol") = 1e-9);

    m.def(
        "monodromy",
        [](const Polygon& p, int refine, double tol) {
            const MonodromyVerdict v = monodromy(p, plan_directions(p, refine), tol);
            py::dict out;
            out["trivial"] = v.trivial;
            out["sections"] = v.sections.size();
            if (v.witness_loop) {
                py::dict w;
                w["angle"] = v.witness_loop->angle;
                w["start"] = v.witness_loop->start;
                w["end"] = v.witness_loop->end;
                out["witness_loop"] = w;
            } else {
                out["witness_loop"] = py::none();
            }
            return out;
        },
        py::arg("polygon"), py::arg("refine") = 0, py::arg("tol") = 1e-9);

    m.def(
        "bottleneck",
        [](const Polygon& p, double theta_a, double theta_b) {
            const Triangulation t = triangulate(p);
            return bottleneck(lower_star_diagram(t, Direction(theta_a)),
                              lower_star_diagram(t, Direction(theta_b)))
                .first;
        },
        py::arg("polygon"), py::arg("theta_a"), py::arg("theta_b"));

    m.def("regular_ngon", &regular_ngon, py::arg("n"), py::arg("radius") = 1.0);
    m.def("random_star", &random_star, py::arg("k"), py::arg("seed"));
    m.def("spiral", &spiral, py::arg("turns"), py::arg("k"));
    m.def("random_convex", &random_convex, py::arg("k"), py::arg("seed"));

    py::register_exception<GeometryError>(m, "GeometryError");
    py::register_exception<NotSimple>(m, "NotSimpleError");
}
