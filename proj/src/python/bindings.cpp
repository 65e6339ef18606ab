#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ohs/bbd_tree.hpp"
#include "ohs/generators.hpp"
#include "ohs/homothet_hitter.hpp"
#include "ohs/online_hitter.hpp"
#include "ohs/runner.hpp"
#include "ohs/tree_validate.hpp"

namespace py = pybind11;
using namespace ohs;

namespace {

using PointTuple = std::pair<double, double>;
using RectTuple = std::tuple<double, double, double, double>;

std::vector<Point> to_points(const std::vector<PointTuple>& pts) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const auto& [x, y] : pts) out.push_back({x, y});
    return out;
}

AxisRect to_rect(const RectTuple& r) {
    return AxisRect::make(std::get<0>(r), std::get<1>(r), std::get<2>(r), std::get<3>(r));
}

py::dict round_dict(std::size_t round, bool already_hit, const std::vector<PointId>& added, bool fallback) {
    py::dict d;
    d["round"] = round;
    d["already_hit"] = already_hit;
    d["added"] = added;
    d["fallback"] = fallback;
    return d;
}

py::dict opt_dict(const OptResult& r) {
    py::dict d;
    d["hitting_set"] = r.hitting_set;
    d["size"] = r.size();
    d["proven"] = r.proven;
    d["lower_bound"] = r.lower_bound;
    d["upper_bound"] = r.upper_bound;
    d["nodes"] = r.nodes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Online hitting sets of rectangles and polygon homothets";

    py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InfeasibleInstance>(m, "InfeasibleInstance", PyExc_ValueError);
    py::register_exception<InfeasibleObject>(m, "InfeasibleObject", PyExc_ValueError);

    py::class_<BBDTree, std::shared_ptr<BBDTree>>(m, "BBDTree")
        .def(py::init([](const std::vector<PointTuple>& pts) {
                 return std::make_shared<BBDTree>(BBDTree::build(to_points(pts)));
             }),
             py::arg("points"))
        .def_property_readonly("depth", &BBDTree::depth)
        .def_property_readonly("node_count", &BBDTree::node_count)
        .def_property_readonly("bounding_square", [](const BBDTree& t) {
            const AxisRect& b = t.bounding_square();
            return RectTuple{b.x_lo, b.y_lo, b.x_hi, b.y_hi};
        })
        .def("validate",
             [](const BBDTree& t) {
                 const ValidationReport rep = validate(t);
                 return py::make_tuple(rep.ok(), rep.to_string());
             })
        .def("dump", &BBDTree::dump)
        .def("locate", [](const BBDTree& t, double x, double y) { return t.locate_point({x, y}); });

    py::class_<OnlineHitter>(m, "OnlineHitter")
        .def(py::init([](const std::vector<PointTuple>& pts) {
                 return OnlineHitter(std::make_shared<const BBDTree>(BBDTree::build(to_points(pts))));
             }),
             py::arg("points"))
        .def("process",
             [](OnlineHitter& h, const RectTuple& r) {
                 const RoundReport& rep = h.process(to_rect(r));
                 py::dict d = round_dict(rep.round, rep.already_hit, rep.added_points, rep.fallback_point_used);
                 d["activated"] = rep.activated_nodes;
                 return d;
             },
             py::arg("rect"))
        .def("hits", [](const OnlineHitter& h, const RectTuple& r) { return h.hits(to_rect(r)); })
        .def_property_readonly("hitting_set",
                               [](const OnlineHitter& h) {
                                   return std::vector<PointId>(h.hitting_set().begin(), h.hitting_set().end());
                               })
        .def_property_readonly("tree_depth", [](const OnlineHitter& h) { return h.tree().depth(); })
        .def_property_readonly("round", &OnlineHitter::round)
        .def("invariants_ok", [](const OnlineHitter& h) { return h.check_invariants().ok(); })
        .def("unhit_round_counts", &OnlineHitter::unhit_round_counts)
        .def("max_points_per_round", &OnlineHitter::max_points_per_round);

    py::class_<HomothetHitter>(m, "HomothetHitter")
        .def(py::init([](const std::vector<PointTuple>& pts, const std::vector<PointTuple>& polygon) {
                 return HomothetHitter(to_points(pts), SimplePolygon::make(to_points(polygon)));
             }),
             py::arg("points"), py::arg("polygon"))
        .def("process",
             [](HomothetHitter& h, double scale, double tx, double ty) {
                 const HomothetRoundReport& rep = h.process(Homothet::make(scale, {tx, ty}));
                 py::dict d = round_dict(rep.round, rep.already_hit, rep.added_points, rep.fallback_point_used);
                 d["pieces"] = rep.fed_pieces;
                 return d;
             },
             py::arg("scale"), py::arg("tx"), py::arg("ty"))
        .def("hits", [](const HomothetHitter& h, double scale, double tx, double ty) {
            return h.hits(Homothet::make(scale, {tx, ty}));
        })
        .def_property_readonly("hitting_set",
                               [](const HomothetHitter& h) {
                                   return std::vector<PointId>(h.hitting_set().begin(), h.hitting_set().end());
                               })
        .def_property_readonly("piece_count", [](const HomothetHitter& h) { return h.pieces().size(); })
        .def("piece_depths", &HomothetHitter::piece_depths);

    m.def(
        "exact_min_hitting_set",
        [](std::size_t num_points, std::vector<std::vector<PointId>> sets, double time_limit) {
            return opt_dict(exact_min_hitting_set(reduce_sets(num_points, std::move(sets)), {time_limit}));
        },
        py::arg("num_points"), py::arg("sets"), py::arg("time_limit") = 0.0,
        "Minimum hitting set of index sets over points 0..num_points-1.");

    m.def(
        "generate",
        [](const std::string& kind, std::uint64_t seed, std::size_t n, std::size_t count, double rho,
           std::optional<std::vector<PointTuple>> polygon) {
            GenSpec spec{gen_kind_from_string(kind), seed, n, count, rho, std::nullopt};
            if (polygon) spec.polygon = SimplePolygon::make(to_points(*polygon));
            return serialize(generate(spec));
        },
        py::arg("kind"), py::arg("seed"), py::arg("n"), py::arg("m"), py::arg("rho") = 1.0,
        py::arg("polygon") = py::none(), "Instance JSON text.");

    m.def(
        "run",
        [](const std::string& instance_json, bool compute_opt, double time_limit, bool deterministic) {
            const Instance inst = parse_instance(instance_json);
            RunOptions opts;
            opts.compute_opt = compute_opt;
            opts.time_limit_seconds = time_limit;
            opts.deterministic = deterministic;
            const RunResult r = run_instance(inst, opts);
            return py::make_tuple(report_json(r).dump(), csv_row(inst, r));
        },
        py::arg("instance_json"), py::arg("compute_opt") = true, py::arg("time_limit") = 10.0,
        py::arg("deterministic") = false, "(report JSON text, CSV row).");

    m.def("csv_header", &csv_header);
}
