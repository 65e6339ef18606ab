#include "ohs/instance.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ohs/offline_opt.hpp"

namespace ohs {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ParseError("field '" + field + "': " + what);
}

const json& member(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing");
    return *it;
}

double number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(path, "not finite");
    return v;
}

Point point_from(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) fail(path, "expected [x, y]");
    return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
}

json point_to(Point p) { return json::array({p.x, p.y}); }

}  // namespace

std::string to_string(Mode m) { return m == Mode::rects ? "rects" : "homothets"; }

std::optional<std::uint64_t> Instance::seed() const {
    auto it = meta.find("seed");
    if (it == meta.end() || !it->is_number_unsigned()) return std::nullopt;
    return it->get<std::uint64_t>();
}

json to_json(const Instance& inst) {
    json j;
    j["format"] = 1;
    j["mode"] = to_string(inst.mode);
    j["meta"] = inst.meta;
    json pts = json::array();
    for (const Point& p : inst.points) pts.push_back(point_to(p));
    j["points"] = std::move(pts);
    if (inst.polygon) {
        json poly = json::array();
        for (const Point& p : inst.polygon->vertices()) poly.push_back(point_to(p));
        j["polygon"] = std::move(poly);
    }
    json objs = json::array();
    if (inst.mode == Mode::rects) {
        for (const AxisRect& r : inst.rects) {
            objs.push_back({{"x_lo", r.x_lo}, {"y_lo", r.y_lo}, {"x_hi", r.x_hi}, {"y_hi", r.y_hi}});
        }
    } else {
        for (const Homothet& h : inst.homothets) {
            objs.push_back({{"scale", h.scale}, {"tx", h.translation.x}, {"ty", h.translation.y}});
        }
    }
    j["objects"] = std::move(objs);
    return j;
}

SimplePolygon polygon_from_json(const json& j) {
    if (!j.is_array()) fail("polygon", "expected array of [x, y]");
    std::vector<Point> v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(point_from(j[i], "polygon[" + std::to_string(i) + "]"));
    try {
        return SimplePolygon::make(std::move(v));
    } catch (const GeometryError& e) {
        fail("polygon", e.what());
    }
}

Instance instance_from_json(const json& j) {
    if (!j.is_object()) fail("<root>", "expected object");
    const json& format = member(j, "format", "<root>");
    if (!format.is_number_integer() || format.get<int>() != 1) fail("format", "unsupported format (expected 1)");

    Instance inst;
    const json& mode = member(j, "mode", "<root>");
    if (mode == "rects") {
        inst.mode = Mode::rects;
    } else if (mode == "homothets") {
        inst.mode = Mode::homothets;
    } else {
        fail("mode", "expected \"rects\" or \"homothets\"");
    }
    if (auto it = j.find("meta"); it != j.end()) {
        if (!it->is_object()) fail("meta", "expected object");
        inst.meta = *it;
    }
    const json& pts = member(j, "points", "<root>");
    if (!pts.is_array()) fail("points", "expected array");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        inst.points.push_back(point_from(pts[i], "points[" + std::to_string(i) + "]"));
    }
    if (auto it = j.find("polygon"); it != j.end() && !it->is_null()) inst.polygon = polygon_from_json(*it);
    if (inst.mode == Mode::homothets && !inst.polygon) fail("polygon", "required for mode \"homothets\"");

    const json& objs = member(j, "objects", "<root>");
    if (!objs.is_array()) fail("objects", "expected array");
    for (std::size_t i = 0; i < objs.size(); ++i) {
        const std::string path = "objects[" + std::to_string(i) + "]";
        const json& o = objs[i];
        try {
            auto field = [&](const char* key) { return number(member(o, key, path), path + "." + key); };
            if (inst.mode == Mode::rects) {
                const double x_lo = field("x_lo");
                const double y_lo = field("y_lo");
                const double x_hi = field("x_hi");
                const double y_hi = field("y_hi");
                inst.rects.push_back(AxisRect::make(x_lo, y_lo, x_hi, y_hi));
            } else {
                const double scale = field("scale");
                const double tx = field("tx");
                const double ty = field("ty");
                inst.homothets.push_back(Homothet::make(scale, {tx, ty}));
            }
        } catch (const GeometryError& e) {
            fail(path, e.what());
        }
    }
    return inst;
}

std::string serialize(const Instance& inst) { return to_json(inst).dump(1) + "\n"; }

Instance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    return instance_from_json(j);
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize(inst);
}

SimplePolygon load_polygon(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    // Either a bare vertex list or {"polygon": [...]}.
    if (j.is_object()) return polygon_from_json(member(j, "polygon", "<root>"));
    return polygon_from_json(j);
}

void check_feasible(const Instance& inst) {
    for (std::size_t i = 0; i < inst.object_count(); ++i) {
        bool hit = false;
        for (const Point& p : inst.points) {
            hit = inst.mode == Mode::rects ? rect_contains_point(inst.rects[i], p)
                                           : point_in_homothet_of_polygon(p, *inst.polygon, inst.homothets[i]);
            if (hit) break;
        }
        if (!hit) throw InfeasibleInstance(i);
    }
}

}  // namespace ohs
