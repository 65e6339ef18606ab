#pragma once

// Instance files (JSON, "format": 1).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ohs/geometry.hpp"

namespace ohs {

enum class Mode { rects, homothets };

std::string to_string(Mode m);

struct Instance {
    Mode mode = Mode::rects;
    std::vector<Point> points;
    std::vector<AxisRect> rects;         // mode == rects
    std::vector<Homothet> homothets;     // mode == homothets
    std::optional<SimplePolygon> polygon;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();

    std::size_t object_count() const { return mode == Mode::rects ? rects.size() : homothets.size(); }
    std::optional<std::uint64_t> seed() const;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::ordered_json to_json(const Instance& inst);
/// Throws ParseError naming the offending field.
Instance instance_from_json(const nlohmann::ordered_json& j);

std::string serialize(const Instance& inst);
/// Throws ParseError with line and column for malformed JSON.
Instance parse_instance(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

SimplePolygon polygon_from_json(const nlohmann::ordered_json& j);
SimplePolygon load_polygon(const std::string& path);

/// Throws InfeasibleInstance with the index of the first object containing no point.
void check_feasible(const Instance& inst);

}  // namespace ohs
