#pragma once

// Exact planar primitives shared by the whole library.
//
// Coordinates are doubles compared exactly (no epsilon). All containment
// predicates treat shapes as closed sets.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ohs {

class GeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(Point a, Vec2 v) { return {a.x + v.x, a.y + v.y}; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

bool is_finite(Point p);

/// Closed axis-aligned rectangle [x_lo, x_hi] x [y_lo, y_hi].
struct AxisRect {
    double x_lo = 0.0;
    double y_lo = 0.0;
    double x_hi = 0.0;
    double y_hi = 0.0;

    /// Validates ordering and finiteness. Degenerate (zero-extent) rectangles are allowed.
    static AxisRect make(double x_lo, double y_lo, double x_hi, double y_hi);

    double width() const { return x_hi - x_lo; }
    double height() const { return y_hi - y_lo; }
    double area() const { return width() * height(); }
    bool degenerate() const { return !(x_lo < x_hi) || !(y_lo < y_hi); }

    Point lower_left() const { return {x_lo, y_lo}; }
    Point lower_right() const { return {x_hi, y_lo}; }
    Point upper_left() const { return {x_lo, y_hi}; }
    Point upper_right() const { return {x_hi, y_hi}; }

    /// Corners in the order lower-left, lower-right, upper-left, upper-right.
    std::array<Point, 4> corners() const {
        return {lower_left(), lower_right(), upper_left(), upper_right()};
    }

    friend bool operator==(const AxisRect&, const AxisRect&) = default;
};

std::string to_string(const AxisRect& r);

/// Longer side over shorter side. Throws GeometryError("degenerate rectangle").
double aspect_ratio(const AxisRect& r);

bool rect_contains_point(const AxisRect& r, Point p);
bool rects_intersect(const AxisRect& a, const AxisRect& b);
/// `inner` is a (not necessarily proper) subset of `outer`.
bool rect_contains_rect(const AxisRect& outer, const AxisRect& inner);
/// Closed intersection; nullopt when the rectangles are disjoint.
std::optional<AxisRect> intersection(const AxisRect& a, const AxisRect& b);

struct Parallelogram {
    Point origin;
    Vec2 u;
    Vec2 v;

    static Parallelogram make(Point origin, Vec2 u, Vec2 v);

    /// origin, origin+u, origin+u+v, origin+v
    std::array<Point, 4> vertices() const;
    bool contains(Point p) const;
};

/// x -> linear * x + translation, with `linear` stored row-major.
class AffineMap {
public:
    AffineMap() = default;
    AffineMap(double a11, double a12, double a21, double a22, Vec2 translation);

    static AffineMap identity() { return {1.0, 0.0, 0.0, 1.0, {0.0, 0.0}}; }

    Point apply(Point p) const;
    Vec2 apply_linear(Vec2 v) const;
    double determinant() const { return a11_ * a22_ - a12_ * a21_; }
    AffineMap inverse() const;

    double a11() const { return a11_; }
    double a12() const { return a12_; }
    double a21() const { return a21_; }
    double a22() const { return a22_; }
    Vec2 translation() const { return t_; }

private:
    double a11_ = 1.0, a12_ = 0.0, a21_ = 0.0, a22_ = 1.0;
    Vec2 t_{};
};

/// Map sending origin -> (0,0), origin+u -> (1,0), origin+v -> (0,1).
AffineMap parallelogram_to_unit_square(const Parallelogram& m);

struct Homothet {
    double scale = 1.0;
    Vec2 translation{};

    static Homothet make(double scale, Vec2 translation);

    Point apply(Point p) const { return {scale * p.x + translation.x, scale * p.y + translation.y}; }
    Point preimage(Point p) const {
        return {(p.x - translation.x) / scale, (p.y - translation.y) / scale};
    }
};

class SimplePolygon {
public:
    /// Validates: >= 3 vertices, no repeated consecutive vertex, no self
    /// intersection, counterclockwise (positive signed area).
    static SimplePolygon make(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    double signed_area() const;
    AxisRect bounding_box() const;

    /// Closed point-in-polygon: ray crossing with explicit on-edge test.
    bool contains(Point p) const;

    /// True for 4 vertices with equal opposite edge vectors.
    bool is_parallelogram() const;

private:
    explicit SimplePolygon(std::vector<Point> v) : vertices_(std::move(v)) {}
    std::vector<Point> vertices_;
};

double signed_area(const std::vector<Point>& ring);
bool on_segment(Point a, Point b, Point p);
bool segments_intersect(Point a, Point b, Point c, Point d);

bool point_in_homothet_of_polygon(Point p, const SimplePolygon& poly, const Homothet& h);

}  // namespace ohs
