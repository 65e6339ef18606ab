#include "ohs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ohs {

bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

AxisRect AxisRect::make(double x_lo, double y_lo, double x_hi, double y_hi) {
    if (!std::isfinite(x_lo) || !std::isfinite(y_lo) || !std::isfinite(x_hi) || !std::isfinite(y_hi)) {
        throw GeometryError("non-finite rectangle coordinate");
    }
    if (x_lo > x_hi || y_lo > y_hi) {
        throw GeometryError("rectangle bounds out of order");
    }
    return {x_lo, y_lo, x_hi, y_hi};
}

std::string to_string(const AxisRect& r) {
    std::ostringstream os;
    os.precision(17);
    os << '(' << r.x_lo << ',' << r.y_lo << ',' << r.x_hi << ',' << r.y_hi << ')';
    return os.str();
}

double aspect_ratio(const AxisRect& r) {
    const double w = r.width();
    const double h = r.height();
    if (!(w > 0.0) || !(h > 0.0)) {
        throw GeometryError("degenerate rectangle");
    }
    return std::max(w, h) / std::min(w, h);
}

bool rect_contains_point(const AxisRect& r, Point p) {
    return r.x_lo <= p.x && p.x <= r.x_hi && r.y_lo <= p.y && p.y <= r.y_hi;
}

bool rects_intersect(const AxisRect& a, const AxisRect& b) {
    return a.x_lo <= b.x_hi && b.x_lo <= a.x_hi && a.y_lo <= b.y_hi && b.y_lo <= a.y_hi;
}

bool rect_contains_rect(const AxisRect& outer, const AxisRect& inner) {
    return outer.x_lo <= inner.x_lo && inner.x_hi <= outer.x_hi && outer.y_lo <= inner.y_lo &&
           inner.y_hi <= outer.y_hi;
}

std::optional<AxisRect> intersection(const AxisRect& a, const AxisRect& b) {
    if (!rects_intersect(a, b)) return std::nullopt;
    return AxisRect{std::max(a.x_lo, b.x_lo), std::max(a.y_lo, b.y_lo), std::min(a.x_hi, b.x_hi),
                    std::min(a.y_hi, b.y_hi)};
}

Parallelogram Parallelogram::make(Point origin, Vec2 u, Vec2 v) {
    if (!is_finite(origin) || !std::isfinite(u.x) || !std::isfinite(u.y) || !std::isfinite(v.x) ||
        !std::isfinite(v.y)) {
        throw GeometryError("non-finite parallelogram");
    }
    if (cross(u, v) == 0.0) {
        throw GeometryError("degenerate parallelogram");
    }
    return {origin, u, v};
}

std::array<Point, 4> Parallelogram::vertices() const {
    return {origin, origin + u, (origin + u) + v, origin + v};
}

bool Parallelogram::contains(Point p) const {
    // Solve p - origin = s*u + t*v and test s, t in [0,1].
    const Vec2 d = p - origin;
    const double det = cross(u, v);
    const double s = cross(d, v) / det;
    const double t = cross(u, d) / det;
    return s >= 0.0 && s <= 1.0 && t >= 0.0 && t <= 1.0;
}

AffineMap::AffineMap(double a11, double a12, double a21, double a22, Vec2 translation)
    : a11_(a11), a12_(a12), a21_(a21), a22_(a22), t_(translation) {
    if (determinant() == 0.0 || !std::isfinite(determinant())) {
        throw GeometryError("singular affine map");
    }
}

Point AffineMap::apply(Point p) const {
    return {a11_ * p.x + a12_ * p.y + t_.x, a21_ * p.x + a22_ * p.y + t_.y};
}

Vec2 AffineMap::apply_linear(Vec2 v) const { return {a11_ * v.x + a12_ * v.y, a21_ * v.x + a22_ * v.y}; }

AffineMap AffineMap::inverse() const {
    const double det = determinant();
    if (det == 0.0 || !std::isfinite(det)) throw GeometryError("singular affine map");
    const double b11 = a22_ / det, b12 = -a12_ / det, b21 = -a21_ / det, b22 = a11_ / det;
    const Vec2 t{-(b11 * t_.x + b12 * t_.y), -(b21 * t_.x + b22 * t_.y)};
    return {b11, b12, b21, b22, t};
}

AffineMap parallelogram_to_unit_square(const Parallelogram& m) {
    const double det = cross(m.u, m.v);
    if (det == 0.0) throw GeometryError("degenerate parallelogram");
    // Inverse of the column matrix [u v].
    const double b11 = m.v.y / det, b12 = -m.v.x / det;
    const double b21 = -m.u.y / det, b22 = m.u.x / det;
    const Vec2 t{-(b11 * m.origin.x + b12 * m.origin.y), -(b21 * m.origin.x + b22 * m.origin.y)};
    return {b11, b12, b21, b22, t};
}

Homothet Homothet::make(double scale, Vec2 translation) {
    if (!std::isfinite(scale) || !(scale > 0.0)) {
        throw GeometryError("homothet scale must be positive");
    }
    if (!std::isfinite(translation.x) || !std::isfinite(translation.y)) {
        throw GeometryError("non-finite homothet translation");
    }
    return {scale, translation};
}

double signed_area(const std::vector<Point>& ring) {
    double twice = 0.0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point a = ring[i];
        const Point b = ring[(i + 1) % ring.size()];
        twice += a.x * b.y - b.x * a.y;
    }
    return twice / 2.0;
}

namespace {

int orientation(Point a, Point b, Point c) {
    const double v = cross(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
}

}  // namespace

bool on_segment(Point a, Point b, Point p) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point a, Point b, Point c, Point d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

SimplePolygon SimplePolygon::make(std::vector<Point> v) {
    const std::size_t k = v.size();
    if (k < 3) throw GeometryError("polygon needs at least 3 vertices");
    for (const Point& p : v) {
        if (!is_finite(p)) throw GeometryError("non-finite polygon vertex");
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (v[i] == v[(i + 1) % k]) throw GeometryError("repeated consecutive polygon vertex");
    }
    for (std::size_t i = 0; i < k; ++i) {
        const Point a = v[i], b = v[(i + 1) % k];
        for (std::size_t j = i + 1; j < k; ++j) {
            const Point c = v[j], d = v[(j + 1) % k];
            const bool adjacent = (j == i + 1) || (i == 0 && j == k - 1);
            if (!adjacent) {
                if (segments_intersect(a, b, c, d)) throw GeometryError("self-intersecting polygon");
                continue;
            }
            // Adjacent edges may only share their common endpoint.
            const Point shared = (j == i + 1) ? b : a;
            const Point other_ab = (j == i + 1) ? a : b;
            const Point other_cd = (j == i + 1) ? d : c;
            if (orientation(other_ab, shared, other_cd) == 0) {
                // Collinear: folding back onto the previous edge overlaps it.
                const Vec2 e1 = shared - other_ab;
                const Vec2 e2 = other_cd - shared;
                if (e1.x * e2.x + e1.y * e2.y < 0.0) throw GeometryError("self-intersecting polygon");
            }
        }
    }
    const double area = ohs::signed_area(v);
    if (area == 0.0) throw GeometryError("degenerate polygon");
    if (area < 0.0) throw GeometryError("polygon must be counterclockwise");
    return SimplePolygon(std::move(v));
}

double SimplePolygon::signed_area() const { return ohs::signed_area(vertices_); }

AxisRect SimplePolygon::bounding_box() const {
    AxisRect r{vertices_[0].x, vertices_[0].y, vertices_[0].x, vertices_[0].y};
    for (const Point& p : vertices_) {
        r.x_lo = std::min(r.x_lo, p.x);
        r.y_lo = std::min(r.y_lo, p.y);
        r.x_hi = std::max(r.x_hi, p.x);
        r.y_hi = std::max(r.y_hi, p.y);
    }
    return r;
}

bool SimplePolygon::contains(Point p) const {
    const std::size_t k = vertices_.size();
    bool inside = false;
    for (std::size_t i = 0, j = k - 1; i < k; j = i++) {
        const Point a = vertices_[j];
        const Point b = vertices_[i];
        if (on_segment(a, b, p)) return true;
        if ((b.y > p.y) != (a.y > p.y)) {
            // x-coordinate of the edge at height p.y, compared without division.
            const double lhs = (p.x - b.x) * (a.y - b.y);
            const double rhs = (a.x - b.x) * (p.y - b.y);
            if (a.y > b.y ? lhs < rhs : lhs > rhs) inside = !inside;
        }
    }
    return inside;
}

bool SimplePolygon::is_parallelogram() const {
    if (vertices_.size() != 4) return false;
    const auto& v = vertices_;
    return (v[1] - v[0]) == (v[2] - v[3]) && (v[3] - v[0]) == (v[2] - v[1]);
}

bool point_in_homothet_of_polygon(Point p, const SimplePolygon& poly, const Homothet& h) {
    return poly.contains(h.preimage(p));
}

}  // namespace ohs
