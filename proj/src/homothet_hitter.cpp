#include "ohs/homothet_hitter.hpp"

#include <algorithm>

namespace ohs {

namespace {

bool in_closed_triangle(Point a, Point b, Point c, Point p) {
    const double d1 = cross(b - a, p - a);
    const double d2 = cross(c - b, p - b);
    const double d3 = cross(a - c, p - c);
    return d1 >= 0.0 && d2 >= 0.0 && d3 >= 0.0;
}

Point midpoint(Point a, Point b) { return {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0}; }

}  // namespace

std::vector<Triangle> triangulate(const SimplePolygon& poly) {
    std::vector<Point> ring = poly.vertices();
    std::vector<Triangle> out;
    out.reserve(ring.size() - 2);
    while (ring.size() > 3) {
        const std::size_t k = ring.size();
        bool clipped = false;
        for (std::size_t i = 0; i < k; ++i) {
            const Point prev = ring[(i + k - 1) % k];
            const Point cur = ring[i];
            const Point next = ring[(i + 1) % k];
            if (cross(cur - prev, next - cur) <= 0.0) continue;  // reflex or flat
            bool blocked = false;
            for (std::size_t j = 0; j < k && !blocked; ++j) {
                if (j == i || j == (i + k - 1) % k || j == (i + 1) % k) continue;
                blocked = in_closed_triangle(prev, cur, next, ring[j]);
            }
            if (blocked) continue;
            out.push_back({prev, cur, next});
            ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
            clipped = true;
            break;
        }
        if (!clipped) throw GeometryError("polygon has no ear; not simple");
    }
    if (cross(ring[1] - ring[0], ring[2] - ring[1]) <= 0.0) throw GeometryError("degenerate final triangle");
    out.push_back({ring[0], ring[1], ring[2]});
    return out;
}

std::array<Parallelogram, 3> triangle_to_parallelograms(const Triangle& t) {
    if (cross(t.b - t.a, t.c - t.a) == 0.0) throw GeometryError("degenerate triangle");
    const Point m_ab = midpoint(t.a, t.b);
    const Point m_bc = midpoint(t.b, t.c);
    const Point m_ca = midpoint(t.c, t.a);
    // Corner X with its two adjacent edge midpoints; the fourth vertex is the
    // midpoint of the opposite edge.
    return {Parallelogram::make(t.a, m_ab - t.a, m_ca - t.a), Parallelogram::make(t.b, m_bc - t.b, m_ab - t.b),
            Parallelogram::make(t.c, m_ca - t.c, m_bc - t.c)};
}

Decomposition decompose(const SimplePolygon& poly) {
    Decomposition d{poly, triangulate(poly), {}, {}};
    for (const Triangle& t : d.triangles) {
        for (const Parallelogram& m : triangle_to_parallelograms(t)) {
            d.parallelograms.push_back(m);
            d.maps.push_back(parallelogram_to_unit_square(m));
        }
    }
    return d;
}

HomothetHitter::HomothetHitter(std::vector<Point> points, const SimplePolygon& polygon, MultiHitterOptions options)
    : points_(std::move(points)), decomposition_(decompose(polygon)), in_set_(points_.size(), false) {
    if (points_.empty()) throw GeometryError("empty point set");
    std::vector<Parallelogram> shapes;
    if (options.direct_parallelogram && polygon.is_parallelogram()) {
        const auto& v = polygon.vertices();
        shapes.push_back(Parallelogram::make(v[0], v[1] - v[0], v[3] - v[0]));
    } else {
        shapes = decomposition_.parallelograms;
    }
    pieces_.reserve(shapes.size());
    for (const Parallelogram& m : shapes) {
        const AffineMap map = parallelogram_to_unit_square(m);
        std::vector<Point> mapped;
        mapped.reserve(points_.size());
        for (const Point& p : points_) mapped.push_back(map.apply(p));
        auto tree = std::make_shared<const BBDTree>(BBDTree::build(std::move(mapped)));
        pieces_.push_back(Piece{m, map, tree, OnlineHitter(tree)});
    }
}

bool HomothetHitter::contains(const Homothet& h, PointId id) const {
    return point_in_homothet_of_polygon(points_[static_cast<std::size_t>(id)], decomposition_.polygon, h);
}

bool HomothetHitter::hits(const Homothet& h) const {
    return std::any_of(hitting_set_.begin(), hitting_set_.end(), [&](PointId id) { return contains(h, id); });
}

AxisRect HomothetHitter::piece_square(std::size_t j, const Homothet& h) const {
    const Piece& piece = pieces_[j];
    const Point o = piece.shape.origin;
    const Point corner = piece.map.apply({h.scale * o.x + h.translation.x, h.scale * o.y + h.translation.y});
    return AxisRect{corner.x, corner.y, corner.x + h.scale, corner.y + h.scale};
}

void HomothetHitter::add_point(PointId id, HomothetRoundReport& report) {
    if (in_set_[static_cast<std::size_t>(id)]) return;
    in_set_[static_cast<std::size_t>(id)] = true;
    hitting_set_.push_back(id);
    report.added_points.push_back(id);
}

const HomothetRoundReport& HomothetHitter::process(const Homothet& object) {
    const Homothet h = Homothet::make(object.scale, object.translation);
    PointId first = -1;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (contains(h, static_cast<PointId>(i))) {
            first = static_cast<PointId>(i);
            break;
        }
    }
    if (first < 0) throw InfeasibleObject();

    HomothetRoundReport report;
    report.round = log_.size() + 1;
    report.object = h;
    if (hits(h)) {
        report.already_hit = true;
        log_.push_back(std::move(report));
        return log_.back();
    }
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
        const AxisRect square = piece_square(j, h);
        if (pieces_[j].tree->first_point_in(square) < 0) continue;
        report.fed_pieces.push_back(j);
        // Merged in piece order so the union is deterministic.
        for (PointId id : pieces_[j].hitter.process(square).added_points) add_point(id, report);
    }
    if (!hits(h)) {
        add_point(first, report);
        report.fallback_point_used = true;
    }
    log_.push_back(std::move(report));
    return log_.back();
}

std::size_t HomothetHitter::max_points_per_round() const {
    std::size_t best = 0;
    for (const auto& r : log_) best = std::max(best, r.added_points.size());
    return best;
}

std::vector<int> HomothetHitter::piece_depths() const {
    std::vector<int> out;
    for (const Piece& p : pieces_) out.push_back(p.tree->depth());
    return out;
}

}  // namespace ohs
