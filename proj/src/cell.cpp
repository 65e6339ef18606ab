#include "ohs/cell.hpp"

namespace ohs {

bool is_sticky(const AxisRect& inner, const AxisRect& outer) {
    const double w = inner.width();
    const double h = inner.height();
    for (int i = -1; i <= 1; ++i) {
        for (int j = -1; j <= 1; ++j) {
            const AxisRect copy{inner.x_lo + i * w, inner.y_lo + j * h, inner.x_hi + i * w, inner.y_hi + j * h};
            const bool inside = rect_contains_rect(outer, copy);
            const bool interior_disjoint = copy.x_hi <= outer.x_lo || outer.x_hi <= copy.x_lo ||
                                           copy.y_hi <= outer.y_lo || outer.y_hi <= copy.y_lo;
            if (!inside && !interior_disjoint) return false;
        }
    }
    return true;
}

bool is_sticky_by_gaps(const AxisRect& inner, const AxisRect& outer) {
    auto ok = [](double gap, double side) { return gap == 0.0 || gap >= side; };
    return ok(inner.x_lo - outer.x_lo, inner.width()) && ok(outer.x_hi - inner.x_hi, inner.width()) &&
           ok(inner.y_lo - outer.y_lo, inner.height()) && ok(outer.y_hi - inner.y_hi, inner.height());
}

bool assigned_to_box(const AxisRect& box, const AxisRect& frame, Point p) {
    const bool x_ok = box.x_lo <= p.x && (p.x < box.x_hi || (box.x_hi == frame.x_hi && p.x == box.x_hi));
    const bool y_ok = box.y_lo <= p.y && (p.y < box.y_hi || (box.y_hi == frame.y_hi && p.y == box.y_hi));
    return x_ok && y_ok;
}

bool assigned_to_cell(const Cell& cell, const AxisRect& frame, Point p) {
    if (!assigned_to_box(cell.outer, frame, p)) return false;
    return !cell.inner || !assigned_to_box(*cell.inner, frame, p);
}

bool closed_cell_contains(const Cell& cell, Point p) {
    if (!rect_contains_point(cell.outer, p)) return false;
    if (!cell.inner) return true;
    const AxisRect& in = *cell.inner;
    const bool in_open_interior = in.x_lo < p.x && p.x < in.x_hi && in.y_lo < p.y && p.y < in.y_hi;
    return !in_open_interior;
}

std::vector<Point> cell_vertices(const Cell& cell) {
    std::vector<Point> out;
    out.reserve(8);
    for (Point p : cell.outer.corners()) out.push_back(p);
    if (cell.inner) {
        for (Point p : cell.inner->corners()) out.push_back(p);
    }
    return out;
}

}  // namespace ohs
