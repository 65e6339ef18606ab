#include "ohs/extremal.hpp"

#include <algorithm>
#include <array>

namespace ohs {

std::vector<PointId> extremes_of(std::span<const PointId> candidates, std::span<const Point> points) {
    if (candidates.empty()) return {};
    // min-x, max-x, min-y, max-y
    std::array<PointId, 4> best{candidates[0], candidates[0], candidates[0], candidates[0]};
    auto better = [&](PointId cand, PointId cur, double cv, double cu, bool want_less) {
        if (cv != cu) return want_less ? cv < cu : cv > cu;
        return cand < cur;
    };
    for (PointId id : candidates) {
        const Point p = points[id];
        if (better(id, best[0], p.x, points[best[0]].x, true)) best[0] = id;
        if (better(id, best[1], p.x, points[best[1]].x, false)) best[1] = id;
        if (better(id, best[2], p.y, points[best[2]].y, true)) best[2] = id;
        if (better(id, best[3], p.y, points[best[3]].y, false)) best[3] = id;
    }
    std::vector<PointId> out(best.begin(), best.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<PointId> ext(const AxisRect& r, std::span<const Point> points) {
    std::vector<PointId> inside;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (rect_contains_point(r, points[i])) inside.push_back(static_cast<PointId>(i));
    }
    return extremes_of(inside, points);
}

std::vector<AxisRect> subdivide_cell(const Cell& c) {
    if (!c.inner) throw GeometryError("nothing to subdivide");
    const AxisRect& o = c.outer;
    const AxisRect& in = *c.inner;
    const std::array<double, 4> xs{o.x_lo, in.x_lo, in.x_hi, o.x_hi};
    const std::array<double, 4> ys{o.y_lo, in.y_lo, in.y_hi, o.y_hi};
    std::vector<AxisRect> out;
    for (int row = 0; row < 3; ++row) {
        for (int col = 0; col < 3; ++col) {
            if (row == 1 && col == 1) continue;
            const AxisRect r{xs[col], ys[row], xs[col + 1], ys[row + 1]};
            if (r.width() > 0.0 && r.height() > 0.0) out.push_back(r);
        }
    }
    return out;
}

ExtremalSet ext_cell(const Cell& c, std::span<const PointId> cell_points, std::span<const Point> points,
                     const AxisRect& frame) {
    ExtremalSet result;
    if (!c.inner) {
        result.point_ids = extremes_of(cell_points, points);
        return result;
    }
    result.subrectangles = subdivide_cell(c);
    std::vector<std::vector<PointId>> buckets(result.subrectangles.size());
    for (PointId id : cell_points) {
        for (std::size_t k = 0; k < result.subrectangles.size(); ++k) {
            if (assigned_to_box(result.subrectangles[k], frame, points[id])) {
                buckets[k].push_back(id);
                break;
            }
        }
    }
    for (const auto& bucket : buckets) {
        const auto e = extremes_of(bucket, points);
        result.point_ids.insert(result.point_ids.end(), e.begin(), e.end());
    }
    std::sort(result.point_ids.begin(), result.point_ids.end());
    result.point_ids.erase(std::unique(result.point_ids.begin(), result.point_ids.end()), result.point_ids.end());
    return result;
}

ExtremalSet ext_cell(const Cell& c, std::span<const Point> points, const AxisRect& frame) {
    std::vector<PointId> members;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (assigned_to_cell(c, frame, points[i])) members.push_back(static_cast<PointId>(i));
    }
    return ext_cell(c, members, points, frame);
}

}  // namespace ohs
