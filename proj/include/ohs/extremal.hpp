#pragma once

#include <span>
#include <vector>

#include "ohs/cell.hpp"

namespace ohs {

struct ExtremalSet {
    std::vector<PointId> point_ids;     // ascending, deduplicated
    std::vector<AxisRect> subrectangles;  // empty when the cell has no inner box
};

/// Points of P inside the closed rectangle `r` with minimum x, maximum x,
/// minimum y and maximum y. Ties go to the smallest index. Result ascending.
std::vector<PointId> ext(const AxisRect& r, std::span<const Point> points);

/// Same four extremes over an explicit candidate list (already filtered).
std::vector<PointId> extremes_of(std::span<const PointId> candidates, std::span<const Point> points);

/// Nonempty regions of outer \ inner cut along the four lines through the
/// sides of inner, in row-major order from the bottom-left. Throws
/// GeometryError("nothing to subdivide") when the inner box is absent.
std::vector<AxisRect> subdivide_cell(const Cell& c);

/// Ext of a cell. Cell points are those assigned to the cell (half-open rule
/// relative to `frame`); each one is charged to the single subrectangle it is
/// assigned to.
ExtremalSet ext_cell(const Cell& c, std::span<const Point> points, const AxisRect& frame);

/// As above, restricted to `cell_points`, which must already be the points
/// assigned to the cell.
ExtremalSet ext_cell(const Cell& c, std::span<const PointId> cell_points, std::span<const Point> points,
                     const AxisRect& frame);

}  // namespace ohs
