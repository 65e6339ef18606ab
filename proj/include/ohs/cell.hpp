#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ohs/geometry.hpp"

namespace ohs {

using PointId = std::int32_t;
using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

/// Region outer \ inner. An absent inner box means the cell is the whole outer box.
struct Cell {
    AxisRect outer;
    std::optional<AxisRect> inner;

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Every 3x3 grid translate of `inner` lies inside `outer` or misses its interior.
bool is_sticky(const AxisRect& inner, const AxisRect& outer);
/// Each side gap between `inner` and `outer` is 0 or at least the matching side length of `inner`.
bool is_sticky_by_gaps(const AxisRect& inner, const AxisRect& outer);

// Point assignment. Boxes are half-open [lo, hi) on both axes except along the
// high edges of `frame` (the root box), which are closed. Under this rule the
// cells of any level of the tree partition the frame.

bool assigned_to_box(const AxisRect& box, const AxisRect& frame, Point p);
bool assigned_to_cell(const Cell& cell, const AxisRect& frame, Point p);

/// Closed-set membership in outer minus the open interior of inner.
bool closed_cell_contains(const Cell& cell, Point p);

/// Corners of outer, then corners of inner when present.
std::vector<Point> cell_vertices(const Cell& cell);

}  // namespace ohs
