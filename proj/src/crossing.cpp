#include "ohs/crossing.hpp"

namespace ohs {

bool cell_meets_rect(const Cell& c, const AxisRect& r) {
    const auto overlap = intersection(c.outer, r);
    if (!overlap) return false;
    if (!c.inner) return true;
    // The overlap is a closed rectangle; it misses C only if it sits inside
    // the open interior of the inner box.
    const AxisRect& in = *c.inner;
    const bool in_open = in.x_lo < overlap->x_lo && overlap->x_hi < in.x_hi && in.y_lo < overlap->y_lo &&
                         overlap->y_hi < in.y_hi;
    return !in_open;
}

bool crosses(const AxisRect& r, const Cell& c) {
    if (!cell_meets_rect(c, r)) return false;
    for (Point corner : r.corners()) {
        if (closed_cell_contains(c, corner)) return false;
    }
    for (Point v : cell_vertices(c)) {
        if (rect_contains_point(r, v)) return false;
    }
    return true;
}

std::vector<NodeId> crossed_nodes(const BBDTree& tree, const AxisRect& r) {
    std::vector<NodeId> out;
    std::vector<NodeId> stack{tree.root()};
    while (!stack.empty()) {
        const NodeId id = stack.back();
        stack.pop_back();
        const BBDNode& n = tree.node(id);
        if (!cell_meets_rect(n.cell, r)) continue;
        // R contains every vertex of this cell and of all descendant cells.
        if (rect_contains_rect(r, n.cell.outer)) continue;
        if (crosses(r, n.cell)) out.push_back(id);
        if (!n.is_leaf()) {
            stack.push_back(n.children[1]);
            stack.push_back(n.children[0]);
        }
    }
    return out;
}

}  // namespace ohs
