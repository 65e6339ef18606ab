#pragma once

// Balanced box decomposition tree over a fixed planar point set.
//
// Every box produced by construction is a quadtree box of the bounding
// square (obtained by repeated midpoint splits of the longer side, ties split
// vertically), so all boxes have aspect ratio 1 or 2 and any inner box is
// automatically sticky in any enclosing box.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ohs/cell.hpp"

namespace ohs {

enum class NodeKind { leaf, split, shrink };

struct BBDNode {
    Cell cell;
    NodeKind kind = NodeKind::leaf;
    NodeId parent = kNoNode;
    NodeId children[2] = {kNoNode, kNoNode};
    int depth = 0;
    // Range into BBDTree::point_order() holding the points assigned to this cell.
    std::size_t begin = 0;
    std::size_t end = 0;
    PointId min_point = -1;  // smallest id in the range, -1 when empty
    std::vector<PointId> extremal;  // Ext of the cell, ascending

    bool is_leaf() const { return children[0] == kNoNode; }
    std::size_t point_count() const { return end - begin; }
};

/// Hand-assembled node description (tests, goldens).
struct NodeSpec {
    Cell cell;
    NodeId left = kNoNode;
    NodeId right = kNoNode;
};

struct BuildStats {
    std::size_t splits = 0;
    std::size_t shrinks = 0;
    // Annular cells whose subdivision has fewer than two regions.
    std::size_t single_region_cells = 0;
};

/// The smallest power-of-two square, snapped to a grid of half its side,
/// that contains every point with its high edges strictly beyond the data.
AxisRect bounding_square(std::span<const Point> points);

class BBDTree {
public:
    /// Errors: "empty point set", "duplicate point", non-finite coordinates.
    static BBDTree build(std::vector<Point> points);

    /// Builds a tree from explicit nodes (node 0 is the root). Point membership
    /// and extremal sets are derived by descent under the assignment rule.
    /// No structural validation is performed; see validate().
    static BBDTree assemble(std::vector<Point> points, AxisRect bounding_square, std::vector<NodeSpec> nodes);

    NodeId root() const { return 0; }
    const BBDNode& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
    std::span<const BBDNode> nodes() const { return nodes_; }
    std::size_t node_count() const { return nodes_.size(); }
    int depth() const { return depth_; }
    std::span<const Point> points() const { return points_; }
    const AxisRect& bounding_square() const { return bounding_square_; }
    const BuildStats& stats() const { return stats_; }

    /// Point ids assigned to the node's cell.
    std::span<const PointId> cell_points(NodeId id) const;
    std::span<const PointId> point_order() const { return order_; }

    NodeId sibling(NodeId id) const;

    /// Leaf whose cell holds p under the assignment rule.
    /// Throws GeometryError("outside root cell").
    NodeId locate_point(Point p) const;
    /// Root-to-leaf path of locate_point.
    std::vector<NodeId> path_to(Point p) const;

    /// Pre-order dump, one node per line:
    /// `id parent r_out(x_lo,y_lo,x_hi,y_hi) r_in(...)|none point_count`
    std::string dump() const;

    /// Smallest point id inside the closed rectangle, or -1.
    PointId first_point_in(const AxisRect& r) const;
    /// All point ids inside the closed rectangle, ascending.
    std::vector<PointId> points_in(const AxisRect& r) const;

private:
    std::vector<Point> points_;
    AxisRect bounding_square_{};
    std::vector<BBDNode> nodes_;
    std::vector<PointId> order_;
    int depth_ = 0;
    BuildStats stats_{};

    friend class TreeBuilder;
    void finish();
};

}  // namespace ohs
