#include "ohs/bbd_tree.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "ohs/extremal.hpp"

namespace ohs {

AxisRect bounding_square(std::span<const Point> points) {
    if (points.empty()) throw GeometryError("empty point set");
    double x_lo = points[0].x, x_hi = points[0].x, y_lo = points[0].y, y_hi = points[0].y;
    for (const Point& p : points) {
        x_lo = std::min(x_lo, p.x);
        x_hi = std::max(x_hi, p.x);
        y_lo = std::min(y_lo, p.y);
        y_hi = std::max(y_hi, p.y);
    }
    const double extent = std::max(x_hi - x_lo, y_hi - y_lo);
    double side = 1.0;
    if (extent > 0.0) {
        while (side < 2.0 * extent) side *= 2.0;
        while (side / 2.0 >= 2.0 * extent) side /= 2.0;
    }
    const double half = side / 2.0;
    const double sx = std::floor(x_lo / half) * half;
    const double sy = std::floor(y_lo / half) * half;
    const AxisRect square{sx, sy, sx + side, sy + side};
    if (!(x_hi < square.x_hi) || !(y_hi < square.y_hi) || !std::isfinite(square.x_hi) ||
        !std::isfinite(square.y_hi)) {
        throw GeometryError("coordinates out of representable range");
    }
    return square;
}

namespace {

// Midpoint split of the longer side; ties split vertically. Returns {low, high}.
std::pair<AxisRect, AxisRect> halves(const AxisRect& b) {
    if (b.width() >= b.height()) {
        const double mid = b.x_lo + b.width() / 2.0;
        if (!(b.x_lo < mid && mid < b.x_hi)) throw GeometryError("points too close to separate");
        return {AxisRect{b.x_lo, b.y_lo, mid, b.y_hi}, AxisRect{mid, b.y_lo, b.x_hi, b.y_hi}};
    }
    const double mid = b.y_lo + b.height() / 2.0;
    if (!(b.y_lo < mid && mid < b.y_hi)) throw GeometryError("points too close to separate");
    return {AxisRect{b.x_lo, b.y_lo, b.x_hi, mid}, AxisRect{b.x_lo, mid, b.x_hi, b.y_hi}};
}

// A cell whose inner box is exactly one half of its outer box is the other half.
Cell canonical(Cell c) {
    if (!c.inner) return c;
    const auto [lo, hi] = halves(c.outer);
    if (*c.inner == lo) return Cell{hi, std::nullopt};
    if (*c.inner == hi) return Cell{lo, std::nullopt};
    return c;
}

}  // namespace

class TreeBuilder {
public:
    TreeBuilder(std::span<const Point> points, AxisRect frame) : points_(points), frame_(frame) {}

    std::vector<NodeSpec> run(BuildStats& stats) {
        std::vector<PointId> all(points_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<PointId>(i);
        specs_.push_back(NodeSpec{Cell{frame_, std::nullopt}});
        build(0, std::move(all), false);
        stats = stats_;
        return std::move(specs_);
    }

private:
    std::span<const Point> points_;
    AxisRect frame_;
    std::vector<NodeSpec> specs_;
    BuildStats stats_;

    std::vector<PointId> take(std::vector<PointId>& ids, const Cell& c) {
        std::vector<PointId> in;
        std::vector<PointId> out;
        for (PointId id : ids) {
            (assigned_to_cell(c, frame_, points_[id]) ? in : out).push_back(id);
        }
        ids = std::move(out);
        return in;
    }

    // Follow the heavier midpoint half while it holds more than 2/3 of the
    // cell's points and still contains the inner box.
    AxisRect centroid_box(const Cell& cell, const std::vector<PointId>& ids) {
        const std::size_t m = ids.size();
        AxisRect box = cell.outer;
        std::vector<PointId> current = ids;
        for (;;) {
            const auto [lo, hi] = halves(box);
            std::vector<PointId> in_lo;
            std::vector<PointId> in_hi;
            for (PointId id : current) {
                (assigned_to_box(lo, frame_, points_[id]) ? in_lo : in_hi).push_back(id);
            }
            const bool lo_heavier = in_lo.size() >= in_hi.size();
            const AxisRect& heavy = lo_heavier ? lo : hi;
            std::vector<PointId>& heavy_ids = lo_heavier ? in_lo : in_hi;
            if (3 * heavy_ids.size() <= 2 * m) return box;
            if (cell.inner && !rect_contains_rect(heavy, *cell.inner)) return box;
            box = heavy;
            current = std::move(heavy_ids);
        }
    }

    void build(NodeId id, std::vector<PointId> ids, bool force_split) {
        if (ids.size() <= 1) return;
        const Cell cell = specs_[static_cast<std::size_t>(id)].cell;

        Cell first;
        Cell second;
        bool second_forced = false;
        const AxisRect target = force_split ? cell.outer : centroid_box(cell, ids);
        if (target == cell.outer) {
            const auto [lo, hi] = halves(cell.outer);
            Cell a{lo, std::nullopt};
            Cell b{hi, std::nullopt};
            if (cell.inner) (rect_contains_rect(lo, *cell.inner) ? a : b).inner = cell.inner;
            first = canonical(a);
            second = canonical(b);
            ++stats_.splits;
        } else {
            first = canonical(Cell{cell.outer, target});
            second = canonical(Cell{target, cell.inner});
            second_forced = true;
            ++stats_.shrinks;
        }

        std::vector<PointId> first_ids = take(ids, first);
        std::vector<PointId> second_ids = std::move(ids);

        const auto first_id = static_cast<NodeId>(specs_.size());
        specs_.push_back(NodeSpec{first});
        specs_[static_cast<std::size_t>(id)].left = first_id;
        build(first_id, std::move(first_ids), false);

        const auto second_id = static_cast<NodeId>(specs_.size());
        specs_.push_back(NodeSpec{second});
        specs_[static_cast<std::size_t>(id)].right = second_id;
        build(second_id, std::move(second_ids), second_forced);
    }
};

BBDTree BBDTree::build(std::vector<Point> points) {
    if (points.empty()) throw GeometryError("empty point set");
    for (const Point& p : points) {
        if (!is_finite(p)) throw GeometryError("non-finite point");
    }
    {
        std::vector<Point> sorted = points;
        std::sort(sorted.begin(), sorted.end(), [](Point a, Point b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw GeometryError("duplicate point");
    }
    const AxisRect frame = ohs::bounding_square(points);
    BuildStats stats;
    TreeBuilder builder(points, frame);
    std::vector<NodeSpec> specs = builder.run(stats);
    BBDTree tree = assemble(std::move(points), frame, std::move(specs));
    stats.single_region_cells = tree.stats_.single_region_cells;
    tree.stats_ = stats;
    return tree;
}

BBDTree BBDTree::assemble(std::vector<Point> points, AxisRect frame, std::vector<NodeSpec> specs) {
    if (specs.empty()) throw GeometryError("tree needs a root node");
    BBDTree t;
    t.points_ = std::move(points);
    t.bounding_square_ = frame;
    t.nodes_.resize(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i) {
        BBDNode& n = t.nodes_[i];
        n.cell = specs[i].cell;
        n.children[0] = specs[i].left;
        n.children[1] = specs[i].right;
        if ((n.children[0] == kNoNode) != (n.children[1] == kNoNode)) {
            throw GeometryError("internal node needs exactly two children");
        }
        for (NodeId c : n.children) {
            if (c == kNoNode) continue;
            if (c <= static_cast<NodeId>(i) || c >= static_cast<NodeId>(specs.size())) {
                throw GeometryError("child ids must follow their parent");
            }
            if (t.nodes_[static_cast<std::size_t>(c)].parent != kNoNode) throw GeometryError("node has two parents");
            t.nodes_[static_cast<std::size_t>(c)].parent = static_cast<NodeId>(i);
        }
    }
    t.finish();
    return t;
}

void BBDTree::finish() {
    depth_ = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        BBDNode& n = nodes_[i];
        n.depth = n.parent == kNoNode ? 0 : nodes_[static_cast<std::size_t>(n.parent)].depth + 1;
        depth_ = std::max(depth_, n.depth);
        if (n.is_leaf()) {
            n.kind = NodeKind::leaf;
        } else {
            const Cell& a = nodes_[static_cast<std::size_t>(n.children[0])].cell;
            const Cell& b = nodes_[static_cast<std::size_t>(n.children[1])].cell;
            const bool shrink = (a.inner && b.outer == *a.inner) || (b.inner && a.outer == *b.inner);
            n.kind = shrink ? NodeKind::shrink : NodeKind::split;
        }
    }

    // Lay out point ids so each subtree owns a contiguous range. Points that
    // fit no child (possible only in hand-assembled trees) stay at the node.
    order_.clear();
    order_.reserve(points_.size());
    std::vector<PointId> members;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (assigned_to_box(bounding_square_, bounding_square_, points_[i])) members.push_back(static_cast<PointId>(i));
    }
    auto layout = [&](auto&& self, NodeId id, std::vector<PointId> ids) -> void {
        BBDNode& n = nodes_[static_cast<std::size_t>(id)];
        n.begin = order_.size();
        if (n.is_leaf()) {
            order_.insert(order_.end(), ids.begin(), ids.end());
            n.end = order_.size();
            return;
        }
        std::vector<PointId> left;
        std::vector<PointId> right;
        for (PointId pid : ids) {
            const Point p = points_[pid];
            if (assigned_to_cell(nodes_[static_cast<std::size_t>(n.children[0])].cell, bounding_square_, p)) {
                left.push_back(pid);
            } else if (assigned_to_cell(nodes_[static_cast<std::size_t>(n.children[1])].cell, bounding_square_, p)) {
                right.push_back(pid);
            } else {
                order_.push_back(pid);
            }
        }
        const NodeId c0 = n.children[0];
        const NodeId c1 = n.children[1];
        self(self, c0, std::move(left));
        self(self, c1, std::move(right));
        nodes_[static_cast<std::size_t>(id)].end = order_.size();
    };
    layout(layout, root(), std::move(members));

    stats_.single_region_cells = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        BBDNode& n = nodes_[i];
        // Ext is computed over the points assigned to this cell, which are the
        // whole subtree range.
        std::vector<PointId> own(order_.begin() + static_cast<std::ptrdiff_t>(n.begin),
                                 order_.begin() + static_cast<std::ptrdiff_t>(n.end));
        n.min_point = own.empty() ? -1 : *std::min_element(own.begin(), own.end());
        std::vector<PointId> in_cell;
        in_cell.reserve(own.size());
        for (PointId pid : own) {
            if (assigned_to_cell(n.cell, bounding_square_, points_[pid])) in_cell.push_back(pid);
        }
        if (n.cell.inner) {
            const ExtremalSet e = ext_cell(n.cell, in_cell, points_, bounding_square_);
            if (e.subrectangles.size() < 2) ++stats_.single_region_cells;
            n.extremal = e.point_ids;
        } else {
            n.extremal = extremes_of(in_cell, points_);
        }
    }
}

std::span<const PointId> BBDTree::cell_points(NodeId id) const {
    const BBDNode& n = node(id);
    return std::span<const PointId>(order_).subspan(n.begin, n.end - n.begin);
}

NodeId BBDTree::sibling(NodeId id) const {
    const NodeId parent = node(id).parent;
    if (parent == kNoNode) return kNoNode;
    const BBDNode& p = node(parent);
    return p.children[0] == id ? p.children[1] : p.children[0];
}

std::vector<NodeId> BBDTree::path_to(Point p) const {
    if (!assigned_to_box(bounding_square_, bounding_square_, p)) throw GeometryError("outside root cell");
    std::vector<NodeId> path{root()};
    for (;;) {
        const BBDNode& n = node(path.back());
        if (n.is_leaf()) break;
        NodeId next = kNoNode;
        for (NodeId c : n.children) {
            if (assigned_to_cell(node(c).cell, bounding_square_, p)) {
                next = c;
                break;
            }
        }
        if (next == kNoNode) break;
        path.push_back(next);
    }
    return path;
}

NodeId BBDTree::locate_point(Point p) const { return path_to(p).back(); }

std::string BBDTree::dump() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const BBDNode& n = nodes_[i];
        os << i << ' ' << n.parent << " r_out" << to_string(n.cell.outer) << ' ';
        if (n.cell.inner) {
            os << "r_in" << to_string(*n.cell.inner);
        } else {
            os << "none";
        }
        os << ' ' << n.point_count() << '\n';
    }
    return os.str();
}

PointId BBDTree::first_point_in(const AxisRect& r) const {
    PointId best = -1;
    std::vector<NodeId> stack{root()};
    while (!stack.empty()) {
        const BBDNode& n = node(stack.back());
        stack.pop_back();
        if (n.begin == n.end || !rects_intersect(n.cell.outer, r)) continue;
        if (best >= 0 && n.min_point >= best) continue;
        if (rect_contains_rect(r, n.cell.outer)) {
            best = n.min_point;
            continue;
        }
        if (n.is_leaf()) {
            for (std::size_t k = n.begin; k < n.end; ++k) {
                const PointId pid = order_[k];
                if (rect_contains_point(r, points_[pid]) && (best < 0 || pid < best)) best = pid;
            }
            continue;
        }
        // Points stranded at an internal node of a hand-assembled tree.
        const std::size_t child_begin = node(n.children[0]).begin;
        for (std::size_t k = n.begin; k < child_begin; ++k) {
            const PointId pid = order_[k];
            if (rect_contains_point(r, points_[pid]) && (best < 0 || pid < best)) best = pid;
        }
        stack.push_back(n.children[1]);
        stack.push_back(n.children[0]);
    }
    return best;
}

std::vector<PointId> BBDTree::points_in(const AxisRect& r) const {
    std::vector<PointId> out;
    std::vector<NodeId> stack{root()};
    while (!stack.empty()) {
        const BBDNode& n = node(stack.back());
        stack.pop_back();
        if (n.begin == n.end || !rects_intersect(n.cell.outer, r)) continue;
        if (rect_contains_rect(r, n.cell.outer)) {
            out.insert(out.end(), order_.begin() + static_cast<std::ptrdiff_t>(n.begin),
                       order_.begin() + static_cast<std::ptrdiff_t>(n.end));
            continue;
        }
        const std::size_t scan_end = n.is_leaf() ? n.end : node(n.children[0]).begin;
        for (std::size_t k = n.begin; k < scan_end; ++k) {
            const PointId pid = order_[k];
            if (rect_contains_point(r, points_[pid])) out.push_back(pid);
        }
        if (!n.is_leaf()) {
            stack.push_back(n.children[1]);
            stack.push_back(n.children[0]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ohs
