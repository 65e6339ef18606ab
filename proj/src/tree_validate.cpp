#include "ohs/tree_validate.hpp"

#include <cmath>
#include <sstream>

namespace ohs {

namespace {

// Deliberately restated here rather than reusing cell.cpp, so the validator
// does not share code with what it checks.
bool member(const AxisRect& box, const AxisRect& root, Point p) {
    const bool xs = p.x >= box.x_lo && (p.x < box.x_hi || (p.x == box.x_hi && box.x_hi == root.x_hi));
    const bool ys = p.y >= box.y_lo && (p.y < box.y_hi || (p.y == box.y_hi && box.y_hi == root.y_hi));
    return xs && ys;
}

bool in_cell(const Cell& c, const AxisRect& root, Point p) {
    return member(c.outer, root, p) && !(c.inner && member(*c.inner, root, p));
}

double cell_area(const Cell& c) {
    const double outer = (c.outer.x_hi - c.outer.x_lo) * (c.outer.y_hi - c.outer.y_lo);
    if (!c.inner) return outer;
    return outer - (c.inner->x_hi - c.inner->x_lo) * (c.inner->y_hi - c.inner->y_lo);
}

bool aspect_ok(const AxisRect& r) {
    const double w = r.x_hi - r.x_lo;
    const double h = r.y_hi - r.y_lo;
    if (!(w > 0.0) || !(h > 0.0)) return false;
    return w <= 3.0 * h && h <= 3.0 * w;
}

bool within(const AxisRect& outer, const AxisRect& inner) {
    return outer.x_lo <= inner.x_lo && inner.x_hi <= outer.x_hi && outer.y_lo <= inner.y_lo &&
           inner.y_hi <= outer.y_hi;
}

bool sticky_grid(const AxisRect& in, const AxisRect& out) {
    const double w = in.x_hi - in.x_lo;
    const double h = in.y_hi - in.y_lo;
    for (int i = -1; i <= 1; ++i) {
        for (int j = -1; j <= 1; ++j) {
            const AxisRect c{in.x_lo + i * w, in.y_lo + j * h, in.x_hi + i * w, in.y_hi + j * h};
            const bool inside = within(out, c);
            const bool apart = c.x_hi <= out.x_lo || c.x_lo >= out.x_hi || c.y_hi <= out.y_lo || c.y_lo >= out.y_hi;
            if (!inside && !apart) return false;
        }
    }
    return true;
}

class Recorder {
public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }

    void fail(NodeId node, const std::string& detail) {
        if (!result_.passed) return;
        result_.passed = false;
        result_.counterexample = node;
        result_.detail = detail;
    }

    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

}  // namespace

double depth_limit(std::size_t n, const TreeBounds& bounds) {
    return bounds.depth_per_log2 * std::log2(static_cast<double>(n) + 1.0) + bounds.depth_offset;
}

bool ValidationReport::ok() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

const CheckResult* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.passed) os << " node=" << c.counterexample << " " << c.detail;
        os << '\n';
    }
    return os.str();
}

ValidationReport validate(const BBDTree& tree, const TreeBounds& bounds) {
    const AxisRect& root = tree.bounding_square();
    const auto nodes = tree.nodes();
    const auto points = tree.points();

    Recorder aspect("aspect_ratio");
    Recorder proper("inner_proper_subset");
    Recorder sticky("stickiness");
    Recorder partition("partition");
    Recorder leaves("leaf_points");
    Recorder depth("depth_bound");
    Recorder count("node_count_bound");

    if (!(nodes[0].cell.outer == root) || nodes[0].cell.inner) partition.fail(0, "root cell is not the bounding square");

    constexpr int kSamples = 4;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto id = static_cast<NodeId>(i);
        const Cell& c = nodes[i].cell;
        if (!aspect_ok(c.outer)) aspect.fail(id, "r_out " + ohs::to_string(c.outer));
        if (c.inner) {
            if (!aspect_ok(*c.inner)) aspect.fail(id, "r_in " + ohs::to_string(*c.inner));
            if (!within(c.outer, *c.inner) || *c.inner == c.outer) proper.fail(id, "r_in not a proper subset");
            if (!sticky_grid(*c.inner, c.outer)) {
                sticky.fail(id, "r_in " + ohs::to_string(*c.inner) + " in r_out " + ohs::to_string(c.outer));
            }
        }
        if (nodes[i].is_leaf()) continue;

        const Cell& a = nodes[static_cast<std::size_t>(nodes[i].children[0])].cell;
        const Cell& b = nodes[static_cast<std::size_t>(nodes[i].children[1])].cell;
        if (!within(c.outer, a.outer) || !within(c.outer, b.outer)) {
            partition.fail(id, "child box escapes parent box");
            continue;
        }
        if (cell_area(a) + cell_area(b) != cell_area(c)) {
            partition.fail(id, "child areas do not sum to parent area");
            continue;
        }
        const double w = c.outer.x_hi - c.outer.x_lo;
        const double h = c.outer.y_hi - c.outer.y_lo;
        for (int sx = 0; sx <= 2 * kSamples; ++sx) {
            for (int sy = 0; sy <= 2 * kSamples; ++sy) {
                const Point p{c.outer.x_lo + w * sx / (2 * kSamples), c.outer.y_lo + h * sy / (2 * kSamples)};
                const int hits = static_cast<int>(in_cell(a, root, p)) + static_cast<int>(in_cell(b, root, p));
                const int expected = in_cell(c, root, p) ? 1 : 0;
                if (hits != expected) {
                    std::ostringstream os;
                    os.precision(17);
                    os << "sample (" << p.x << ',' << p.y << ") covered " << hits << " times";
                    partition.fail(id, os.str());
                }
            }
        }
    }

    // Re-derive the leaf of every point by descent.
    std::vector<std::size_t> per_leaf(nodes.size(), 0);
    std::size_t placed = 0;
    for (std::size_t pid = 0; pid < points.size(); ++pid) {
        const Point p = points[pid];
        if (!member(root, root, p)) {
            leaves.fail(0, "point " + std::to_string(pid) + " outside root");
            continue;
        }
        std::size_t cur = 0;
        bool lost = false;
        while (!nodes[cur].is_leaf()) {
            const auto c0 = static_cast<std::size_t>(nodes[cur].children[0]);
            const auto c1 = static_cast<std::size_t>(nodes[cur].children[1]);
            const bool in0 = in_cell(nodes[c0].cell, root, p);
            const bool in1 = in_cell(nodes[c1].cell, root, p);
            if (in0 == in1) {
                partition.fail(static_cast<NodeId>(cur), "point " + std::to_string(pid) + " in " +
                                                             std::to_string(int(in0) + int(in1)) + " children");
                lost = true;
                break;
            }
            cur = in0 ? c0 : c1;
        }
        if (lost) continue;
        ++per_leaf[cur];
        ++placed;
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!nodes[i].is_leaf()) continue;
        if (per_leaf[i] > 1) leaves.fail(static_cast<NodeId>(i), std::to_string(per_leaf[i]) + " points in leaf");
        if (per_leaf[i] != nodes[i].point_count()) leaves.fail(static_cast<NodeId>(i), "stored point count disagrees");
    }
    if (placed != points.size()) leaves.fail(0, "not every point reached a leaf");

    const std::size_t n = points.size();
    if (tree.depth() > depth_limit(n, bounds)) {
        depth.fail(0, "depth " + std::to_string(tree.depth()) + " exceeds bound");
    }
    if (static_cast<double>(nodes.size()) > bounds.nodes_per_point * static_cast<double>(n)) {
        count.fail(0, std::to_string(nodes.size()) + " nodes exceeds bound");
    }

    ValidationReport report;
    for (Recorder* r : {&aspect, &proper, &sticky, &partition, &leaves, &depth, &count}) {
        report.checks.push_back(r->take());
    }
    return report;
}

}  // namespace ohs
