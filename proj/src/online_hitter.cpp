#include "ohs/online_hitter.hpp"

#include <algorithm>

#include "ohs/crossing.hpp"

namespace ohs {

OnlineHitter::OnlineHitter(std::shared_ptr<const BBDTree> tree)
    : tree_(std::move(tree)),
      active_(tree_->node_count(), false),
      in_set_(tree_->points().size(), false) {}

bool OnlineHitter::hits(const AxisRect& object) const {
    const auto points = tree_->points();
    return std::any_of(hitting_set_.begin(), hitting_set_.end(),
                       [&](PointId id) { return rect_contains_point(object, points[id]); });
}

void OnlineHitter::activate(NodeId id, RoundReport& report) {
    if (id == kNoNode || active_[static_cast<std::size_t>(id)]) return;
    active_[static_cast<std::size_t>(id)] = true;
    ++active_count_;
    report.activated_nodes.push_back(id);
    for (PointId pid : tree_->node(id).extremal) {
        if (in_set_[static_cast<std::size_t>(pid)]) continue;
        in_set_[static_cast<std::size_t>(pid)] = true;
        hitting_set_.push_back(pid);
        report.added_points.push_back(pid);
    }
}

void OnlineHitter::activate_with_sibling(NodeId id, RoundReport& report) {
    activate(id, report);
    activate(tree_->sibling(id), report);
}

NodeId OnlineHitter::highest_inactive_ancestor(NodeId id) const {
    NodeId cur = id;
    for (;;) {
        const NodeId parent = tree_->node(cur).parent;
        if (parent == kNoNode || active_[static_cast<std::size_t>(parent)]) return cur;
        cur = parent;
    }
}

const RoundReport& OnlineHitter::process(const AxisRect& object) {
    const AxisRect s = AxisRect::make(object.x_lo, object.y_lo, object.x_hi, object.y_hi);
    const PointId fallback = tree_->first_point_in(s);
    if (fallback < 0) throw InfeasibleObject();

    RoundReport report;
    report.round = log_.size() + 1;
    report.object = s;
    if (hits(s)) {
        report.already_hit = true;
        log_.push_back(std::move(report));
        return log_.back();
    }

    // Step 1: corners.
    const AxisRect& root_box = tree_->bounding_square();
    for (Point corner : s.corners()) {
        if (!rect_contains_point(root_box, corner)) {
            activate(tree_->root(), report);
            continue;
        }
        for (NodeId id : tree_->path_to(corner)) {
            if (!active_[static_cast<std::size_t>(id)]) {
                activate_with_sibling(id, report);
                break;
            }
        }
    }

    // Step 2: crossed cells, in pre-order, reading activation flags live.
    for (NodeId u : crossed_nodes(*tree_, s)) {
        const BBDNode& node = tree_->node(u);
        if (active_[static_cast<std::size_t>(u)]) {
            if (!node.is_leaf() && !active_[static_cast<std::size_t>(node.children[0])]) {
                activate(node.children[0], report);
                activate(node.children[1], report);
            }
        } else {
            activate_with_sibling(highest_inactive_ancestor(u), report);
        }
    }

    // Step 3.
    if (!hits(s)) {
        in_set_[static_cast<std::size_t>(fallback)] = true;
        hitting_set_.push_back(fallback);
        report.added_points.push_back(fallback);
        report.fallback_point_used = true;
    }

    log_.push_back(std::move(report));
    return log_.back();
}

std::vector<std::size_t> OnlineHitter::unhit_round_counts() const {
    std::vector<std::size_t> counts(tree_->points().size(), 0);
    for (const RoundReport& r : log_) {
        if (r.already_hit) continue;
        for (PointId pid : tree_->points_in(r.object)) ++counts[static_cast<std::size_t>(pid)];
    }
    return counts;
}

std::size_t OnlineHitter::max_points_per_round() const {
    std::size_t best = 0;
    for (const RoundReport& r : log_) best = std::max(best, r.added_points.size());
    return best;
}

InvariantReport OnlineHitter::check_invariants() const {
    InvariantReport rep;
    for (std::size_t i = 0; i < active_.size(); ++i) {
        const auto id = static_cast<NodeId>(i);
        const BBDNode& n = tree_->node(id);
        if (n.parent != kNoNode) {
            const bool mine = active_[i];
            if (mine && !active_[static_cast<std::size_t>(n.parent)]) {
                rep.upward_closed = false;
                if (rep.counterexample == kNoNode) rep.counterexample = id;
            }
            if (mine != active_[static_cast<std::size_t>(tree_->sibling(id))]) {
                rep.siblings_paired = false;
                if (rep.counterexample == kNoNode) rep.counterexample = id;
            }
        }
        if (active_[i]) {
            for (PointId pid : n.extremal) {
                if (!in_set_[static_cast<std::size_t>(pid)]) {
                    rep.extremal_contained = false;
                    if (rep.counterexample == kNoNode) rep.counterexample = id;
                }
            }
        }
    }
    return rep;
}

}  // namespace ohs
