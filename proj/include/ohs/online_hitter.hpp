#pragma once

// Online hitting set for axis-aligned rectangles of bounded aspect ratio over
// a fixed point set, driven by a BBD tree.
//
// State per round: the hitting set H (points are only ever added) and the set
// A of active tree nodes. A is closed upward, activated in sibling pairs, and
// H always contains Ext of every active node.

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ohs/bbd_tree.hpp"

namespace ohs {

class InfeasibleObject : public std::runtime_error {
public:
    InfeasibleObject() : std::runtime_error("infeasible object") {}
};

struct RoundReport {
    std::size_t round = 0;  // 1-based
    AxisRect object{};
    bool already_hit = false;
    std::vector<NodeId> activated_nodes;
    std::vector<PointId> added_points;
    bool fallback_point_used = false;
};

struct InvariantReport {
    bool upward_closed = true;
    bool siblings_paired = true;
    bool extremal_contained = true;
    NodeId counterexample = kNoNode;

    bool ok() const { return upward_closed && siblings_paired && extremal_contained; }
};

class OnlineHitter {
public:
    explicit OnlineHitter(std::shared_ptr<const BBDTree> tree);

    /// Runs one round. Throws InfeasibleObject (state untouched) when the
    /// rectangle contains no point of P.
    const RoundReport& process(const AxisRect& object);

    const BBDTree& tree() const { return *tree_; }
    const std::shared_ptr<const BBDTree>& shared_tree() const { return tree_; }

    /// Insertion order.
    std::span<const PointId> hitting_set() const { return hitting_set_; }
    bool in_hitting_set(PointId id) const { return in_set_[static_cast<std::size_t>(id)]; }
    bool is_active(NodeId id) const { return active_[static_cast<std::size_t>(id)]; }
    std::size_t active_count() const { return active_count_; }
    std::size_t round() const { return log_.size(); }
    const std::vector<RoundReport>& log() const { return log_; }

    bool hits(const AxisRect& object) const;

    /// For every point p: rounds whose object contained p and was not hit by
    /// the hitting set at the start of that round. Derived from the log.
    std::vector<std::size_t> unhit_round_counts() const;

    /// Largest |added_points| over the log.
    std::size_t max_points_per_round() const;

    InvariantReport check_invariants() const;

private:
    std::shared_ptr<const BBDTree> tree_;
    std::vector<bool> active_;
    std::vector<bool> in_set_;
    std::vector<PointId> hitting_set_;
    std::size_t active_count_ = 0;
    std::vector<RoundReport> log_;

    void activate(NodeId id, RoundReport& report);
    void activate_with_sibling(NodeId id, RoundReport& report);
    NodeId highest_inactive_ancestor(NodeId id) const;
};

}  // namespace ohs
