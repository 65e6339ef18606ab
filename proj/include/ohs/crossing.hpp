#pragma once

#include <vector>

#include "ohs/bbd_tree.hpp"

namespace ohs {

/// R crosses C when the closed sets meet, C holds no corner of R, and R holds
/// no vertex of C. C is outer minus the open interior of inner.
bool crosses(const AxisRect& r, const Cell& c);

/// Closed-set test for C ∩ R != ∅.
bool cell_meets_rect(const Cell& c, const AxisRect& r);

/// Every node whose cell `r` crosses, in pre-order. Subtrees whose cell
/// misses `r` are pruned.
std::vector<NodeId> crossed_nodes(const BBDTree& tree, const AxisRect& r);

}  // namespace ohs
