#pragma once

#include <string>
#include <vector>

#include "ohs/bbd_tree.hpp"

namespace ohs {

/// Regression bounds measured from the construction over the randomized
/// sweep (n = 16 .. 16384, uniform and clustered inputs) and then frozen.
struct TreeBounds {
    double depth_per_log2 = 3.0;   // C_d
    double depth_offset = 4.0;     // C_0
    double nodes_per_point = 5.0;  // C_n
};

struct CheckResult {
    std::string name;
    bool passed = true;
    NodeId counterexample = kNoNode;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool ok() const;
    const CheckResult* find(const std::string& name) const;
    std::string to_string() const;
};

/// Checks, independently of the construction code: aspect ratios, proper
/// containment and stickiness of inner boxes, that children partition their
/// parent's cell, leaf point counts, and the depth / node-count bounds.
ValidationReport validate(const BBDTree& tree, const TreeBounds& bounds = {});

/// Depth bound C_d * log2(n + 1) + C_0.
double depth_limit(std::size_t n, const TreeBounds& bounds = {});

}  // namespace ohs
