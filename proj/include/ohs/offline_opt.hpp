#pragma once

// Exact minimum hitting set, used as the offline optimum when measuring
// competitive ratios.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ohs/geometry.hpp"
#include "ohs/cell.hpp"

namespace ohs {

class InfeasibleInstance : public std::runtime_error {
public:
    explicit InfeasibleInstance(std::size_t object_index)
        : std::runtime_error("infeasible instance: object " + std::to_string(object_index) + " contains no point"),
          object_index_(object_index) {}
    std::size_t object_index() const { return object_index_; }

private:
    std::size_t object_index_;
};

struct HittingInstance {
    std::size_t num_points = 0;
    std::vector<std::vector<PointId>> sets;  // each ascending and nonempty
};

/// Deduplicates the sets and drops every set that is a proper superset of
/// another one. Set order after reduction: ascending size, then lexicographic.
HittingInstance reduce_sets(std::size_t num_points, std::vector<std::vector<PointId>> sets);

HittingInstance reduce(std::span<const AxisRect> objects, std::span<const Point> points);
HittingInstance reduce(std::span<const Homothet> objects, const SimplePolygon& polygon, std::span<const Point> points);

struct OptOptions {
    double time_limit_seconds = 0.0;  // <= 0: no limit
};

struct OptResult {
    std::vector<PointId> hitting_set;  // ascending
    // True when the search closed with lower bound == upper bound.
    bool proven = false;
    std::size_t lower_bound = 0;
    std::size_t upper_bound = 0;
    std::size_t greedy_upper_bound = 0;
    std::size_t packing_lower_bound = 0;
    std::size_t nodes = 0;

    std::size_t size() const { return hitting_set.size(); }
};

/// Branch and bound: branch on the points of the smallest unhit set, bound
/// with a greedily packed family of pairwise disjoint unhit sets, seeded by
/// the greedy max-coverage solution.
OptResult exact_min_hitting_set(const HittingInstance& inst, const OptOptions& options = {});

/// Greedy max-coverage hitting set (ties to the smallest id).
std::vector<PointId> greedy_hitting_set(const HittingInstance& inst);

/// Size of a greedily packed family of pairwise disjoint sets.
std::size_t disjoint_packing_bound(const HittingInstance& inst);

bool is_hitting_set(const HittingInstance& inst, std::span<const PointId> candidate);

/// alg / opt. Throws std::invalid_argument when opt is zero.
double competitive_ratio(std::size_t alg_size, std::size_t opt_size);

}  // namespace ohs
