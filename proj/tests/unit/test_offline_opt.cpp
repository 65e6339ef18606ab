#include <doctest.h>

#include <algorithm>

#include "ohs/offline_opt.hpp"
#include "../support.hpp"

using namespace ohs;
using namespace testing_support;

TEST_CASE("reduce examples") {
    const std::vector<Point> pts = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}};
    const std::vector<AxisRect> same = {AxisRect::make(0, 0, 1, 1), AxisRect::make(0, 0, 1, 1)};
    CHECK(reduce(same, pts).sets.size() == 1);
    const std::vector<AxisRect> nested = {AxisRect::make(0, 0, 1, 1), AxisRect::make(0, 0, 2, 2)};
    const HittingInstance r = reduce(nested, pts);
    REQUIRE(r.sets.size() == 1);
    CHECK(r.sets[0] == std::vector<PointId>{0, 1});
    const std::vector<AxisRect> disjoint = {AxisRect::make(-0.5, -0.5, 0.5, 0.5), AxisRect::make(1.5, 1.5, 2.5, 2.5),
                                            AxisRect::make(3.5, 3.5, 4.5, 4.5)};
    CHECK(reduce(disjoint, pts).sets.size() == 3);
    const std::vector<AxisRect> empty = {AxisRect::make(0, 0, 1, 1), AxisRect::make(10, 10, 11, 11)};
    try {
        reduce(empty, pts);
        FAIL("expected infeasible instance");
    } catch (const InfeasibleInstance& e) {
        CHECK(e.object_index() == 1);
        CHECK(std::string(e.what()).find("infeasible instance") == 0);
    }
}

TEST_CASE("reduce for homothets") {
    const SimplePolygon tri = SimplePolygon::make({{0, 0}, {1, 0}, {0, 1}});
    const std::vector<Point> pts = {{0.1, 0.1}, {0.9, 0.9}};
    const std::vector<Homothet> objs = {Homothet::make(1, {0, 0}), Homothet::make(2, {0, 0})};
    const HittingInstance r = reduce(objs, tri, pts);
    CHECK(r.sets == std::vector<std::vector<PointId>>{{0}});
}

TEST_CASE("exact optimum examples") {
    const OptResult one = exact_min_hitting_set({2, {{0, 1}}});
    CHECK(one.hitting_set == std::vector<PointId>{0});
    CHECK(one.proven);
    const OptResult disjoint = exact_min_hitting_set({6, {{0, 1}, {2, 3}, {4, 5}}});
    CHECK(disjoint.size() == 3);
    CHECK(disjoint.proven);
    const OptResult empty = exact_min_hitting_set({3, {}});
    CHECK(empty.size() == 0);
    CHECK(empty.proven);
}

TEST_CASE("exact optimum equals exhaustive enumeration on 200 random instances") {
    Random rng(60);
    int mismatches = 0;
    for (int t = 0; t < 200; ++t) {
        const auto n = static_cast<std::size_t>(rng.between(1, 20));
        const auto m = static_cast<std::size_t>(rng.between(1, 30));
        const HittingInstance inst = random_instance(rng, n, m);
        const OptResult res = exact_min_hitting_set(inst);
        REQUIRE(res.proven);
        CHECK(res.lower_bound == res.upper_bound);
        CHECK(is_hitting_set(inst, res.hitting_set));
        CHECK(std::is_sorted(res.hitting_set.begin(), res.hitting_set.end()));
        mismatches += res.size() != exhaustive_minimum(inst) ? 1 : 0;
        CHECK(res.greedy_upper_bound >= res.size());
        CHECK(res.packing_lower_bound <= res.size());
    }
    CHECK(mismatches == 0);
}

TEST_CASE("bounds sandwich the optimum on larger instances") {
    Random rng(61);
    for (int t = 0; t < 50; ++t) {
        const HittingInstance inst = random_instance(rng, 120, 300);
        const OptResult res = exact_min_hitting_set(inst);
        REQUIRE(res.proven);
        CHECK(is_hitting_set(inst, res.hitting_set));
        CHECK(greedy_hitting_set(inst).size() >= res.size());
        CHECK(disjoint_packing_bound(inst) <= res.size());
    }
}

TEST_CASE("time limit yields an unproven result") {
    // Hard enough that a near-zero limit cannot close it.
    Random rng(62);
    std::vector<std::vector<PointId>> sets;
    for (int i = 0; i < 600; ++i) {
        std::vector<PointId> s;
        for (int j = 0; j < 6; ++j) s.push_back(static_cast<PointId>(rng.between(0, 199)));
        sets.push_back(s);
    }
    const HittingInstance inst = reduce_sets(200, sets);
    const OptResult res = exact_min_hitting_set(inst, {1e-9});
    CHECK_FALSE(res.proven);
    CHECK(is_hitting_set(inst, res.hitting_set));
    CHECK(res.lower_bound <= res.upper_bound);
}

TEST_CASE("competitive ratio") {
    CHECK(competitive_ratio(10, 5) == 2.0);
    CHECK(competitive_ratio(7, 7) == 1.0);
    CHECK(competitive_ratio(0, 1) == 0.0);
    CHECK_THROWS_AS(competitive_ratio(3, 0), std::invalid_argument);
}
