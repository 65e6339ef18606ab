#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "ohs/generators.hpp"
#include "ohs/runner.hpp"

using namespace ohs;

namespace {

bool dyadic(double v) { return std::ldexp(v, 40) == std::floor(std::ldexp(v, 40)); }

bool feasible(const Instance& inst) {
    try {
        check_feasible(inst);
        return true;
    } catch (const InfeasibleInstance&) {
        return false;
    }
}

}  // namespace

TEST_CASE("generators are deterministic per seed") {
    for (GenKind k : {GenKind::uniform_squares, GenKind::one_point_nest, GenKind::grid_khan, GenKind::homothet_random}) {
        const GenSpec spec{k, 42, 100, 80, 3.0, std::nullopt};
        CHECK(serialize(generate(spec)) == serialize(generate(spec)));
        GenSpec other = spec;
        other.seed = 43;
        if (k != GenKind::one_point_nest) CHECK(serialize(generate(spec)) != serialize(generate(other)));
    }
}

TEST_CASE("uniform squares: feasible, dyadic, aspect bounded") {
    for (double rho : {1.0, 1.5, 2.0, 8.0}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const Instance inst = generate({GenKind::uniform_squares, seed, 200, 300, rho, std::nullopt});
            CHECK(inst.points.size() == 200);
            CHECK(inst.rects.size() == 300);
            CHECK(feasible(inst));
            std::set<std::pair<double, double>> distinct;
            for (const Point& p : inst.points) {
                CHECK(dyadic(p.x));
                CHECK(dyadic(p.y));
                CHECK((0 <= p.x && p.x < 1 && 0 <= p.y && p.y < 1));
                distinct.emplace(p.x, p.y);
            }
            CHECK(distinct.size() == 200);
            for (const AxisRect& r : inst.rects) {
                CHECK(aspect_ratio(r) <= rho);
                CHECK(dyadic(r.x_lo));
                CHECK(dyadic(r.y_hi));
            }
        }
    }
}

TEST_CASE("one-point nest: every square holds the target, squares are nested") {
    for (std::size_t n : {1, 16, 64, 1000, 4096}) {
        const Instance inst = generate({GenKind::one_point_nest, 7, n, 60, 1.0, std::nullopt});
        CHECK(inst.points.size() == n);
        std::set<std::pair<double, double>> distinct;
        for (const Point& p : inst.points) distinct.emplace(p.x, p.y);
        CHECK(distinct.size() == n);
        for (std::size_t i = 0; i < inst.rects.size(); ++i) {
            CHECK(rect_contains_point(inst.rects[i], inst.points[0]));
            CHECK(inst.rects[i].width() == inst.rects[i].height());
            if (i > 0) CHECK(rect_contains_rect(inst.rects[i - 1], inst.rects[i]));
        }
    }
}

TEST_CASE("grid and homothet generators are feasible") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Instance g = generate({GenKind::grid_khan, seed, 100, 200, 1.0, std::nullopt});
        CHECK(feasible(g));
        CHECK(g.points.size() == 100);
        const Instance h = generate({GenKind::homothet_random, seed, 100, 200, 1.0, std::nullopt});
        CHECK(feasible(h));
        REQUIRE(h.polygon.has_value());
        for (const Homothet& o : h.homothets) {
            CHECK(o.scale > 0);
            CHECK(o.scale >= std::ldexp(1.0, -8));
            CHECK(o.scale <= 8.0);
        }
    }
}

TEST_CASE("generator argument checks") {
    CHECK_THROWS_AS(generate({GenKind::uniform_squares, 0, 0, 1, 1.0, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(generate({GenKind::uniform_squares, 0, 1, 0, 1.0, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(generate({GenKind::uniform_squares, 0, 1, 1, 0.5, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(gen_kind_from_string("nope"), std::invalid_argument);
    CHECK(gen_kind_from_string("grid-khan") == GenKind::grid_khan);
}

TEST_CASE("bounded integers are uniform enough and in range") {
    Rng rng(5);
    std::vector<int> hist(7, 0);
    for (int i = 0; i < 70000; ++i) ++hist[rng.below(7)];
    for (int c : hist) CHECK(std::abs(c - 10000) < 500);
    for (int i = 0; i < 1000; ++i) {
        const auto v = rng.between(-3, 3);
        CHECK((-3 <= v && v <= 3));
    }
}

TEST_CASE("instance round trip") {
    for (GenKind k : {GenKind::uniform_squares, GenKind::homothet_random}) {
        const Instance a = generate({k, 9, 50, 40, 2.0, std::nullopt});
        const Instance b = parse_instance(serialize(a));
        CHECK(b.mode == a.mode);
        CHECK(b.points == a.points);
        CHECK(b.rects == a.rects);
        CHECK(b.homothets.size() == a.homothets.size());
        for (std::size_t i = 0; i < a.homothets.size(); ++i) {
            CHECK(b.homothets[i].scale == a.homothets[i].scale);
            CHECK(b.homothets[i].translation == a.homothets[i].translation);
        }
        CHECK(b.meta == a.meta);
        CHECK(serialize(b) == serialize(a));
    }
}

TEST_CASE("parse errors name the problem") {
    CHECK_THROWS_AS(parse_instance("{ not json"), ParseError);
    try {
        parse_instance("{\n\"format\": 1,\n\"mode\": \"rects\",\n\"points\": [[0, 0]],\n\"objects\": [{\"x_lo\": 0}]\n}");
        FAIL("expected parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("objects[0].y_lo") != std::string::npos);
    }
    try {
        parse_instance("{\"format\": 1,\n\"mode\": \"rects\",\n\"points\": [[0, 0],\n[1]]}");
        FAIL("expected parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("points[1]") != std::string::npos);
    }
    try {
        parse_instance("{\"format\": 1,\n\"mode\": \"rects\",\n\"points\": [[0, 0]\n\"objects\": []}");
        FAIL("expected parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_instance(R"({"format": 2, "mode": "rects", "points": [], "objects": []})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"format": 1, "mode": "homothets", "points": [], "objects": []})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"format": 1, "mode": "rects", "points": [],
        "objects": [{"x_lo": 1, "y_lo": 0, "x_hi": 0, "y_hi": 1}]})"),
                    ParseError);
}

TEST_CASE("runner on a small instance") {
    const Instance inst = generate({GenKind::uniform_squares, 1, 64, 100, 2.0, std::nullopt});
    RunOptions opts;
    opts.keep_log = true;
    const RunResult r = run_instance(inst, opts);
    CHECK(r.invariants_ok);
    CHECK(r.unhit_bound_ok);
    REQUIRE(r.opt_proven());
    CHECK(r.alg_size >= r.opt->size());
    CHECK(r.round_log.size() == 100);
    CHECK(r.alg_size <= r.max_points_per_round * static_cast<std::size_t>(r.tree_depth + 1) * r.opt->size());
    const std::string row = csv_row(inst, r);
    CHECK(std::count(row.begin(), row.end(), ',') == 9);
    CHECK(row.rfind("1,64,100,", 0) == 0);
}

TEST_CASE("runner on a triangle homothet instance reports three piece depths") {
    const Instance inst = generate({GenKind::homothet_random, 3, 64, 50, 1.0, std::nullopt});
    const RunResult r = run_instance(inst);
    CHECK(r.piece_depths.size() == 3);
    CHECK(r.invariants_ok);
    CHECK(r.unhit_bound_ok);
}

TEST_CASE("runner rejects infeasible instances") {
    Instance inst;
    inst.points = {{0, 0}};
    inst.rects = {AxisRect::make(0, 0, 1, 1), AxisRect::make(2, 2, 3, 3)};
    try {
        run_instance(inst);
        FAIL("expected infeasible");
    } catch (const InfeasibleInstance& e) {
        CHECK(e.object_index() == 1);
    }
}

TEST_CASE("csv formatting") {
    CHECK(csv_header() == "seed,n,m,rho,depth,alg,opt,ratio,max_per_round,ms");
    CHECK(format_number(1.5) == "1.5");
    CHECK(format_number(0.1) == "0.1");
}
