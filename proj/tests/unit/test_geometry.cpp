#include <doctest.h>

#include <cmath>

#include "ohs/geometry.hpp"
#include "../support.hpp"

using namespace ohs;
using testing_support::Random;

TEST_CASE("aspect ratio") {
    CHECK(aspect_ratio(AxisRect::make(0, 0, 1, 1)) == 1.0);
    CHECK(aspect_ratio(AxisRect::make(0, 0, 2, 1)) == 2.0);
    CHECK(aspect_ratio(AxisRect::make(0, 0, 6, 2)) == 3.0);
    CHECK_THROWS_WITH_AS(aspect_ratio(AxisRect::make(0, 0, 0, 1)), "degenerate rectangle", GeometryError);
    CHECK_THROWS_AS(AxisRect::make(1, 0, 0, 1), GeometryError);
    CHECK_THROWS_AS(AxisRect::make(0, 0, INFINITY, 1), GeometryError);
}

TEST_CASE("aspect ratio is at least one and symmetric under axis swap") {
    Random rng(1);
    for (int i = 0; i < 1000; ++i) {
        const AxisRect r = testing_support::random_rect(rng);
        const AxisRect t = AxisRect::make(r.y_lo, r.x_lo, r.y_hi, r.x_hi);
        CHECK(aspect_ratio(r) >= 1.0);
        CHECK(aspect_ratio(r) == aspect_ratio(t));
    }
}

TEST_CASE("closed point containment") {
    const AxisRect r = AxisRect::make(0, 0, 1, 1);
    CHECK(rect_contains_point(r, {0, 0}));
    CHECK(rect_contains_point(r, {0.5, 0.5}));
    CHECK_FALSE(rect_contains_point(r, {1.0000001, 0.5}));
}

TEST_CASE("rectangle intersection") {
    CHECK(rects_intersect(AxisRect::make(0, 0, 1, 1), AxisRect::make(1, 1, 2, 2)));
    CHECK_FALSE(rects_intersect(AxisRect::make(0, 0, 1, 1), AxisRect::make(2, 2, 3, 3)));
    CHECK(rects_intersect(AxisRect::make(0, 0, 4, 4), AxisRect::make(1, 1, 2, 2)));
    Random rng(2);
    for (int i = 0; i < 1000; ++i) {
        const AxisRect a = testing_support::random_rect(rng);
        const AxisRect b = testing_support::random_rect(rng);
        CHECK(rects_intersect(a, a));
        CHECK(rects_intersect(a, b) == rects_intersect(b, a));
        CHECK(rects_intersect(a, b) == intersection(a, b).has_value());
    }
}

TEST_CASE("parallelogram to unit square: fixed cases") {
    const AffineMap id = parallelogram_to_unit_square(Parallelogram::make({0, 0}, {1, 0}, {0, 1}));
    CHECK(id.a11() == 1.0);
    CHECK(id.a12() == 0.0);
    CHECK(id.a21() == 0.0);
    CHECK(id.a22() == 1.0);
    CHECK(id.translation() == Vec2{0, 0});

    const AffineMap half = parallelogram_to_unit_square(Parallelogram::make({0, 0}, {2, 0}, {0, 2}));
    CHECK(half.a11() == 0.5);
    CHECK(half.a22() == 0.5);
    CHECK(half.a12() == 0.0);
    CHECK(half.a21() == 0.0);
    CHECK(half.translation() == Vec2{0, 0});

    const AffineMap sheared = parallelogram_to_unit_square(Parallelogram::make({1, 1}, {1, 0}, {1, 1}));
    CHECK(sheared.apply({1, 1}) == Point{0, 0});
    CHECK(sheared.apply({2, 1}) == Point{1, 0});
    CHECK(sheared.apply({2, 2}) == Point{0, 1});

    CHECK_THROWS_AS(Parallelogram::make({0, 0}, {1, 1}, {2, 2}), GeometryError);
}

TEST_CASE("homothets of a parallelogram map to axis-aligned squares") {
    Random rng(3);
    for (int i = 0; i < 10000; ++i) {
        Vec2 u{rng.unit() * 4 - 2, rng.unit() * 4 - 2};
        Vec2 v{rng.unit() * 4 - 2, rng.unit() * 4 - 2};
        if (std::abs(cross(u, v)) < 0.05) continue;
        if (cross(u, v) < 0) std::swap(u, v);
        const Parallelogram m = Parallelogram::make({rng.unit() * 4 - 2, rng.unit() * 4 - 2}, u, v);
        const AffineMap map = parallelogram_to_unit_square(m);
        const double a = 0.01 + rng.unit() * 8;
        const Homothet h = Homothet::make(a, {rng.unit() * 10 - 5, rng.unit() * 10 - 5});
        const auto verts = m.vertices();
        const Point q0 = map.apply(h.apply(verts[0]));
        const Point q1 = map.apply(h.apply(verts[1]));
        const Point q2 = map.apply(h.apply(verts[2]));
        const Point q3 = map.apply(h.apply(verts[3]));
        const double tol = 1e-9;
        REQUIRE(std::abs(q1.x - (q0.x + a)) <= tol);
        REQUIRE(std::abs(q1.y - q0.y) <= tol);
        REQUIRE(std::abs(q2.x - (q0.x + a)) <= tol);
        REQUIRE(std::abs(q2.y - (q0.y + a)) <= tol);
        REQUIRE(std::abs(q3.x - q0.x) <= tol);
        REQUIRE(std::abs(q3.y - (q0.y + a)) <= tol);
    }
}

TEST_CASE("affine inverse") {
    const AffineMap m(2, 1, -1, 3, {0.5, -2});
    const AffineMap inv = m.inverse();
    const Point p{0.25, 1.75};
    const Point back = inv.apply(m.apply(p));
    CHECK(std::abs(back.x - p.x) < 1e-12);
    CHECK(std::abs(back.y - p.y) < 1e-12);
    CHECK_THROWS_AS(AffineMap(1, 2, 2, 4, {0, 0}).inverse(), GeometryError);
}

TEST_CASE("point in homothet of polygon") {
    const SimplePolygon tri = SimplePolygon::make({{0, 0}, {1, 0}, {0, 1}});
    CHECK(point_in_homothet_of_polygon({0.25, 0.25}, tri, Homothet::make(1, {0, 0})));
    CHECK(point_in_homothet_of_polygon({1, 1}, tri, Homothet::make(2, {1, 1})));
    CHECK_FALSE(point_in_homothet_of_polygon({0.6, 0.6}, tri, Homothet::make(1, {0, 0})));
    CHECK(point_in_homothet_of_polygon({0.5, 0.5}, tri, Homothet::make(1, {0, 0})));  // on the hypotenuse
    CHECK_THROWS_AS(Homothet::make(0, {0, 0}), GeometryError);
    CHECK_THROWS_AS(Homothet::make(-1, {0, 0}), GeometryError);
}

TEST_CASE("homothet membership equals membership of the preimage") {
    const SimplePolygon poly = SimplePolygon::make({{0, 0}, {4, 0}, {4, 3}, {2, 1}, {0, 3}});
    Random rng(4);
    for (int i = 0; i < 10000; ++i) {
        const Homothet h = Homothet::make(std::ldexp(static_cast<double>(rng.between(1, 64)), -4),
                                          {rng.dyadic(6) * 4 - 2, rng.dyadic(6) * 4 - 2});
        const Point p{rng.dyadic(8) * 12 - 4, rng.dyadic(8) * 12 - 4};
        REQUIRE(point_in_homothet_of_polygon(p, poly, h) ==
                point_in_homothet_of_polygon(h.preimage(p), poly, Homothet::make(1, {0, 0})));
    }
}

TEST_CASE("simple polygon validation") {
    CHECK_NOTHROW(SimplePolygon::make({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK_THROWS_AS(SimplePolygon::make({{0, 0}, {1, 0}}), GeometryError);
    CHECK_THROWS_AS(SimplePolygon::make({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), GeometryError);
    CHECK_THROWS_AS(SimplePolygon::make({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), GeometryError);  // bow tie
    CHECK_THROWS_AS(SimplePolygon::make({{0, 0}, {0, 1}, {1, 0}}), GeometryError);          // clockwise
    CHECK_THROWS_AS(SimplePolygon::make({{0, 0}, {1, 0}, {2, 0}}), GeometryError);          // zero area
    CHECK(SimplePolygon::make({{0, 0}, {2, 0}, {3, 1}, {1, 1}}).is_parallelogram());
    CHECK_FALSE(SimplePolygon::make({{0, 0}, {2, 0}, {2, 1}, {1, 2}}).is_parallelogram());
}

TEST_CASE("polygon contains is closed") {
    const SimplePolygon sq = SimplePolygon::make({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(sq.contains({0, 0}));
    CHECK(sq.contains({1, 0.5}));
    CHECK(sq.contains({0.5, 0.5}));
    CHECK_FALSE(sq.contains({1.5, 0.5}));
    const SimplePolygon notch = SimplePolygon::make({{0, 0}, {4, 0}, {4, 3}, {2, 1}, {0, 3}});
    CHECK(notch.contains({2, 1}));
    CHECK_FALSE(notch.contains({2, 2}));
    CHECK(notch.contains({1, 1}));
}
