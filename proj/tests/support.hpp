#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <algorithm>
#include <span>

#include "ohs/bbd_tree.hpp"
#include "ohs/extremal.hpp"
#include "ohs/geometry.hpp"
#include "ohs/offline_opt.hpp"

namespace testing_support {

using namespace ohs;

struct Random {
    std::mt19937_64 engine;
    explicit Random(std::uint64_t seed) : engine(seed) {}

    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine);
    }
    double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine); }
    // Multiple of 2^-bits in [0, 1).
    double dyadic(int bits) { return static_cast<double>(between(0, (std::int64_t{1} << bits) - 1)) / double(std::int64_t{1} << bits); }
    bool coin() { return between(0, 1) == 1; }
};

inline std::vector<Point> dyadic_points(Random& rng, std::size_t n, int bits = 10) {
    std::set<std::pair<double, double>> seen;
    std::vector<Point> out;
    while (out.size() < n) {
        const Point p{rng.dyadic(bits), rng.dyadic(bits)};
        if (seen.emplace(p.x, p.y).second) out.push_back(p);
    }
    return out;
}

// Clustered: half the points in a tiny corner box, so shrinks happen.
inline std::vector<Point> clustered_points(Random& rng, std::size_t n, int bits = 16) {
    std::set<std::pair<double, double>> seen;
    std::vector<Point> out;
    while (out.size() < n) {
        Point p{rng.dyadic(bits), rng.dyadic(bits)};
        if (rng.coin()) p = {0.25 + p.x / 64.0, 0.75 + p.y / 64.0};
        if (seen.emplace(p.x, p.y).second) out.push_back(p);
    }
    return out;
}

// Rectangle with dyadic corners on a 2^-bits grid, inside [-1/4, 5/4]^2.
inline AxisRect random_rect(Random& rng, int bits = 8) {
    double a = rng.dyadic(bits) * 1.5 - 0.25, b = rng.dyadic(bits) * 1.5 - 0.25;
    double c = rng.dyadic(bits) * 1.5 - 0.25, d = rng.dyadic(bits) * 1.5 - 0.25;
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    if (a == b) b = a + 1.0 / 256.0;
    if (c == d) d = c + 1.0 / 256.0;
    return AxisRect::make(a, c, b, d);
}

// Nondegenerate rectangle of aspect ratio <= rho with dyadic corners.
inline AxisRect random_rect_aspect(Random& rng, double rho) {
    const double s = std::ldexp(1.0, -static_cast<int>(rng.between(1, 7)));
    const auto steps = static_cast<std::int64_t>((rho - 1.0) * 8.0);
    const double l = s * (1.0 + static_cast<double>(rng.between(0, steps)) / 8.0);
    double w = s, h = l;
    if (rng.coin()) std::swap(w, h);
    const double x = rng.dyadic(10) * 1.25 - 0.125, y = rng.dyadic(10) * 1.25 - 0.125;
    return AxisRect::make(x, y, x + w, y + h);
}

// Property-check helpers.

// Closed axis-parallel region given by optional bounds on x and y.
struct Region {
    double x_lo = -1e300, x_hi = 1e300, y_lo = -1e300, y_hi = 1e300;
    bool contains(Point p) const { return x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi; }
};

inline bool any_in(const Region& s, std::span<const PointId> ids, std::span<const Point> pts) {
    return std::any_of(ids.begin(), ids.end(), [&](PointId i) { return s.contains(pts[static_cast<std::size_t>(i)]); });
}

// Coordinates on the half-integer grid [0, 2*extent], so ties with cell lines are common.
inline double coord(Random& rng, double extent) { return static_cast<double>(rng.between(0, static_cast<std::int64_t>(2 * extent))) / 2.0; }

inline Region random_half_plane(Random& rng, double extent) {
    Region s;
    const double c = coord(rng, extent);
    switch (rng.between(0, 3)) {
        case 0: s.x_hi = c; break;
        case 1: s.x_lo = c; break;
        case 2: s.y_hi = c; break;
        default: s.y_lo = c; break;
    }
    return s;
}

// Outer box on an integer grid with aspect <= 3, and a sticky proper inner box.
inline Cell random_cell(Random& rng) {
    for (;;) {
        const double w = static_cast<double>(rng.between(2, 12));
        const double h = static_cast<double>(rng.between(2, 12));
        if (std::max(w, h) > 3 * std::min(w, h)) continue;
        const AxisRect outer = AxisRect::make(0, 0, w, h);
        const double x0 = static_cast<double>(rng.between(0, static_cast<std::int64_t>(w) - 1));
        const double y0 = static_cast<double>(rng.between(0, static_cast<std::int64_t>(h) - 1));
        const double x1 = x0 + static_cast<double>(rng.between(1, static_cast<std::int64_t>(w - x0)));
        const double y1 = y0 + static_cast<double>(rng.between(1, static_cast<std::int64_t>(h - y0)));
        const AxisRect inner = AxisRect::make(x0, y0, x1, y1);
        if (inner == outer || !is_sticky(inner, outer) || aspect_ratio(inner) > 3) continue;
        return {outer, inner};
    }
}

inline std::vector<Point> random_points(Random& rng, const AxisRect& box, int n) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({coord(rng, box.x_hi), coord(rng, box.y_hi)});
    return pts;
}

inline std::vector<PointId> assigned(const Cell& c, std::span<const Point> pts) {
    std::vector<PointId> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (assigned_to_cell(c, c.outer, pts[i])) out.push_back(static_cast<PointId>(i));
    }
    return out;
}

// Largest number of crossed cells in any antichain of the subtree at v.
inline std::size_t max_crossed_antichain(const BBDTree& t, NodeId v, const std::vector<bool>& crossed) {
    const BBDNode& n = t.node(v);
    const std::size_t here = crossed[static_cast<std::size_t>(v)] ? 1 : 0;
    if (n.is_leaf()) return here;
    return std::max(here, max_crossed_antichain(t, n.children[0], crossed) +
                              max_crossed_antichain(t, n.children[1], crossed));
}

// Star-shaped polygon around the origin: k vertices at increasing angles.
inline SimplePolygon random_star(Random& rng, int k) {
    std::vector<Point> v;
    for (int i = 0; i < k; ++i) {
        const double angle = (i + 0.2 + 0.6 * rng.unit()) * 2 * M_PI / k;
        const double r = 0.5 + rng.unit();
        v.push_back({std::ldexp(std::round(std::ldexp(r * std::cos(angle), 10)), -10),
                     std::ldexp(std::round(std::ldexp(r * std::sin(angle), 10)), -10)});
    }
    return SimplePolygon::make(v);
}

inline Point sample_in(Random& rng, const SimplePolygon& poly) {
    const AxisRect b = poly.bounding_box();
    for (;;) {
        const Point p{b.x_lo + rng.unit() * b.width(), b.y_lo + rng.unit() * b.height()};
        if (poly.contains(p)) return p;
    }
}

// Smallest hitting set by enumerating subsets in order of size.
inline std::size_t exhaustive_minimum(const HittingInstance& inst) {
    const std::size_t n = inst.num_points;
    std::vector<std::uint32_t> masks;
    for (const auto& s : inst.sets) {
        std::uint32_t m = 0;
        for (PointId p : s) m |= 1U << p;
        masks.push_back(m);
    }
    std::size_t best = n + 1;
    for (std::uint32_t sub = 0; sub < (1U << n); ++sub) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(sub));
        if (size >= best) continue;
        if (std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & sub) != 0; })) best = size;
    }
    return best;
}

inline HittingInstance random_instance(Random& rng, std::size_t n, std::size_t m) {
    std::vector<std::vector<PointId>> sets;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<PointId> s;
        const auto k = rng.between(1, 4);
        for (int j = 0; j < k; ++j) s.push_back(static_cast<PointId>(rng.between(0, static_cast<std::int64_t>(n) - 1)));
        sets.push_back(s);
    }
    return reduce_sets(n, sets);
}

}  // namespace testing_support
